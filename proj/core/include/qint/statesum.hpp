#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qint/curve.hpp"
#include "qint/laurent.hpp"
#include "qint/rational.hpp"

namespace qint {

/// Total color shift: one integer per edge id.
struct ColorShift {
  std::map<int, int> values;

  int at(int edge) const;
  bool is_zero() const;
  friend bool operator==(const ColorShift&, const ColorShift&) = default;
  friend auto operator<=>(const ColorShift&, const ColorShift&) = default;
};

/// Sign assignment on on-curve and crossing points.
struct State {
  std::map<int, int> signs;

  int at(int point) const;
  friend bool operator==(const State&, const State&) = default;
};

/// coeff * Dpp^n_pp * Dpm^n_pm * Dmm^n_mm * z^z_pow, with coeff in {-1, 0, 1}.
struct WeightMonomial {
  int coeff = 1;
  int n_pp = 0;
  int n_pm = 0;
  int n_mm = 0;
  int z_pow = 0;

  static WeightMonomial zero() { return {0, 0, 0, 0, 0}; }
  bool is_zero() const { return coeff == 0; }
  WeightMonomial& operator*=(const WeightMonomial& rhs);
  friend WeightMonomial operator*(WeightMonomial a, const WeightMonomial& b) { return a *= b; }
  friend bool operator==(const WeightMonomial&, const WeightMonomial&) = default;

  /// Degree in z once triangle coefficients count as z^1 (Dpp, Dmm) or z^0 (Dpm).
  int degree() const { return z_pow + n_pp + n_mm; }
  /// Sign of the leading coefficient; Dmm counts as negative.
  int leading_sign() const { return (n_mm % 2 == 0) ? coeff : -coeff; }
};

/// Limit coefficient Dpp^n_pp * Dpm^n_pm * poly(z), determined up to a
/// global sign that depends only on the curve.
struct NormalizedCoefficient {
  ColorShift shift;
  int n_pp = 0;
  int n_pm = 0;
  LaurentPolynomial poly;
  std::uint64_t state_count = 0;
  State reference;
  bool up_to_sign = true;
};

struct StateSumOptions {
  std::uint64_t state_cap = std::uint64_t{1} << 24;
};

/// Aggregated raw monomials of one state sum plus bookkeeping.
struct RawStateSum {
  ColorShift shift;
  /// (n_pp, n_pm, n_mm, z_pow) -> summed coefficient.
  std::map<std::array<int, 4>, long long> terms;
  std::uint64_t state_count = 0;
  int pants_arc_count = 0;
  /// Reference state: maximal n_pm, then lexicographically smallest signs by point id.
  State reference;
  int reference_n_pm = 0;
  /// n_pp + n_pm + n_mm equals pants_arc_count for every state.
  bool arc_count_consistent = true;
  /// Range of n_pm + 2 n_mm over the states (equal when constant).
  int min_pm_2mm = 0;
  int max_pm_2mm = 0;
};

/// Every shift compatible with the profile: |s_e| <= I_e, same parity.
/// Lexicographic in edge-id order, ascending values; includes the zero
/// shift when the parity allows it.
std::vector<ColorShift> enumerate_shifts(const ArcSystem& a);

/// Throws DomainError unless s is compatible with the profile of a.
void check_shift(const ArcSystem& a, const ColorShift& s);

/// 2^K * prod_e C(I_e, (I_e + s_e) / 2), K the number of crossing pairs.
BigInt state_count(const ArcSystem& a, const ColorShift& s);

/// Calls visit for every state with possibly nonzero weight. Annulus arcs
/// force equal signs at both ends, so only alpha_e signs are chosen.
void for_each_state(const ArcSystem& a, const ColorShift& s, const std::function<void(const State&)>& visit,
                    const StateSumOptions& options = {});

std::vector<State> enumerate_states(const ArcSystem& a, const ColorShift& s, const StateSumOptions& options = {});

/// Weight of a closed annulus arc with swift t when both ends carry sign eps:
/// eps^(t+1) z^(t eps).
WeightMonomial annulus_weight(int t, int eps);

WeightMonomial arc_weight(const ArcSystem& a, const PantsArc& arc, const State& s);
WeightMonomial arc_weight(const AnnulusArc& arc, const State& s);

/// Product of all arc weights.
WeightMonomial total_weight(const ArcSystem& a, const State& s);

/// Throws ResourceError when the state count exceeds options.state_cap.
RawStateSum raw_state_sum(const ArcSystem& a, const ColorShift& s, const StateSumOptions& options = {});

NormalizedCoefficient normalize(const RawStateSum& raw);

NormalizedCoefficient coefficient(const ArcSystem& a, const ColorShift& s, const StateSumOptions& options = {});

bool is_nonzero(const ArcSystem& a, const ColorShift& s, const StateSumOptions& options = {});

/// Exact check that the normalized form reproduces the raw sum. Both sides
/// are divided by Dpm^(pants arcs) and reduced to A(z) + rho B(z) with
/// rho = Dpp / Dpm and rho^2 = z^2 + 1 + z^-2.
bool reconstruction_matches(const RawStateSum& raw, const NormalizedCoefficient& c);

/// Numeric triangle coefficients at theta, with z = exp(i pi theta / 2).
/// Dpp is real only for 0 < theta < 2/3; other values throw DomainError.
struct TriangleValues {
  std::complex<double> z;
  double dpp = 0;
  double dpm = 0;
  double dmm = 0;
};

TriangleValues triangle_values(double theta);

std::complex<double> evaluate(const WeightMonomial& w, const TriangleValues& t);

/// Direct floating-point state sum. Also returns sum |W(s)| as a scale for
/// relative comparisons when the sum itself nearly cancels.
struct NumericSum {
  std::complex<double> value;
  double magnitude = 0;
};

/// |value - other| relative to |value|, or to the magnitude when the sum
/// cancels below 1e-8 of it.
double relative_error(const NumericSum& sum, std::complex<double> other);

NumericSum numeric_state_sum(const ArcSystem& a, const ColorShift& s, double theta,
                             const StateSumOptions& options = {});

std::complex<double> evaluate_normalized(const NormalizedCoefficient& c, double theta);

}  // namespace qint
