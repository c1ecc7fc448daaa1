#pragma once

#include <cstdint>
#include <optional>

#include "qint/statesum.hpp"

namespace qint {

/// Shift that is delta on e0 and I_e on every other edge.
ColorShift dominant_shift(const ArcSystem& a, int e0, int delta);

/// Top term of a state sum on the raw degree scale, where Dpp and Dmm
/// count as z and Dpm as 1: degree = deg(poly) + n_pp.
struct LeadingTerm {
  int degree = 0;
  Rational coefficient;
};

/// nullopt when the polynomial vanishes.
std::optional<LeadingTerm> leading_term(const NormalizedCoefficient& c);

/// Predicted top term of the dominant-shift state sum, built from the
/// maximal states: all over-crossings positive, and the l = (I_e0 - delta)/2
/// negative points of alpha_e0 placed on the annulus arcs of lowest
/// complexity t_y - u_y.
struct LeadingTermPrediction {
  bool applicable = false;  // false when e0 is a loop edge
  int degree = 0;
  int sign = 1;
  BigInt count;  // number of maximal states
  Rational coefficient() const { return Rational(count) * sign; }
};

/// Throws OracleError unless e0 attains the maximal edge intersection,
/// |delta| <= I_e0 with matching parity, and I_e0 >= 1.
LeadingTermPrediction leading_term_oracle(const ArcSystem& a, int delta, int e0);

/// Sign/degree check on a loop edge over the states whose over-crossings
/// are all positive. With s_ref the first such state, the half-degree form
/// sign(s) sign(s_ref) = (-1)^((deg s - deg s_ref)/2) is checked, and the
/// stricter form sign(s) = (-1)^(deg s + B) for a single constant B.
struct SignDegreeReport {
  std::uint64_t states = 0;
  bool degrees_same_parity = true;
  std::uint64_t half_degree_failures = 0;
  std::uint64_t literal_failures = 0;
  int top_degree = 0;
  bool holds() const { return degrees_same_parity && half_degree_failures == 0; }
};

SignDegreeReport loop_sign_degree_relation(const ArcSystem& a, int delta, int e0,
                                           const StateSumOptions& options = {});

}  // namespace qint
