#pragma once

#include <optional>
#include <vector>

#include "qint/leading_term.hpp"
#include "qint/statesum.hpp"

namespace qint {

/// Number of nonzero shifts whose limit coefficient does not vanish.
/// Parallel components are split off first; they never change the count.
/// This is a lower bound for the quantum intersection number at finite r:
/// a vanishing limit does not force the finite-r coefficient to vanish.
int quantum_count(const ArcSystem& a, const StateSumOptions& options = {});

struct BoundsReport {
  int n_lim = 0;
  int genus = 0;
  int total = 0;               // I(gamma, P)
  Rational lower;              // I / (3g - 3)
  BigInt upper;                // (I + 1)^(3g - 3) - 1
  int max_bound = 0;           // max_e I(gamma, alpha_e)
  BigInt two_pow;              // 2^(edges met), informational only
  bool lower_ok = false;
  bool upper_ok = false;
  bool max_ok = false;
  bool two_pow_ok = false;     // not part of passed()

  bool passed() const { return lower_ok && upper_ok && max_ok; }
};

BoundsReport bounds_report(const ArcSystem& a, const StateSumOptions& options = {});

struct FamilyWitness {
  int delta = 0;
  ColorShift shift;
  bool nonzero = false;
  std::optional<LeadingTerm> leading;
};

/// Nonvanishing of the dominant shifts: for every delta != 0 with
/// |delta| <= M and delta = M mod 2, the coefficient of the shift that is
/// delta on the dominant edge and I_e elsewhere must be nonzero.
struct FamilyReport {
  int dominant_edge = 0;
  int max = 0;
  std::vector<FamilyWitness> witnesses;
  std::vector<int> falsified;  // deltas whose coefficient vanished
  bool vacuous() const { return max == 0; }
  bool passed() const { return falsified.empty(); }
};

FamilyReport verify_dominant_family(const ArcSystem& a, const StateSumOptions& options = {});

}  // namespace qint
