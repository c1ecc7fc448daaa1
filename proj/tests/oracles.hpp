#pragma once

// Independent reference implementations used only by the tests. They favour
// obviousness over speed and share no code paths with the library beyond
// the plain data types.

#include <complex>
#include <map>
#include <vector>

#include "qint/curve.hpp"
#include "qint/metric.hpp"
#include "qint/statesum.hpp"
#include "qint/surface.hpp"

namespace oracle {

/// Every tuple in [1, r-1]^E checked against odd vertex sums, 2r bound and strict
/// triangle inequalities at each vertex.
long long count_colorings(const qint::DualGraph& g, int r);

/// Verlinde formula for the SU(2) space dimension at level r.
double verlinde(int genus, int r);

/// Isomorphism of edge multisets by trying every vertex permutation.
bool isomorphic_by_permutation(const qint::DualGraph& a, const qint::DualGraph& b);

/// All-pairs shortest paths by repeated relaxation until nothing changes.
std::vector<std::vector<qint::ExtRational>> shortest_paths(const qint::PairFunction& f);

/// Signs for every point, enumerated over all 2^N vectors and filtered by
/// the state conditions (shift sums, opposite crossing signs, equal signs
/// across annulus arcs).
std::vector<std::map<int, int>> brute_force_states(const qint::ArcSystem& a, const qint::ColorShift& s);

/// Term of a state weight in the ring Z[z^{+-1}, Dpp, Dpm] after Dmm = -Dpp.
struct Term {
  int coeff;
  int pp;  // power of Dpp (including former Dmm)
  int pm;
  int z;
};

/// Weight of a state transcribed arc by arc from the weight rules.
Term weight(const qint::ArcSystem& a, const std::map<int, int>& s);

/// Sum over brute-force states, evaluated at theta from the sine formulas.
std::complex<double> numeric_sum(const qint::ArcSystem& a, const qint::ColorShift& s, double theta);

/// Brute-force top term on the raw degree scale: the maximal state degree
/// and the summed sign of the states reaching it (0 when they cancel).
std::pair<int, long long> top_term(const qint::ArcSystem& a, const qint::ColorShift& s);

}  // namespace oracle
