#pragma once

#include <map>
#include <string>
#include <vector>

#include "qint/rational.hpp"
#include "qint/surface.hpp"

namespace qint {

/// r-admissible coloring: edge id -> color in {1, ..., r-1}. Indexes a TQFT
/// basis vector.
struct AdmissibleColoring {
  int r = 0;
  std::map<int, int> values;
  friend bool operator==(const AdmissibleColoring&, const AdmissibleColoring&) = default;
};

/// tau = c / r, a point of the open limit region U.
struct LimitPoint {
  std::map<int, Rational> values;
};

/// Parity, 2r bound and strict triangle inequalities at every vertex, each
/// color in 1..r-1. Loop edges count twice at their vertex.
bool is_admissible(const DualGraph& graph, int r, const std::map<int, int>& values);

/// Membership in U: components in (0,1), sum < 2 and strict triangle
/// inequalities at every vertex.
bool in_limit_region(const DualGraph& graph, const LimitPoint& point);

/// All r-admissible colorings, lexicographic in edge-id order. Throws
/// DomainError for r < 3.
std::vector<AdmissibleColoring> enumerate_colorings(const DualGraph& graph, int r);

/// Number of admissible colorings (dimension of the TQFT space).
long long dim_count(const DualGraph& graph, int r);

struct EigenFactor {
  int color = 0;
  int r = 0;
  int power = 0;
};

/// Eigenvalue of the curve operator of a multicurve made of curves parallel
/// to pants curves, on the basis vector of c.
struct DiagonalEigenvalue {
  double value = 0.0;
  /// Product of (-2 cos(pi * color / r))^power; factors with power 0 omitted.
  std::vector<EigenFactor> factors;
  std::string symbolic() const;
};

/// Evaluated in double precision; every factor is accurate to a few ulps,
/// so the product carries relative error below 1e-14 per factor.
DiagonalEigenvalue diagonal_eigenvalue(const AdmissibleColoring& c, const std::map<int, int>& multiplicities);

LimitPoint tau_embed(const DualGraph& graph, const AdmissibleColoring& c);

}  // namespace qint
