#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qint/surface.hpp"

namespace qint {

/// Points of the multicurve on one boundary curve, in order along it.
struct CurvePointList {
  int edge = 0;
  int side = 0;  // 0: alpha_e, 1: alpha'_e
  std::vector<int> points;
};

/// Over- and undercrossing of one come-back pattern on a pants piece.
struct CrossingPair {
  int over = 0;
  int under = 0;
  int pants = 0;
};

/// Arc in a pants piece. end1 is an on-curve point; end2 is an on-curve
/// point on a different boundary of the piece or a crossing point.
struct PantsArc {
  int pants = 0;
  int end1 = 0;
  int end2 = 0;
};

/// Arc crossing the annulus of an edge, from alpha_e to alpha'_e.
struct AnnulusArc {
  int edge = 0;
  int end_alpha = 0;
  int end_alpha_prime = 0;
  int swift = 0;
};

/// Multicurve in Dehn-Thurston position, stored combinatorially.
struct ArcSystem {
  std::shared_ptr<const SurfaceModel> surface;
  std::vector<CurvePointList> on_curve_points;
  std::vector<CrossingPair> crossing_pairs;
  std::vector<PantsArc> pants_arcs;
  std::vector<AnnulusArc> annulus_arcs;
  /// Closed components isotopic to alpha_e; they never meet P.
  std::map<int, int> parallel_components;

  /// Points on (edge, side), empty if none are listed.
  const std::vector<int>& points_on(int edge, int side) const;
};

struct IntersectionProfile {
  std::map<int, int> per_edge;  // I(gamma, alpha_e) for every edge
  int total = 0;
  int max = 0;
  int max_edge = 0;  // smallest edge id attaining max
  int m_gamma = 0;   // edges with nonzero intersection
};

/// Every broken ArcSystem invariant, with ids. Empty iff the system is a
/// multicurve in Dehn-Thurston position over a valid surface.
ValidationReport validate_arc_system(const ArcSystem& a);

/// Throws ValidationError on an invalid system.
IntersectionProfile intersection_profile(const ArcSystem& a);

/// Number of closed components traced through the arcs (parallel
/// components excluded). Throws ValidationError on an invalid system.
int count_cycles(const ArcSystem& a);

/// Minimal-position arc counts on a pair of pants with boundary counts
/// (n1, n2, n3). x[i][j] counts arcs between boundaries i and j; at most
/// one boundary carries come-backs.
struct PantsPattern {
  int x12 = 0;
  int x13 = 0;
  int x23 = 0;
  int comeback_boundary = -1;  // 0, 1 or 2; -1 when there are none
  int comebacks = 0;

  int between(int i, int j) const;
};

/// Throws ParityError on an odd total, DomainError on a negative count.
PantsPattern build_pants_pattern(int n1, int n2, int n3);

/// Separates closed components parallel to pants curves.
std::pair<ArcSystem, std::map<int, int>> split_parallel(const ArcSystem& a);

}  // namespace qint
