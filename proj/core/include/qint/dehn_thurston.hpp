#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "qint/curve.hpp"

namespace qint {

/// Dehn-Thurston style data for building an arc system: intersection
/// count per pants curve, an integer twist per annulus and parallel
/// components. Edges missing from a map count as 0.
struct DehnThurstonData {
  std::map<int, int> intersections;
  std::map<int, int> twists;
  std::map<int, int> parallels;
};

/// Canonical arc system for the data. Each pants piece gets the
/// build_pants_pattern() arcs; on the annulus of an edge with n points and
/// twist t, the i-th point of alpha_e is joined to point (i + t) mod n of
/// alpha'_e with swift number floor((i + t) / n). Come-back pairs are
/// nested and their first point is the overcrossing.
///
/// Throws ParityError when a pants piece has an odd boundary total.
ArcSystem build_arc_system(std::shared_ptr<const SurfaceModel> surface, const DehnThurstonData& data);

/// Genus-2 dumbbell, one point on the loop edge 0: the curve replacing
/// alpha_0 in an S-move.
ArcSystem smove_system(int swift = 0);

/// Genus-2 theta graph, two points on edge 0 and one come-back pair on
/// each adjacent pants piece: the curve replacing alpha_0 in an A-move.
ArcSystem amove_system(int twist = 0);

struct CorpusOptions {
  std::uint64_t seed = 20240611;
  int count = 60;
  int max_total = 10;
  int max_per_edge = 4;
};

/// Deterministic sample of valid arc systems over the genus-2 and genus-3
/// catalog surfaces with total intersection between 1 and max_total.
/// Roughly a quarter of them carry parallel components.
std::vector<ArcSystem> generate_corpus(const CorpusOptions& options = {});

}  // namespace qint
