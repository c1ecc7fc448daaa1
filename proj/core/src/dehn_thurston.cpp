#include "qint/dehn_thurston.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "qint/errors.hpp"

namespace qint {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int lookup(const std::map<int, int>& m, int key) {
  auto it = m.find(key);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

ArcSystem build_arc_system(std::shared_ptr<const SurfaceModel> surface, const DehnThurstonData& data) {
  ArcSystem a;
  a.surface = surface;
  const auto& graph = surface->graph;
  int next_id = 0;

  for (const auto& e : graph.edges) {
    const int n = lookup(data.intersections, e.id);
    if (n < 0) throw DomainError("negative intersection count on edge " + std::to_string(e.id));
    for (int side = 0; side < 2; ++side) {
      CurvePointList list{e.id, side, {}};
      for (int i = 0; i < n; ++i) list.points.push_back(next_id++);
      a.on_curve_points.push_back(std::move(list));
    }
  }

  for (const auto& e : graph.edges) {
    const auto& alpha = a.points_on(e.id, 0);
    const auto& alpha_prime = a.points_on(e.id, 1);
    const int n = static_cast<int>(alpha.size());
    const int twist = lookup(data.twists, e.id);
    for (int i = 0; i < n; ++i) {
      const int shifted = i + twist;
      const int j = ((shifted % n) + n) % n;
      a.annulus_arcs.push_back({e.id, alpha[i], alpha_prime[j], floor_div(shifted, n)});
    }
  }

  for (const auto& piece : surface->system.pants) {
    std::array<std::vector<int>, 3> pts;
    for (int s = 0; s < 3; ++s) pts[s] = a.points_on(piece.boundary[s].edge, piece.boundary[s].side);
    const auto pattern = build_pants_pattern(static_cast<int>(pts[0].size()), static_cast<int>(pts[1].size()),
                                             static_cast<int>(pts[2].size()));
    // Boundary s reads: [to s+1] [come-backs] [to s+2]; the block towards
    // s+1 meets the tail block of s+1 in reverse order.
    for (int s = 0; s < 3; ++s) {
      const int next = (s + 1) % 3;
      const int x = pattern.between(s, next);
      const auto& mine = pts[s];
      const auto& theirs = pts[next];
      for (int k = 0; k < x; ++k) {
        a.pants_arcs.push_back({piece.id, mine[k], theirs[theirs.size() - 1 - k]});
      }
    }
    if (pattern.comebacks > 0) {
      const int s = pattern.comeback_boundary;
      const int start = pattern.between(s, (s + 1) % 3);
      const int width = 2 * pattern.comebacks;
      for (int k = 0; k < pattern.comebacks; ++k) {
        const int over = next_id++;
        const int under = next_id++;
        a.crossing_pairs.push_back({over, under, piece.id});
        a.pants_arcs.push_back({piece.id, pts[s][start + k], over});
        a.pants_arcs.push_back({piece.id, pts[s][start + width - 1 - k], under});
      }
    }
  }

  for (const auto& [e, count] : data.parallels) {
    if (count > 0) a.parallel_components[e] = count;
  }
  return a;
}

ArcSystem smove_system(int swift) {
  auto surface = std::make_shared<const SurfaceModel>(standard_surface(2, "dumbbell"));
  return build_arc_system(surface, {{{0, 1}}, {{0, swift}}, {}});
}

ArcSystem amove_system(int twist) {
  auto surface = std::make_shared<const SurfaceModel>(standard_surface(2, "theta"));
  return build_arc_system(surface, {{{0, 2}}, {{0, twist}}, {}});
}

std::vector<ArcSystem> generate_corpus(const CorpusOptions& options) {
  std::vector<std::shared_ptr<const SurfaceModel>> surfaces;
  for (int genus : {2, 3}) {
    for (const auto& name : catalog_names(genus)) {
      if (genus == 2 && (name == "chain" || name == "ring")) continue;  // aliases of dumbbell/theta
      surfaces.push_back(std::make_shared<const SurfaceModel>(standard_surface(genus, name)));
    }
  }

  std::mt19937_64 rng(options.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  std::vector<ArcSystem> out;
  out.reserve(options.count);
  while (static_cast<int>(out.size()) < options.count) {
    const auto& surface = surfaces[out.size() % surfaces.size()];
    const auto& graph = surface->graph;
    DehnThurstonData data;
    int total = 0;
    for (const auto& e : graph.edges) {
      const int n = uniform(0, options.max_per_edge);
      data.intersections[e.id] = n;
      total += n;
    }
    if (total < 1 || total > options.max_total) continue;
    bool parity_ok = true;
    for (const auto& piece : surface->system.pants) {
      int sum = 0;
      for (const auto& b : piece.boundary) sum += data.intersections[b.edge];
      parity_ok = parity_ok && sum % 2 == 0;
    }
    if (!parity_ok) continue;
    for (const auto& e : graph.edges) {
      const int n = data.intersections[e.id];
      data.twists[e.id] = n == 0 ? 0 : uniform(-n, 2 * n);
    }
    if (uniform(0, 3) == 0) data.parallels[graph.edges[uniform(0, graph.num_edges() - 1)].id] = uniform(1, 2);
    out.push_back(build_arc_system(surface, data));
  }
  return out;
}

}  // namespace qint
