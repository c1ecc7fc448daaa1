#include "qint/curve.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qint/errors.hpp"

namespace qint {

namespace {

std::string id_str(int id) { return std::to_string(id); }

std::string slot_str(int edge, int side) {
  return (side == 0 ? "alpha_" : "alpha'_") + std::to_string(edge);
}

struct PointLocation {
  bool on_curve = false;
  int edge = 0;
  int side = 0;
  int pair = -1;  // crossing points: index into crossing_pairs
  bool over = false;
};

}  // namespace

const std::vector<int>& ArcSystem::points_on(int edge, int side) const {
  static const std::vector<int> empty;
  for (const auto& list : on_curve_points) {
    if (list.edge == edge && list.side == side) return list.points;
  }
  return empty;
}

int PantsPattern::between(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 0 && j == 1) return x12;
  if (i == 0 && j == 2) return x13;
  if (i == 1 && j == 2) return x23;
  return 0;
}

PantsPattern build_pants_pattern(int n1, int n2, int n3) {
  if (n1 < 0 || n2 < 0 || n3 < 0) throw DomainError("negative intersection count");
  if ((n1 + n2 + n3) % 2 != 0) {
    throw ParityError("odd boundary total " + std::to_string(n1 + n2 + n3) + " on a pants piece");
  }
  const std::array<int, 3> n{n1, n2, n3};
  PantsPattern p;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    if (n[i] > n[j] + n[k]) {
      p.comeback_boundary = i;
      p.comebacks = (n[i] - n[j] - n[k]) / 2;
      // Every point of the two smaller boundaries runs to the dominant one.
      const int xij = n[j];
      const int xik = n[k];
      auto set = [&](int a, int b, int v) {
        if (a > b) std::swap(a, b);
        if (a == 0 && b == 1) p.x12 = v;
        if (a == 0 && b == 2) p.x13 = v;
        if (a == 1 && b == 2) p.x23 = v;
      };
      set(i, j, xij);
      set(i, k, xik);
      set(j, k, 0);
      return p;
    }
  }
  p.x12 = std::max(0, (n1 + n2 - n3) / 2);
  p.x13 = std::max(0, (n1 + n3 - n2) / 2);
  p.x23 = std::max(0, (n2 + n3 - n1) / 2);
  return p;
}

ValidationReport validate_arc_system(const ArcSystem& a) {
  ValidationReport rep;
  if (!a.surface) {
    rep.add("surface", "arc system has no surface");
    return rep;
  }
  const auto& graph = a.surface->graph;
  {
    auto g = validate_graph(graph);
    for (auto& i : g.issues) rep.add("surface-" + i.kind, i.message);
    if (!g.ok()) return rep;
  }
  const auto& sys = a.surface->system;

  // Locate every point id.
  std::map<int, PointLocation> where;
  std::set<std::pair<int, int>> lists_seen;
  for (const auto& list : a.on_curve_points) {
    if (!graph.edge_index(list.edge)) {
      rep.add("unknown-edge", "point list on unknown edge " + id_str(list.edge));
      continue;
    }
    if (list.side != 0 && list.side != 1) {
      rep.add("bad-side", "point list on edge " + id_str(list.edge) + " has side " + id_str(list.side));
      continue;
    }
    if (!lists_seen.insert({list.edge, list.side}).second) {
      rep.add("duplicate-list", "two point lists for " + slot_str(list.edge, list.side));
    }
    for (int p : list.points) {
      if (!where.emplace(p, PointLocation{true, list.edge, list.side, -1, false}).second) {
        rep.add("duplicate-point", "point " + id_str(p) + " listed twice");
      }
    }
  }
  for (std::size_t i = 0; i < a.crossing_pairs.size(); ++i) {
    const auto& cp = a.crossing_pairs[i];
    if (!graph.vertex_index(cp.pants)) {
      rep.add("unknown-pants", "crossing pair " + id_str(static_cast<int>(i)) + " on unknown pants " + id_str(cp.pants));
    }
    if (cp.over == cp.under) {
      rep.add("crossing-pair", "pair " + id_str(static_cast<int>(i)) + " uses point " + id_str(cp.over) + " twice");
      continue;
    }
    for (auto [p, over] : {std::pair{cp.over, true}, std::pair{cp.under, false}}) {
      if (!where.emplace(p, PointLocation{false, 0, 0, static_cast<int>(i), over}).second) {
        rep.add("crossing-pair", "crossing point " + id_str(p) + " reused or also on a curve");
      }
    }
  }

  // Degree bookkeeping.
  std::map<int, int> pants_ends, annulus_ends;
  std::vector<int> pair_arc_slot_edge(a.crossing_pairs.size(), -1);
  std::vector<int> pair_arc_slot_side(a.crossing_pairs.size(), -1);
  std::vector<int> pair_arcs(a.crossing_pairs.size(), 0);
  // Per pants piece: arcs between distinct slots, keyed by slot pair.
  std::map<int, std::map<std::pair<int, int>, int>> between_counts;
  std::map<int, std::map<int, int>> comebacks_at_slot;

  auto slot_of = [&](const PantsPiece& piece, int edge, int side) {
    for (int s = 0; s < 3; ++s) {
      if (piece.boundary[s].edge == edge && piece.boundary[s].side == side) return s;
    }
    return -1;
  };

  for (std::size_t ai = 0; ai < a.pants_arcs.size(); ++ai) {
    const auto& arc = a.pants_arcs[ai];
    const std::string name = "pants arc " + id_str(static_cast<int>(ai));
    if (!graph.vertex_index(arc.pants)) {
      rep.add("unknown-pants", name + " on unknown pants " + id_str(arc.pants));
      continue;
    }
    const auto& piece = sys.pants_piece(arc.pants);
    auto it1 = where.find(arc.end1);
    auto it2 = where.find(arc.end2);
    if (it1 == where.end() || it2 == where.end()) {
      rep.add("unknown-point", name + " has an unknown endpoint");
      continue;
    }
    pants_ends[arc.end1] += 1;
    pants_ends[arc.end2] += 1;
    const auto& l1 = it1->second;
    const auto& l2 = it2->second;
    if (!l1.on_curve) {
      rep.add("arc-ends", name + ": first endpoint " + id_str(arc.end1) + " must lie on a pants curve");
      continue;
    }
    const int s1 = slot_of(piece, l1.edge, l1.side);
    if (s1 < 0) {
      rep.add("arc-ends", name + ": " + slot_str(l1.edge, l1.side) + " is not a boundary of pants " + id_str(arc.pants));
      continue;
    }
    if (l2.on_curve) {
      const int s2 = slot_of(piece, l2.edge, l2.side);
      if (s2 < 0) {
        rep.add("arc-ends", name + ": " + slot_str(l2.edge, l2.side) + " is not a boundary of pants " + id_str(arc.pants));
      } else if (s1 == s2) {
        rep.add("arc-ends", name + " returns to " + slot_str(l1.edge, l1.side) + " without a come-back pair");
      } else {
        between_counts[arc.pants][{std::min(s1, s2), std::max(s1, s2)}] += 1;
      }
      continue;
    }
    const auto& cp = a.crossing_pairs[l2.pair];
    if (cp.pants != arc.pants) {
      rep.add("arc-ends", name + " reaches a crossing of pants " + id_str(cp.pants));
      continue;
    }
    pair_arcs[l2.pair] += 1;
    if (pair_arc_slot_edge[l2.pair] < 0) {
      pair_arc_slot_edge[l2.pair] = l1.edge;
      pair_arc_slot_side[l2.pair] = l1.side;
      comebacks_at_slot[arc.pants][s1] += 1;
    } else if (pair_arc_slot_edge[l2.pair] != l1.edge || pair_arc_slot_side[l2.pair] != l1.side) {
      rep.add("come-back", "crossing pair " + id_str(l2.pair) + " joins two different boundaries");
    }
  }

  std::map<int, int> annulus_count;
  for (std::size_t ai = 0; ai < a.annulus_arcs.size(); ++ai) {
    const auto& arc = a.annulus_arcs[ai];
    const std::string name = "annulus arc " + id_str(static_cast<int>(ai));
    if (!graph.edge_index(arc.edge)) {
      rep.add("unknown-edge", name + " on unknown edge " + id_str(arc.edge));
      continue;
    }
    annulus_count[arc.edge] += 1;
    auto it1 = where.find(arc.end_alpha);
    auto it2 = where.find(arc.end_alpha_prime);
    if (it1 == where.end() || it2 == where.end()) {
      rep.add("unknown-point", name + " has an unknown endpoint");
      continue;
    }
    annulus_ends[arc.end_alpha] += 1;
    annulus_ends[arc.end_alpha_prime] += 1;
    const auto& l1 = it1->second;
    const auto& l2 = it2->second;
    if (!l1.on_curve || l1.edge != arc.edge || l1.side != 0) {
      rep.add("arc-ends", name + ": endpoint " + id_str(arc.end_alpha) + " is not on " + slot_str(arc.edge, 0));
    }
    if (!l2.on_curve || l2.edge != arc.edge || l2.side != 1) {
      rep.add("arc-ends", name + ": endpoint " + id_str(arc.end_alpha_prime) + " is not on " + slot_str(arc.edge, 1));
    }
  }

  for (const auto& [p, loc] : where) {
    const int pe = pants_ends.count(p) ? pants_ends.at(p) : 0;
    const int ae = annulus_ends.count(p) ? annulus_ends.at(p) : 0;
    if (loc.on_curve) {
      if (pe != 1 || ae != 1) {
        rep.add("degree", "on-curve point " + id_str(p) + " has " + id_str(pe) + " pants and " + id_str(ae) +
                              " annulus arc ends (expected 1 and 1)");
      }
    } else if (pe != 1 || ae != 0) {
      rep.add("degree", "crossing point " + id_str(p) + " has degree " + id_str(pe + ae) + " (expected 1)");
    }
  }
  for (std::size_t i = 0; i < a.crossing_pairs.size(); ++i) {
    if (pair_arcs[i] != 2 && !rep.has("degree")) {
      rep.add("come-back", "crossing pair " + id_str(static_cast<int>(i)) + " is not closed by two pants arcs");
    }
  }

  for (const auto& e : graph.edges) {
    const int na = static_cast<int>(a.points_on(e.id, 0).size());
    const int nb = static_cast<int>(a.points_on(e.id, 1).size());
    const int nc = annulus_count.count(e.id) ? annulus_count.at(e.id) : 0;
    if (na != nb || na != nc) {
      rep.add("counts", "edge " + id_str(e.id) + ": |alpha| = " + id_str(na) + ", |alpha'| = " + id_str(nb) +
                            ", annulus arcs = " + id_str(nc));
    }
  }

  // Come-back and parity conditions per pants piece.
  for (const auto& piece : sys.pants) {
    std::array<int, 3> n{};
    for (int s = 0; s < 3; ++s) {
      n[s] = static_cast<int>(a.points_on(piece.boundary[s].edge, piece.boundary[s].side).size());
    }
    if ((n[0] + n[1] + n[2]) % 2 != 0) {
      rep.add("parity", "pants " + id_str(piece.id) + " has odd boundary total " + id_str(n[0] + n[1] + n[2]));
    }
    const auto& cb = comebacks_at_slot[piece.id];
    if (cb.size() > 1) {
      rep.add("come-back", "pants " + id_str(piece.id) + " carries come-backs on more than one boundary");
    }
    for (const auto& [s, count] : cb) {
      const int j = (s + 1) % 3;
      const int k = (s + 2) % 3;
      const auto& bd = piece.boundary[s];
      if (n[s] <= n[j] + n[k]) {
        rep.add("come-back", "pants " + id_str(piece.id) + ": come-backs on " + slot_str(bd.edge, bd.side) +
                                 " need I = " + id_str(n[s]) + " > " + id_str(n[j]) + " + " + id_str(n[k]));
      } else if (between_counts[piece.id][{std::min(j, k), std::max(j, k)}] != 0) {
        rep.add("come-back", "pants " + id_str(piece.id) + ": come-backs on " + slot_str(bd.edge, bd.side) +
                                 " coexist with arcs between the other two boundaries");
      }
    }
  }

  for (const auto& [e, count] : a.parallel_components) {
    if (!graph.edge_index(e)) rep.add("unknown-edge", "parallel components on unknown edge " + id_str(e));
    if (count < 0) rep.add("parallel", "negative parallel count on edge " + id_str(e));
  }
  return rep;
}

IntersectionProfile intersection_profile(const ArcSystem& a) {
  auto rep = validate_arc_system(a);
  if (!rep.ok()) throw ValidationError("invalid arc system:\n" + rep.to_string());
  IntersectionProfile prof;
  bool first = true;
  for (const auto& e : a.surface->graph.edges) {
    const int n = static_cast<int>(a.points_on(e.id, 0).size());
    prof.per_edge[e.id] = n;
    prof.total += n;
    if (n > 0) prof.m_gamma += 1;
    if (first || n > prof.max) {
      prof.max = n;
      prof.max_edge = e.id;
      first = false;
    }
  }
  return prof;
}

int count_cycles(const ArcSystem& a) {
  auto rep = validate_arc_system(a);
  if (!rep.ok()) throw ValidationError("invalid arc system:\n" + rep.to_string());

  // Node per point; a crossing pair links its over and under points.
  std::map<int, std::vector<int>> adj;
  for (const auto& arc : a.pants_arcs) {
    adj[arc.end1].push_back(arc.end2);
    adj[arc.end2].push_back(arc.end1);
  }
  for (const auto& arc : a.annulus_arcs) {
    adj[arc.end_alpha].push_back(arc.end_alpha_prime);
    adj[arc.end_alpha_prime].push_back(arc.end_alpha);
  }
  for (const auto& cp : a.crossing_pairs) {
    adj[cp.over].push_back(cp.under);
    adj[cp.under].push_back(cp.over);
  }
  std::set<int> seen;
  int cycles = 0;
  for (const auto& [start, nbrs] : adj) {
    if (seen.count(start)) continue;
    ++cycles;
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      for (int q : adj[p]) {
        if (seen.insert(q).second) stack.push_back(q);
      }
    }
  }
  return cycles;
}

std::pair<ArcSystem, std::map<int, int>> split_parallel(const ArcSystem& a) {
  ArcSystem core = a;
  core.parallel_components.clear();
  return {std::move(core), a.parallel_components};
}

}  // namespace qint
