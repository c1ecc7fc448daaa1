#include "qint/surface.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qint/errors.hpp"

namespace qint {

namespace {

DualGraph graph_from_edge_list(int genus, int num_vertices, const std::vector<std::pair<int, int>>& ends) {
  DualGraph g;
  g.genus = genus;
  g.vertices.resize(num_vertices);
  for (int v = 0; v < num_vertices; ++v) g.vertices[v].id = v;
  for (int e = 0; e < static_cast<int>(ends.size()); ++e) {
    auto [u, v] = ends[e];
    g.edges.push_back({e, {u, v}});
    g.vertices[u].half_edges.push_back(e);
    g.vertices[v].half_edges.push_back(e);
  }
  return g;
}

std::vector<std::pair<int, int>> chain_edges(int genus) {
  const int n = 2 * genus - 2;
  std::vector<std::pair<int, int>> ends{{0, 0}};
  for (int k = 0; k + 1 < genus; ++k) {
    ends.emplace_back(2 * k, 2 * k + 1);
    if (k + 2 < genus) {
      ends.emplace_back(2 * k + 1, 2 * k + 2);
      ends.emplace_back(2 * k + 1, 2 * k + 2);
    }
  }
  ends.emplace_back(n - 1, n - 1);
  return ends;
}

std::vector<std::pair<int, int>> ring_edges(int genus) {
  const int n = 2 * genus - 2;
  std::vector<std::pair<int, int>> ends;
  for (int k = 0; k + 1 < genus; ++k) {
    ends.emplace_back(2 * k, 2 * k + 1);
    ends.emplace_back(2 * k, 2 * k + 1);
    ends.emplace_back(2 * k + 1, (2 * k + 2) % n);
  }
  return ends;
}

using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency_of(const DualGraph& g) {
  const int n = g.num_vertices();
  Adjacency adj(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges) {
    auto iu = g.vertex_index(e.ends[0]);
    auto iv = g.vertex_index(e.ends[1]);
    if (!iu || !iv) continue;
    if (*iu == *iv) {
      adj[*iu][*iu] += 1;
    } else {
      adj[*iu][*iv] += 1;
      adj[*iv][*iu] += 1;
    }
  }
  return adj;
}

// Per-vertex signature: loop count then sorted off-diagonal multiplicities.
std::vector<int> vertex_signature(const Adjacency& adj, int v) {
  std::vector<int> sig;
  for (int w = 0; w < static_cast<int>(adj.size()); ++w) {
    if (w != v && adj[v][w] > 0) sig.push_back(adj[v][w]);
  }
  std::sort(sig.begin(), sig.end());
  sig.insert(sig.begin(), adj[v][v]);
  return sig;
}

}  // namespace

std::optional<int> DualGraph::edge_index(int edge_id) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), edge_id,
                             [](const GraphEdge& e, int id) { return e.id < id; });
  if (it == edges.end() || it->id != edge_id) return std::nullopt;
  return static_cast<int>(it - edges.begin());
}

std::optional<int> DualGraph::vertex_index(int vertex_id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), vertex_id,
                             [](const GraphVertex& v, int id) { return v.id < id; });
  if (it == vertices.end() || it->id != vertex_id) return std::nullopt;
  return static_cast<int>(it - vertices.begin());
}

const GraphEdge& DualGraph::edge(int edge_id) const {
  auto i = edge_index(edge_id);
  if (!i) throw DomainError("unknown edge id " + std::to_string(edge_id));
  return edges[*i];
}

const GraphVertex& DualGraph::vertex(int vertex_id) const {
  auto i = vertex_index(vertex_id);
  if (!i) throw DomainError("unknown vertex id " + std::to_string(vertex_id));
  return vertices[*i];
}

bool DualGraph::is_loop(int edge_id) const {
  const auto& e = edge(edge_id);
  return e.ends[0] == e.ends[1];
}

std::vector<HalfEdge> DualGraph::slots(int vertex_id) const {
  const auto& v = vertex(vertex_id);
  std::vector<HalfEdge> out;
  std::set<int> seen_loop;
  for (int e : v.half_edges) {
    const auto& edge_rec = edge(e);
    int end = 0;
    if (edge_rec.ends[0] == edge_rec.ends[1]) {
      end = seen_loop.insert(e).second ? 0 : 1;
    } else {
      end = edge_rec.ends[0] == vertex_id ? 0 : 1;
    }
    out.push_back({e, end});
  }
  return out;
}

std::vector<int> DualGraph::edge_ids() const {
  std::vector<int> ids;
  ids.reserve(edges.size());
  for (const auto& e : edges) ids.push_back(e.id);
  return ids;
}

void DualGraph::sort_by_id() {
  std::sort(vertices.begin(), vertices.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
}

const PantsPiece& DecompositionSystem::pants_piece(int id) const {
  for (const auto& p : pants) {
    if (p.id == id) return p;
  }
  throw DomainError("unknown pants piece " + std::to_string(id));
}

bool ValidationReport::has(const std::string& kind) const {
  return std::any_of(issues.begin(), issues.end(), [&](const auto& i) { return i.kind == kind; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& i : issues) out << i.kind << ": " << i.message << "\n";
  return out.str();
}

std::vector<std::string> catalog_names(int genus) {
  std::vector<std::string> names{"chain", "ring"};
  if (genus == 2) {
    names.insert(names.begin(), {"theta", "dumbbell"});
  } else if (genus == 3) {
    names.insert(names.begin(), {"k4", "star"});
  }
  return names;
}

SurfaceModel standard_surface(int genus, const std::string& name) {
  if (genus < 2) throw DomainError("genus must be at least 2, got " + std::to_string(genus));
  const int n = 2 * genus - 2;
  DualGraph g;
  if (name == "chain" || (genus == 2 && name == "dumbbell")) {
    g = graph_from_edge_list(genus, n, chain_edges(genus));
  } else if (name == "ring" || (genus == 2 && name == "theta")) {
    g = graph_from_edge_list(genus, n, ring_edges(genus));
  } else if (genus == 3 && name == "k4") {
    g = graph_from_edge_list(genus, n, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  } else if (genus == 3 && name == "star") {
    g = graph_from_edge_list(genus, n, {{0, 1}, {1, 1}, {0, 2}, {2, 2}, {0, 3}, {3, 3}});
  } else {
    throw DomainError("no catalog surface '" + name + "' in genus " + std::to_string(genus));
  }
  return make_surface(std::move(g), name);
}

DecompositionSystem decomposition_of(const DualGraph& graph) {
  DecompositionSystem sys;
  for (const auto& v : graph.vertices) {
    auto s = graph.slots(v.id);
    if (s.size() != 3) throw ValidationError("vertex " + std::to_string(v.id) + " is not trivalent");
    PantsPiece piece;
    piece.id = v.id;
    for (int i = 0; i < 3; ++i) piece.boundary[i] = {s[i].edge, s[i].end};
    sys.pants.push_back(piece);
  }
  for (const auto& e : graph.edges) sys.annuli.push_back({e.id});
  return sys;
}

SurfaceModel make_surface(DualGraph graph, std::string name) {
  graph.sort_by_id();
  auto report = validate_graph(graph);
  if (!report.ok()) throw ValidationError("invalid dual graph:\n" + report.to_string());
  SurfaceModel s;
  s.name = std::move(name);
  s.system = decomposition_of(graph);
  s.graph = std::move(graph);
  return s;
}

ValidationReport validate_graph(const DualGraph& graph) {
  ValidationReport rep;
  const int g = graph.genus;
  if (g < 2) rep.add("genus", "genus " + std::to_string(g) + " < 2");

  std::set<int> vids, eids;
  for (const auto& v : graph.vertices) {
    if (!vids.insert(v.id).second) rep.add("duplicate-vertex", "vertex id " + std::to_string(v.id));
  }
  for (const auto& e : graph.edges) {
    if (!eids.insert(e.id).second) rep.add("duplicate-edge", "edge id " + std::to_string(e.id));
    for (int v : e.ends) {
      if (!vids.count(v)) {
        rep.add("dangling-edge", "edge " + std::to_string(e.id) + " ends at unknown vertex " + std::to_string(v));
      }
    }
  }

  if (graph.num_edges() != 3 * g - 3) {
    rep.add("edge-count", "|E| = " + std::to_string(graph.num_edges()) + " != 3g-3 = " + std::to_string(3 * g - 3));
  }
  if (graph.num_vertices() != 2 * g - 2) {
    rep.add("vertex-count",
            "|V| = " + std::to_string(graph.num_vertices()) + " != 2g-2 = " + std::to_string(2 * g - 2));
  }

  // Degrees from the edge list; banding must list exactly the same half-edges.
  std::map<int, int> degree;
  std::map<std::pair<int, int>, int> expected;
  for (const auto& e : graph.edges) {
    for (int v : e.ends) {
      degree[v] += 1;
      expected[{v, e.id}] += 1;
    }
  }
  for (const auto& v : graph.vertices) {
    if (degree[v.id] != 3) {
      rep.add("degree", "vertex " + std::to_string(v.id) + " has degree " + std::to_string(degree[v.id]));
    }
    std::map<int, int> listed;
    for (int e : v.half_edges) listed[e] += 1;
    std::set<int> keys;
    for (const auto& [e, c] : listed) keys.insert(e);
    for (const auto& [key, c] : expected) {
      if (key.first == v.id) keys.insert(key.second);
    }
    for (int e : keys) {
      int want = expected.count({v.id, e}) ? expected.at({v.id, e}) : 0;
      int have = listed.count(e) ? listed.at(e) : 0;
      if (want != have) {
        rep.add("banding", "vertex " + std::to_string(v.id) + " lists edge " + std::to_string(e) + " " +
                               std::to_string(have) + " times, expected " + std::to_string(want));
      }
    }
  }

  // Connectivity by union-find over vertex ids.
  if (!graph.vertices.empty()) {
    std::map<int, int> parent;
    for (int v : vids) parent[v] = v;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : graph.edges) {
      if (vids.count(e.ends[0]) && vids.count(e.ends[1])) parent[find(e.ends[0])] = find(e.ends[1]);
    }
    std::set<int> roots;
    for (int v : vids) roots.insert(find(v));
    if (roots.size() > 1) {
      rep.add("disconnected", "graph has " + std::to_string(roots.size()) + " components");
    }
  }
  return rep;
}

DualGraph elementary_shift(const DualGraph& graph, int edge_id) {
  const auto& e = graph.edge(edge_id);
  if (e.ends[0] == e.ends[1]) {
    throw MoveError("edge " + std::to_string(edge_id) + " is a loop; only S-moves act there");
  }
  const int u = e.ends[0];
  const int v = e.ends[1];

  auto rotated = [&](int vertex) {
    auto s = graph.slots(vertex);
    auto it = std::find_if(s.begin(), s.end(), [&](const HalfEdge& h) { return h.edge == edge_id; });
    std::rotate(s.begin(), it, s.end());
    return s;
  };
  auto su = rotated(u);  // (e, a, b)
  auto sv = rotated(v);  // (e, c, d)
  if (su.size() != 3 || sv.size() != 3) throw ValidationError("elementary_shift needs trivalent endpoints");

  DualGraph out = graph;
  auto& edges = out.edges;
  const HalfEdge b = su[2];
  const HalfEdge c = sv[1];
  edges[*out.edge_index(b.edge)].ends[b.end] = v;
  edges[*out.edge_index(c.edge)].ends[c.end] = u;

  out.vertices[*out.vertex_index(u)].half_edges = {edge_id, su[1].edge, c.edge};
  out.vertices[*out.vertex_index(v)].half_edges = {edge_id, b.edge, sv[2].edge};
  return out;
}

bool are_isomorphic(const DualGraph& a, const DualGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  const int n = a.num_vertices();
  const auto adj_a = adjacency_of(a);
  const auto adj_b = adjacency_of(b);
  std::vector<std::vector<int>> sig_a(n), sig_b(n);
  for (int i = 0; i < n; ++i) {
    sig_a[i] = vertex_signature(adj_a, i);
    sig_b[i] = vertex_signature(adj_b, i);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int i) {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || sig_a[i] != sig_b[j]) continue;
      bool consistent = adj_a[i][i] == adj_b[j][j];
      for (int k = 0; k < i && consistent; ++k) consistent = adj_a[i][k] == adj_b[j][map[k]];
      if (!consistent) continue;
      map[i] = j;
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    map[i] = -1;
    return false;
  };
  return extend(0);
}

}  // namespace qint
