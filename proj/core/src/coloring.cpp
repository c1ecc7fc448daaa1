#include "qint/coloring.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qint/errors.hpp"

namespace qint {

namespace {

// Color triple seen at each vertex, loops counted twice.
template <typename T, typename Lookup>
std::vector<std::array<T, 3>> vertex_triples(const DualGraph& graph, Lookup&& lookup) {
  std::vector<std::array<T, 3>> out;
  out.reserve(graph.vertices.size());
  for (const auto& v : graph.vertices) {
    std::array<T, 3> t{};
    for (int i = 0; i < 3; ++i) t[i] = lookup(v.half_edges.at(i));
    out.push_back(t);
  }
  return out;
}

template <typename T>
bool strict_triangle(const std::array<T, 3>& t) {
  return t[0] < t[1] + t[2] && t[1] < t[0] + t[2] && t[2] < t[0] + t[1];
}

bool vertex_ok(int r, const std::array<int, 3>& t) {
  const int sum = t[0] + t[1] + t[2];
  return sum < 2 * r && sum % 2 == 1 && strict_triangle(t);
}

}  // namespace

bool is_admissible(const DualGraph& graph, int r, const std::map<int, int>& values) {
  for (const auto& e : graph.edges) {
    auto it = values.find(e.id);
    if (it == values.end() || it->second < 1 || it->second > r - 1) return false;
  }
  for (const auto& t : vertex_triples<int>(graph, [&](int e) { return values.at(e); })) {
    if (!vertex_ok(r, t)) return false;
  }
  return true;
}

bool in_limit_region(const DualGraph& graph, const LimitPoint& point) {
  for (const auto& e : graph.edges) {
    auto it = point.values.find(e.id);
    if (it == point.values.end() || it->second <= 0 || it->second >= 1) return false;
  }
  for (const auto& t : vertex_triples<Rational>(graph, [&](int e) { return point.values.at(e); })) {
    if (t[0] + t[1] + t[2] >= 2 || !strict_triangle(t)) return false;
  }
  return true;
}

std::vector<AdmissibleColoring> enumerate_colorings(const DualGraph& graph, int r) {
  if (r < 3) throw DomainError("r must be at least 3, got " + std::to_string(r));
  const int n = graph.num_edges();
  std::vector<int> ids = graph.edge_ids();
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[ids[i]] = i;

  // A vertex is checked as soon as its last incident edge (in id order) is colored.
  std::vector<std::vector<std::array<int, 3>>> checks_at(n);
  for (const auto& v : graph.vertices) {
    std::array<int, 3> idx{};
    int last = 0;
    for (int i = 0; i < 3; ++i) {
      idx[i] = pos.at(v.half_edges.at(i));
      last = std::max(last, idx[i]);
    }
    checks_at[last].push_back(idx);
  }

  std::vector<AdmissibleColoring> out;
  std::vector<int> colors(n, 0);
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == n) {
      AdmissibleColoring c;
      c.r = r;
      for (int k = 0; k < n; ++k) c.values[ids[k]] = colors[k];
      out.push_back(std::move(c));
      return;
    }
    for (int col = 1; col <= r - 1; ++col) {
      colors[i] = col;
      bool ok = true;
      for (const auto& idx : checks_at[i]) {
        if (!vertex_ok(r, {colors[idx[0]], colors[idx[1]], colors[idx[2]]})) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

long long dim_count(const DualGraph& graph, int r) {
  return static_cast<long long>(enumerate_colorings(graph, r).size());
}

std::string DiagonalEigenvalue::symbolic() const {
  if (factors.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out << " * ";
    out << "(-2cos(pi*" << factors[i].color << "/" << factors[i].r << "))";
    if (factors[i].power != 1) out << "^" << factors[i].power;
  }
  return out.str();
}

DiagonalEigenvalue diagonal_eigenvalue(const AdmissibleColoring& c, const std::map<int, int>& multiplicities) {
  DiagonalEigenvalue ev;
  ev.value = 1.0;
  for (const auto& [edge, color] : c.values) {
    auto it = multiplicities.find(edge);
    if (it == multiplicities.end()) throw DomainError("no multiplicity for edge " + std::to_string(edge));
    if (it->second < 0) throw DomainError("negative multiplicity on edge " + std::to_string(edge));
    if (it->second == 0) continue;
    ev.factors.push_back({color, c.r, it->second});
    // cos vanishes exactly at color = r/2; the libm value there is ~1e-16.
    const double factor = 2 * color == c.r ? 0.0 : -2.0 * std::cos(std::numbers::pi * color / c.r);
    ev.value *= std::pow(factor, it->second);
  }
  return ev;
}

LimitPoint tau_embed(const DualGraph& graph, const AdmissibleColoring& c) {
  assert(is_admissible(graph, c.r, c.values));
  (void)graph;
  LimitPoint p;
  for (const auto& [edge, color] : c.values) p.values[edge] = Rational(color, c.r);
  for (auto& [edge, q] : p.values) q.canonicalize();
  return p;
}

}  // namespace qint
