#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace oracle {

long long count_colorings(const qint::DualGraph& g, int r) {
  const int n = g.num_edges();
  std::vector<int> c(n, 1);
  long long count = 0;
  while (true) {
    bool ok = true;
    for (const auto& v : g.vertices) {
      std::vector<int> cols;
      for (int e : v.half_edges) cols.push_back(c[*g.edge_index(e)]);
      const int sum = cols[0] + cols[1] + cols[2];
      ok = ok && sum % 2 == 1 && sum < 2 * r;
      ok = ok && cols[0] < cols[1] + cols[2] && cols[1] < cols[0] + cols[2] && cols[2] < cols[0] + cols[1];
    }
    if (ok) ++count;
    int i = 0;
    while (i < n && c[i] == r - 1) c[i++] = 1;
    if (i == n) break;
    ++c[i];
  }
  return count;
}

double verlinde(int genus, int r) {
  double sum = 0;
  for (int j = 1; j < r; ++j) sum += std::pow(std::sin(j * std::numbers::pi / r), 2 - 2 * genus);
  return std::pow(r / 2.0, genus - 1) * sum;
}

namespace {

std::multiset<std::pair<int, int>> edge_set(const qint::DualGraph& g, const std::vector<int>& relabel) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& e : g.edges) {
    int u = relabel[*g.vertex_index(e.ends[0])], v = relabel[*g.vertex_index(e.ends[1])];
    out.insert({std::min(u, v), std::max(u, v)});
  }
  return out;
}

}  // namespace

bool isomorphic_by_permutation(const qint::DualGraph& a, const qint::DualGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<int> identity(b.num_vertices());
  for (int i = 0; i < b.num_vertices(); ++i) identity[i] = i;
  const auto target = edge_set(b, identity);
  std::vector<int> perm = identity;
  do {
    if (edge_set(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::vector<qint::ExtRational>> shortest_paths(const qint::PairFunction& f) {
  const std::size_t n = f.size();
  std::vector<std::vector<qint::ExtRational>> d(n, std::vector<qint::ExtRational>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = qint::ExtRational(0L);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (k == j) continue;
          const auto step = qint::min(f.at(k, j), f.at(j, k));
          const auto cand = d[i][k] + step;
          if (cand < d[i][j]) {
            d[i][j] = cand;
            changed = true;
          }
        }
      }
    }
  }
  return d;
}

std::vector<std::map<int, int>> brute_force_states(const qint::ArcSystem& a, const qint::ColorShift& s) {
  std::vector<int> ids;
  for (const auto& l : a.on_curve_points) ids.insert(ids.end(), l.points.begin(), l.points.end());
  for (const auto& c : a.crossing_pairs) {
    ids.push_back(c.over);
    ids.push_back(c.under);
  }
  std::sort(ids.begin(), ids.end());
  std::vector<std::map<int, int>> out;
  const std::size_t n = ids.size();
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    std::map<int, int> st;
    for (std::size_t i = 0; i < n; ++i) st[ids[i]] = (mask >> i) & 1 ? -1 : 1;
    bool ok = true;
    for (const auto& l : a.on_curve_points) {
      int sum = 0;
      for (int p : l.points) sum += st[p];
      ok = ok && sum == s.at(l.edge);
    }
    for (const auto& c : a.crossing_pairs) ok = ok && st[c.over] + st[c.under] == 0;
    for (const auto& y : a.annulus_arcs) ok = ok && st[y.end_alpha] == st[y.end_alpha_prime];
    if (ok) out.push_back(std::move(st));
  }
  return out;
}

Term weight(const qint::ArcSystem& a, const std::map<int, int>& s) {
  std::set<int> overs, unders;
  for (const auto& c : a.crossing_pairs) {
    overs.insert(c.over);
    unders.insert(c.under);
  }
  Term t{1, 0, 0, 0};
  for (const auto& arc : a.pants_arcs) {
    const int s1 = s.at(arc.end1), s2 = s.at(arc.end2);
    // Delta_{s1 s2}; Delta_{--} = -Delta_{++}.
    if (s1 == s2) {
      t.pp += 1;
      if (s1 < 0) t.coeff = -t.coeff;
    } else {
      t.pm += 1;
    }
    if (unders.count(arc.end2)) {
      t.coeff *= s1;
    } else if (overs.count(arc.end2)) {
      t.coeff *= s1 * s2;
      t.z += 2 * s2;
    } else {
      t.coeff *= s1 * s2;
    }
  }
  for (const auto& y : a.annulus_arcs) {
    const int e1 = s.at(y.end_alpha), e2 = s.at(y.end_alpha_prime);
    if (e1 != e2) return {0, 0, 0, 0};
    int sign = 1;
    for (int k = 0; k < std::abs(y.swift + 1); ++k) sign *= e1;
    t.coeff *= sign;
    t.z += y.swift * e1;
  }
  return t;
}

std::complex<double> numeric_sum(const qint::ArcSystem& a, const qint::ColorShift& s, double theta) {
  const auto br = [](double x) { return std::sin(std::numbers::pi * x); };
  const double dpp = std::sqrt(br(1.5 * theta) * br(0.5 * theta)) / br(theta);
  const double dpm = br(0.5 * theta) / br(theta);
  const std::complex<double> z = std::exp(std::complex<double>(0, std::numbers::pi * theta / 2));
  std::complex<double> sum = 0;
  for (const auto& st : brute_force_states(a, s)) {
    const Term t = weight(a, st);
    sum += static_cast<double>(t.coeff) * std::pow(dpp, t.pp) * std::pow(dpm, t.pm) * std::pow(z, t.z);
  }
  return sum;
}

std::pair<int, long long> top_term(const qint::ArcSystem& a, const qint::ColorShift& s) {
  std::map<int, long long> by_degree;
  for (const auto& st : brute_force_states(a, s)) {
    const Term t = weight(a, st);
    if (t.coeff != 0) by_degree[t.z + t.pp] += t.coeff;
  }
  if (by_degree.empty()) return {0, 0};
  return *by_degree.rbegin();
}

}  // namespace oracle
