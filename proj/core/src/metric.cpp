#include "qint/metric.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "qint/errors.hpp"

namespace qint {

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (!a.finite_ || !b.finite_) return ExtRational::infinity();
  return ExtRational(Rational(a.value_ + b.value_));
}

ExtRational operator*(const ExtRational& a, const Rational& k) {
  Rational factor(k);
  factor.canonicalize();
  if (!a.finite_) return factor == 0 ? ExtRational(0L) : ExtRational::infinity();
  return ExtRational(Rational(a.value_ * factor));
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

bool operator<(const ExtRational& a, const ExtRational& b) {
  if (!a.finite_) return false;
  if (!b.finite_) return true;
  return a.value_ < b.value_;
}

std::string ExtRational::to_string() const { return finite_ ? value_.get_str() : "inf"; }

ExtRational ExtRational::parse(const std::string& text) {
  if (text == "inf") return infinity();
  return ExtRational(parse_rational(text));
}

ExtRational min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }

PairFunction::PairFunction(std::vector<std::string> points) : points_(std::move(points)) {
  std::vector<std::string> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DomainError("duplicate point label");
  values_.assign(points_.size(), std::vector<ExtRational>(points_.size()));
  for (std::size_t i = 0; i < points_.size(); ++i) values_[i][i] = ExtRational(0L);
}

std::optional<std::size_t> PairFunction::index_of(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

void PairFunction::set(std::size_t i, std::size_t j, const ExtRational& v) {
  if (i >= size() || j >= size()) throw DomainError("pair index out of range");
  if (v.is_finite() && v.value() < 0) throw DomainError("negative pair value " + v.to_string());
  if (i != j) values_[i][j] = v;
}

void PairFunction::set(const std::string& x, const std::string& y, const ExtRational& v) {
  const auto i = index_of(x), j = index_of(y);
  if (!i || !j) throw DomainError("unknown point label in pair (" + x + ", " + y + ")");
  set(*i, *j, v);
}

const ExtRational& PairFunction::at(const std::string& x, const std::string& y) const {
  const auto i = index_of(x), j = index_of(y);
  if (!i || !j) throw DomainError("unknown point label in pair (" + x + ", " + y + ")");
  return values_[*i][*j];
}

bool FiniteMetric::is_semi_metric() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(d[i][i] == ExtRational(0L))) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j] < ExtRational(0L) || !(d[i][j] == d[j][i])) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (d[i][k] > d[i][j] + d[j][k]) return false;
      }
    }
  }
  return true;
}

bool FiniteMetric::is_metric() const {
  if (!is_semi_metric()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j && d[i][j] == ExtRational(0L)) return false;
    }
  }
  return true;
}

PairFunction FiniteMetric::as_pair_function() const {
  PairFunction f(points);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) f.set(i, j, d[i][j]);
  }
  return f;
}

FiniteMetric metrify(const PairFunction& f) {
  const std::size_t n = f.size();
  FiniteMetric m;
  m.points = f.points();
  m.d.assign(n, std::vector<ExtRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& v = f.at(i, j);
      if (v.is_finite() && v.value() < 0) throw DomainError("negative pair value " + v.to_string());
      m.d[i][j] = min(v, f.at(j, i));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m.d[i][k].is_finite()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto through = m.d[i][k] + m.d[k][j];
        if (through < m.d[i][j]) m.d[i][j] = through;
      }
    }
  }
  return m;
}

bool MetrificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

const PropertyCheck* MetrificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string pair_text(const std::vector<std::string>& points, std::size_t i, std::size_t j) {
  return "(" + points[i] + ", " + points[j] + ")";
}

}  // namespace

MetrificationReport check_metrification_properties(const PairFunction& f, const std::optional<PairFunction>& g,
                                                   const std::vector<PointPermutation>& actions,
                                                   const std::vector<FiniteMetric>& dominated) {
  const std::size_t n = f.size();
  const FiniteMetric d = metrify(f);
  MetrificationReport report;
  auto fail = [](PropertyCheck& c, std::string detail) {
    if (c.passed) c.detail = std::move(detail);
    c.passed = false;
  };

  PropertyCheck a{"a", true, true, ""};
  if (!d.is_semi_metric()) fail(a, "metrification is not a semi-metric");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d.at(i, j) > f.at(i, j)) fail(a, "d > f at " + pair_text(f.points(), i, j));
    }
  }
  report.checks.push_back(a);

  PropertyCheck b{"b", !dominated.empty(), true, ""};
  for (std::size_t k = 0; k < dominated.size(); ++k) {
    const auto& m = dominated[k];
    if (m.size() != n || !m.is_semi_metric()) {
      fail(b, "input " + std::to_string(k) + " is not a semi-metric on the same points");
      continue;
    }
    bool below_f = true;
    for (std::size_t i = 0; i < n && below_f; ++i) {
      for (std::size_t j = 0; j < n; ++j) below_f = below_f && m.at(i, j) <= f.at(i, j);
    }
    if (!below_f) {
      fail(b, "input " + std::to_string(k) + " is not dominated by f");
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m.at(i, j) > d.at(i, j)) fail(b, "input " + std::to_string(k) + " exceeds d at " + pair_text(f.points(), i, j));
      }
    }
  }
  report.checks.push_back(b);

  PropertyCheck c{"c", false, true, ""};
  ExtRational bound = ExtRational::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) bound = min(bound, f.at(i, j));
    }
  }
  if (n > 1 && bound > ExtRational(0L)) {
    c.checked = true;
    c.detail = "B = " + bound.to_string();
    if (!d.is_metric()) fail(c, "metrification is not a metric although f >= " + bound.to_string());
  }
  report.checks.push_back(c);

  PropertyCheck inv{"d", !actions.empty(), true, ""};
  for (std::size_t k = 0; k < actions.size(); ++k) {
    const auto& p = actions[k];
    bool bijective = p.size() == n;
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; bijective && i < n; ++i) {
      bijective = p[i] < n && !hit[p[i]];
      if (bijective) hit[p[i]] = true;
    }
    if (!bijective) {
      fail(inv, "action " + std::to_string(k) + " is not a permutation");
      continue;
    }
    bool preserves = true;
    for (std::size_t i = 0; i < n && preserves; ++i) {
      for (std::size_t j = 0; j < n; ++j) preserves = preserves && f.at(p[i], p[j]) == f.at(i, j);
    }
    if (!preserves) {
      fail(inv, "action " + std::to_string(k) + " does not preserve f");
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!(d.at(p[i], p[j]) == d.at(i, j))) fail(inv, "action " + std::to_string(k) + " moves d at " + pair_text(f.points(), i, j));
      }
    }
  }
  report.checks.push_back(inv);

  PropertyCheck mono{"e", g.has_value(), true, ""};
  if (g) {
    if (g->points() != f.points()) {
      fail(mono, "g is defined on different points");
    } else {
      bool dominates = true;
      for (std::size_t i = 0; i < n && dominates; ++i) {
        for (std::size_t j = 0; j < n; ++j) dominates = dominates && g->at(i, j) >= f.at(i, j);
      }
      if (!dominates) {
        fail(mono, "g does not dominate f");
      } else {
        const FiniteMetric dg = metrify(*g);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (d.at(i, j) > dg.at(i, j)) fail(mono, "d_f > d_g at " + pair_text(f.points(), i, j));
          }
        }
      }
    }
  }
  report.checks.push_back(mono);
  return report;
}

std::optional<std::size_t> SimpleGraph::index_of(const std::string& label) const {
  auto it = std::find(vertices.begin(), vertices.end(), label);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

bool SimpleGraph::is_connected() const {
  const FiniteMetric m = path_metric(*this);
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (!m.at(0, j).is_finite()) return false;
  }
  return true;
}

bool SimpleGraph::is_tree() const {
  return !vertices.empty() && edges.size() + 1 == vertices.size() && is_connected();
}

FiniteMetric path_metric(const SimpleGraph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : g.edges) {
    if (u >= n || v >= n) throw DomainError("graph edge refers to a missing vertex");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  FiniteMetric m;
  m.points = g.vertices;
  m.d.assign(n, std::vector<ExtRational>(n));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<long> dist(n, -1);
    std::queue<std::size_t> queue;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop();
      for (auto v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push(v);
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (dist[t] >= 0) m.d[s][t] = ExtRational(dist[t]);
    }
  }
  return m;
}

bool PathComparison::passed() const {
  return below_nu && below_twice_path.value_or(true) && tree_equality.value_or(true);
}

PathComparison compare_quantum_path(const SimpleGraph& pants_graph, const PairFunction& nu) {
  const std::size_t n = pants_graph.vertices.size();
  std::vector<std::size_t> where(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = nu.index_of(pants_graph.vertices[i]);
    if (!k) throw DomainError("nu has no value for vertex " + pants_graph.vertices[i]);
    where[i] = *k;
  }
  PairFunction restricted(pants_graph.vertices);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) restricted.set(i, j, nu.at(where[i], where[j]));
  }
  std::vector<std::vector<bool>> is_edge(n, std::vector<bool>(n, false));
  bool all_two = true;
  for (const auto& [u, v] : pants_graph.edges) {
    if (u >= n || v >= n) throw DomainError("graph edge refers to a missing vertex");
    const auto value = min(restricted.at(u, v), restricted.at(v, u));
    if (!value.is_finite()) {
      throw DomainError("nu is undefined on edge (" + pants_graph.vertices[u] + ", " + pants_graph.vertices[v] + ")");
    }
    all_two = all_two && value == ExtRational(2L);
    is_edge[u][v] = is_edge[v][u] = true;
  }

  PathComparison out;
  out.d_qt = metrify(restricted);
  out.d_pi = path_metric(pants_graph);
  out.all_edges_two = all_two;
  bool off_edge_infinite = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.below_nu = out.below_nu && out.d_qt.at(i, j) <= restricted.at(i, j);
      if (i != j && !is_edge[i][j]) off_edge_infinite = off_edge_infinite && !restricted.at(i, j).is_finite();
    }
  }
  if (all_two) {
    bool below = true, equal = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto twice = out.d_pi.at(i, j) * Rational(2);
        below = below && out.d_qt.at(i, j) <= twice;
        equal = equal && out.d_qt.at(i, j) == twice;
      }
    }
    out.below_twice_path = below;
    if (pants_graph.is_tree() && off_edge_infinite) out.tree_equality = equal;
  }
  return out;
}

}  // namespace qint
