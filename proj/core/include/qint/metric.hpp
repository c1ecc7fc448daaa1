#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qint/rational.hpp"

namespace qint {

/// Non-negative rational or +infinity.
class ExtRational {
 public:
  ExtRational() = default;  // +infinity
  ExtRational(const Rational& v) : finite_(true), value_(v) { value_.canonicalize(); }  // NOLINT: implicit on purpose
  ExtRational(long v) : finite_(true), value_(v) {}             // NOLINT
  static ExtRational infinity() { return {}; }

  bool is_finite() const { return finite_; }
  const Rational& value() const { return value_; }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator*(const ExtRational& a, const Rational& k);
  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend bool operator<(const ExtRational& a, const ExtRational& b);
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

  /// "inf" or the canonical rational text.
  std::string to_string() const;
  static ExtRational parse(const std::string& text);

 private:
  bool finite_ = false;
  Rational value_;
};

ExtRational min(const ExtRational& a, const ExtRational& b);

/// f : X x X -> [0, inf] on a finite labelled set. Unset pairs are +inf and
/// the diagonal is always 0.
class PairFunction {
 public:
  PairFunction() = default;
  explicit PairFunction(std::vector<std::string> points);

  const std::vector<std::string>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Throws DomainError on a negative value or an unknown label. Setting a
  /// diagonal entry has no effect.
  void set(std::size_t i, std::size_t j, const ExtRational& v);
  void set(const std::string& x, const std::string& y, const ExtRational& v);
  const ExtRational& at(std::size_t i, std::size_t j) const { return values_[i][j]; }
  const ExtRational& at(const std::string& x, const std::string& y) const;

 private:
  std::vector<std::string> points_;
  std::vector<std::vector<ExtRational>> values_;
};

/// Symmetric pair function with zero diagonal.
struct FiniteMetric {
  std::vector<std::string> points;
  std::vector<std::vector<ExtRational>> d;

  std::size_t size() const { return points.size(); }
  const ExtRational& at(std::size_t i, std::size_t j) const { return d[i][j]; }
  bool is_semi_metric() const;
  /// Semi-metric with d(x, y) > 0 for x != y.
  bool is_metric() const;
  PairFunction as_pair_function() const;
};

/// Largest semi-metric below f: shortest paths for the costs
/// min(f(x, y), f(y, x)), computed with Floyd-Warshall.
FiniteMetric metrify(const PairFunction& f);

struct PropertyCheck {
  std::string name;
  bool checked = false;
  bool passed = true;
  std::string detail;
};

struct MetrificationReport {
  std::vector<PropertyCheck> checks;
  bool passed() const;
  const PropertyCheck* find(const std::string& name) const;
};

/// Permutation of point indices.
using PointPermutation = std::vector<std::size_t>;

/// Checks, for d = metrify(f):
///  a: d is a semi-metric and d <= f;
///  b: every supplied semi-metric m <= f satisfies m <= d;
///  c: if B = min off-diagonal f > 0 then d is a metric;
///  d: d is invariant under each permutation that preserves f;
///  e: if g >= f pointwise then d <= metrify(g).
/// Supplied inputs that violate a hypothesis are reported as such.
MetrificationReport check_metrification_properties(const PairFunction& f, const std::optional<PairFunction>& g = {},
                                                   const std::vector<PointPermutation>& actions = {},
                                                   const std::vector<FiniteMetric>& dominated = {});

struct SimpleGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::optional<std::size_t> index_of(const std::string& label) const;
  bool is_connected() const;
  bool is_tree() const;
};

/// Unit-length shortest paths; unreachable pairs are +inf.
FiniteMetric path_metric(const SimpleGraph& g);

struct PathComparison {
  FiniteMetric d_qt;   // metrification of nu on the declared vertices; an upper bound of the true distance
  FiniteMetric d_pi;
  bool below_nu = true;              // d_qt <= nu pointwise
  bool all_edges_two = false;
  std::optional<bool> below_twice_path;  // d_qt <= 2 d_pi, when all edges carry 2
  std::optional<bool> tree_equality;     // d_qt == 2 d_pi, when additionally the graph is a tree
  bool passed() const;
};

/// Throws DomainError when nu is infinite in both directions of a graph edge
/// or misses a vertex label.
PathComparison compare_quantum_path(const SimpleGraph& pants_graph, const PairFunction& nu);

}  // namespace qint
