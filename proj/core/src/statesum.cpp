#include "qint/statesum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "qint/errors.hpp"

namespace qint {

int ColorShift::at(int edge) const {
  auto it = values.find(edge);
  return it == values.end() ? 0 : it->second;
}

bool ColorShift::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const auto& kv) { return kv.second == 0; });
}

int State::at(int point) const {
  auto it = signs.find(point);
  if (it == signs.end()) throw DomainError("state has no sign for point " + std::to_string(point));
  return it->second;
}

WeightMonomial& WeightMonomial::operator*=(const WeightMonomial& rhs) {
  if (coeff == 0 || rhs.coeff == 0) return *this = zero();
  coeff *= rhs.coeff;
  n_pp += rhs.n_pp;
  n_pm += rhs.n_pm;
  n_mm += rhs.n_mm;
  z_pow += rhs.z_pow;
  return *this;
}

namespace {

enum class EndKind { on_curve, over, under };

WeightMonomial triangle(int s1, int s2) {
  WeightMonomial w;
  if (s1 > 0 && s2 > 0) {
    w.n_pp = 1;
  } else if (s1 < 0 && s2 < 0) {
    w.n_mm = 1;
  } else {
    w.n_pm = 1;
  }
  return w;
}

WeightMonomial pants_weight(EndKind kind, int s1, int s2) {
  WeightMonomial w = triangle(s1, s2);
  switch (kind) {
    case EndKind::on_curve:
      w.coeff = s1 * s2;
      break;
    case EndKind::under:
      w.coeff = s1;
      break;
    case EndKind::over:
      w.coeff = s1 * s2;
      w.z_pow = 2 * s2;
      break;
  }
  return w;
}

/// Arc system with points renumbered densely in increasing id order.
struct DenseSystem {
  struct Pants {
    int p1;
    int p2;
    EndKind kind;
  };
  struct Annulus {
    int p1;
    int p2;
    int swift;
  };
  struct EdgeBlock {
    int edge;
    int count;
    std::vector<int> alpha;        // dense ids on alpha_e
    std::vector<int> alpha_prime;  // partner of alpha[i] on alpha'_e
  };

  std::vector<int> ids;
  std::vector<Pants> pants;
  std::vector<Annulus> annuli;
  std::vector<EdgeBlock> edges;
  std::vector<std::pair<int, int>> crossings;  // (over, under)

  explicit DenseSystem(const ArcSystem& a) {
    for (const auto& list : a.on_curve_points) ids.insert(ids.end(), list.points.begin(), list.points.end());
    for (const auto& c : a.crossing_pairs) {
      ids.push_back(c.over);
      ids.push_back(c.under);
    }
    std::sort(ids.begin(), ids.end());
    std::unordered_map<int, int> index;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) index[ids[i]] = i;

    std::unordered_map<int, EndKind> kinds;
    for (const auto& c : a.crossing_pairs) {
      kinds[c.over] = EndKind::over;
      kinds[c.under] = EndKind::under;
      crossings.emplace_back(index.at(c.over), index.at(c.under));
    }
    for (const auto& arc : a.pants_arcs) {
      auto it = kinds.find(arc.end2);
      pants.push_back({index.at(arc.end1), index.at(arc.end2), it == kinds.end() ? EndKind::on_curve : it->second});
    }
    std::unordered_map<int, int> partner;
    for (const auto& arc : a.annulus_arcs) {
      annuli.push_back({index.at(arc.end_alpha), index.at(arc.end_alpha_prime), arc.swift});
      partner[arc.end_alpha] = arc.end_alpha_prime;
    }
    for (int e : a.surface->graph.edge_ids()) {
      EdgeBlock block{e, 0, {}, {}};
      for (int p : a.points_on(e, 0)) {
        block.alpha.push_back(index.at(p));
        block.alpha_prime.push_back(index.at(partner.at(p)));
      }
      block.count = static_cast<int>(block.alpha.size());
      edges.push_back(std::move(block));
    }
  }

  std::size_t size() const { return ids.size(); }

  WeightMonomial weight(const std::vector<int>& s) const {
    WeightMonomial w;
    for (const auto& arc : pants) w *= pants_weight(arc.kind, s[arc.p1], s[arc.p2]);
    for (const auto& arc : annuli) {
      if (s[arc.p1] != s[arc.p2]) return WeightMonomial::zero();
      w *= annulus_weight(arc.swift, s[arc.p1]);
    }
    return w;
  }

  State to_state(const std::vector<int>& s) const {
    State st;
    for (std::size_t i = 0; i < ids.size(); ++i) st.signs.emplace(ids[i], s[i]);
    return st;
  }

  /// Visits all states of shift sigma; signs are passed as a dense vector.
  template <class F>
  void enumerate(const ColorShift& sigma, F&& visit) const {
    std::vector<int> s(size(), 1);
    enumerate_edge(0, sigma, s, visit);
  }

 private:
  template <class F>
  void enumerate_edge(std::size_t k, const ColorShift& sigma, std::vector<int>& s, F& visit) const {
    if (k == edges.size()) {
      enumerate_crossings(0, s, visit);
      return;
    }
    const auto& block = edges[k];
    const int minus = (block.count - sigma.at(block.edge)) / 2;
    // Walk the subsets of size `minus` in lexicographic order of positions.
    std::vector<int> chosen(minus);
    for (int i = 0; i < minus; ++i) chosen[i] = i;
    while (true) {
      for (int i = 0; i < block.count; ++i) {
        s[block.alpha[i]] = 1;
        s[block.alpha_prime[i]] = 1;
      }
      for (int i : chosen) {
        s[block.alpha[i]] = -1;
        s[block.alpha_prime[i]] = -1;
      }
      enumerate_edge(k + 1, sigma, s, visit);
      int i = minus - 1;
      while (i >= 0 && chosen[i] == block.count - minus + i) --i;
      if (i < 0) break;
      ++chosen[i];
      for (int j = i + 1; j < minus; ++j) chosen[j] = chosen[j - 1] + 1;
    }
  }

  template <class F>
  void enumerate_crossings(std::size_t k, std::vector<int>& s, F& visit) const {
    if (k == crossings.size()) {
      visit(s);
      return;
    }
    for (int over : {1, -1}) {
      s[crossings[k].first] = over;
      s[crossings[k].second] = -over;
      enumerate_crossings(k + 1, s, visit);
    }
  }
};

BigInt binomial(int n, int k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

void check_cap(const ArcSystem& a, const ColorShift& s, const StateSumOptions& options) {
  const BigInt count = state_count(a, s);
  if (count > BigInt(std::to_string(options.state_cap))) {
    throw ResourceError("state count " + count.get_str() + " exceeds cap " + std::to_string(options.state_cap));
  }
}

}  // namespace

std::vector<ColorShift> enumerate_shifts(const ArcSystem& a) {
  const auto profile = intersection_profile(a);
  std::vector<ColorShift> out{ColorShift{}};
  for (const auto& [edge, count] : profile.per_edge) {
    std::vector<ColorShift> next;
    for (const auto& partial : out) {
      for (int v = -count; v <= count; v += 2) {
        ColorShift extended = partial;
        extended.values[edge] = v;
        next.push_back(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

void check_shift(const ArcSystem& a, const ColorShift& s) {
  const auto profile = intersection_profile(a);
  for (const auto& [edge, v] : s.values) {
    if (!profile.per_edge.contains(edge)) throw DomainError("shift names unknown edge " + std::to_string(edge));
  }
  for (const auto& [edge, count] : profile.per_edge) {
    const int v = s.at(edge);
    if (std::abs(v) > count || (count - v) % 2 != 0) {
      throw DomainError("shift " + std::to_string(v) + " on edge " + std::to_string(edge) +
                        " is incompatible with intersection " + std::to_string(count));
    }
  }
}

BigInt state_count(const ArcSystem& a, const ColorShift& s) {
  check_shift(a, s);
  const auto profile = intersection_profile(a);
  BigInt count = 1;
  count <<= static_cast<mp_bitcnt_t>(a.crossing_pairs.size());
  for (const auto& [edge, n] : profile.per_edge) count *= binomial(n, (n + s.at(edge)) / 2);
  return count;
}

void for_each_state(const ArcSystem& a, const ColorShift& s, const std::function<void(const State&)>& visit,
                    const StateSumOptions& options) {
  check_cap(a, s, options);
  const DenseSystem dense(a);
  dense.enumerate(s, [&](const std::vector<int>& signs) { visit(dense.to_state(signs)); });
}

std::vector<State> enumerate_states(const ArcSystem& a, const ColorShift& s, const StateSumOptions& options) {
  std::vector<State> out;
  for_each_state(a, s, [&](const State& st) { out.push_back(st); }, options);
  return out;
}

WeightMonomial annulus_weight(int t, int eps) {
  WeightMonomial w;
  w.coeff = (eps < 0 && (t + 1) % 2 != 0) ? -1 : 1;
  w.z_pow = t * eps;
  return w;
}

WeightMonomial arc_weight(const ArcSystem& a, const PantsArc& arc, const State& s) {
  EndKind kind = EndKind::on_curve;
  for (const auto& c : a.crossing_pairs) {
    if (c.over == arc.end2) kind = EndKind::over;
    if (c.under == arc.end2) kind = EndKind::under;
  }
  return pants_weight(kind, s.at(arc.end1), s.at(arc.end2));
}

WeightMonomial arc_weight(const AnnulusArc& arc, const State& s) {
  const int s1 = s.at(arc.end_alpha);
  if (s1 != s.at(arc.end_alpha_prime)) return WeightMonomial::zero();
  return annulus_weight(arc.swift, s1);
}

WeightMonomial total_weight(const ArcSystem& a, const State& s) {
  WeightMonomial w;
  for (const auto& arc : a.pants_arcs) w *= arc_weight(a, arc, s);
  for (const auto& arc : a.annulus_arcs) w *= arc_weight(arc, s);
  return w;
}

RawStateSum raw_state_sum(const ArcSystem& a, const ColorShift& s, const StateSumOptions& options) {
  check_cap(a, s, options);
  const DenseSystem dense(a);
  RawStateSum raw;
  raw.shift = s;
  raw.pants_arc_count = static_cast<int>(a.pants_arcs.size());
  std::vector<int> best;
  dense.enumerate(s, [&](const std::vector<int>& signs) {
    const WeightMonomial w = dense.weight(signs);
    ++raw.state_count;
    if (w.is_zero()) return;
    if (w.n_pp + w.n_pm + w.n_mm != raw.pants_arc_count) raw.arc_count_consistent = false;
    const int invariant = w.n_pm + 2 * w.n_mm;
    if (best.empty()) {
      raw.min_pm_2mm = raw.max_pm_2mm = invariant;
    } else {
      raw.min_pm_2mm = std::min(raw.min_pm_2mm, invariant);
      raw.max_pm_2mm = std::max(raw.max_pm_2mm, invariant);
    }
    if (best.empty() || w.n_pm > raw.reference_n_pm || (w.n_pm == raw.reference_n_pm && signs < best)) {
      best = signs;
      raw.reference_n_pm = w.n_pm;
    }
    raw.terms[{w.n_pp, w.n_pm, w.n_mm, w.z_pow}] += w.coeff;
  });
  raw.reference = dense.to_state(best);
  std::erase_if(raw.terms, [](const auto& kv) { return kv.second == 0; });
  return raw;
}

NormalizedCoefficient normalize(const RawStateSum& raw) {
  NormalizedCoefficient c;
  c.shift = raw.shift;
  c.state_count = raw.state_count;
  c.reference = raw.reference;
  c.n_pm = raw.reference_n_pm;
  c.n_pp = raw.pants_arc_count - c.n_pm;
  std::vector<LaurentPolynomial> ratio_powers{LaurentPolynomial(1)};
  for (const auto& [key, coeff] : raw.terms) {
    const auto [n_pp, n_pm, n_mm, z_pow] = key;
    const int gap = c.n_pm - n_pm;
    if (gap < 0 || gap % 2 != 0) throw Error("n_pm parity is not constant across states");
    const auto k = static_cast<std::size_t>(gap / 2);
    while (ratio_powers.size() <= k) ratio_powers.push_back(ratio_powers.back() * triangle_ratio());
    const long long signed_coeff = n_mm % 2 == 0 ? coeff : -coeff;
    c.poly += ratio_powers[k] * LaurentPolynomial::monomial(z_pow, Rational(static_cast<long>(signed_coeff)));
  }
  return c;
}

NormalizedCoefficient coefficient(const ArcSystem& a, const ColorShift& s, const StateSumOptions& options) {
  return normalize(raw_state_sum(a, s, options));
}

bool is_nonzero(const ArcSystem& a, const ColorShift& s, const StateSumOptions& options) {
  return !coefficient(a, s, options).poly.is_zero();
}

bool reconstruction_matches(const RawStateSum& raw, const NormalizedCoefficient& c) {
  // Pairs (A, B) stand for A + rho B.
  LaurentPolynomial raw_a, raw_b;
  for (const auto& [key, coeff] : raw.terms) {
    const auto [n_pp, n_pm, n_mm, z_pow] = key;
    const int rho_power = n_pp + n_mm;
    const Rational value(static_cast<long>(n_mm % 2 == 0 ? coeff : -coeff));
    const auto term = triangle_ratio().pow(static_cast<unsigned>(rho_power / 2)) * LaurentPolynomial::monomial(z_pow, value);
    (rho_power % 2 == 0 ? raw_a : raw_b) += term;
  }
  if (c.n_pp + c.n_pm != raw.pants_arc_count || c.n_pp < 0) return false;
  const auto scaled = triangle_ratio().pow(static_cast<unsigned>(c.n_pp / 2)) * c.poly;
  if (c.n_pp % 2 == 0) return raw_a == scaled && raw_b.is_zero();
  return raw_a.is_zero() && raw_b == scaled;
}

TriangleValues triangle_values(double theta) {
  if (!(theta > 0 && theta < 2.0 / 3.0)) throw DomainError("theta must lie in (0, 2/3)");
  const auto bracket = [](double x) { return std::sin(std::numbers::pi * x); };
  TriangleValues t;
  t.z = std::polar(1.0, std::numbers::pi * theta / 2);
  t.dpp = std::sqrt(bracket(1.5 * theta) * bracket(0.5 * theta)) / bracket(theta);
  t.dmm = -t.dpp;
  t.dpm = bracket(0.5 * theta) / bracket(theta);
  return t;
}

std::complex<double> evaluate(const WeightMonomial& w, const TriangleValues& t) {
  if (w.is_zero()) return 0.0;
  return static_cast<double>(w.coeff) * std::pow(t.dpp, w.n_pp) * std::pow(t.dpm, w.n_pm) * std::pow(t.dmm, w.n_mm) *
         std::pow(t.z, w.z_pow);
}

NumericSum numeric_state_sum(const ArcSystem& a, const ColorShift& s, double theta, const StateSumOptions& options) {
  check_cap(a, s, options);
  const DenseSystem dense(a);
  const TriangleValues t = triangle_values(theta);
  NumericSum out;
  dense.enumerate(s, [&](const std::vector<int>& signs) {
    const auto w = evaluate(dense.weight(signs), t);
    out.value += w;
    out.magnitude += std::abs(w);
  });
  return out;
}

double relative_error(const NumericSum& sum, std::complex<double> other) {
  const double diff = std::abs(sum.value - other);
  const double size = std::abs(sum.value);
  const double scale = size >= 1e-8 * sum.magnitude ? size : sum.magnitude;
  return scale == 0 ? diff : diff / scale;
}

std::complex<double> evaluate_normalized(const NormalizedCoefficient& c, double theta) {
  const TriangleValues t = triangle_values(theta);
  return std::pow(t.dpp, c.n_pp) * std::pow(t.dpm, c.n_pm) * c.poly.evaluate(t.z);
}

}  // namespace qint
