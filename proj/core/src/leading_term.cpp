#include "qint/leading_term.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qint/errors.hpp"

namespace qint {

namespace {

void check_dominant(const IntersectionProfile& profile, int delta, int e0) {
  auto it = profile.per_edge.find(e0);
  if (it == profile.per_edge.end()) throw OracleError("unknown edge " + std::to_string(e0));
  const int count = it->second;
  if (count < 1) throw OracleError("edge " + std::to_string(e0) + " does not meet the curve");
  if (count != profile.max) throw OracleError("edge " + std::to_string(e0) + " does not attain the maximal intersection");
  if (std::abs(delta) > count || (count - delta) % 2 != 0) {
    throw OracleError("delta " + std::to_string(delta) + " is incompatible with intersection " + std::to_string(count));
  }
}

}  // namespace

ColorShift dominant_shift(const ArcSystem& a, int e0, int delta) {
  ColorShift s;
  for (const auto& [edge, count] : intersection_profile(a).per_edge) s.values[edge] = edge == e0 ? delta : count;
  return s;
}

std::optional<LeadingTerm> leading_term(const NormalizedCoefficient& c) {
  const auto deg = c.poly.degree();
  if (!deg) return std::nullopt;
  return LeadingTerm{*deg + c.n_pp, c.poly.leading_coefficient()};
}

LeadingTermPrediction leading_term_oracle(const ArcSystem& a, int delta, int e0) {
  const auto profile = intersection_profile(a);
  check_dominant(profile, delta, e0);
  LeadingTermPrediction out;
  if (a.surface->graph.is_loop(e0)) return out;
  out.applicable = true;

  std::set<int> on_e0;
  for (int side = 0; side < 2; ++side) {
    const auto& pts = a.points_on(e0, side);
    on_e0.insert(pts.begin(), pts.end());
  }
  std::set<int> overs, unders;
  State canonical;
  for (const auto& list : a.on_curve_points) {
    for (int p : list.points) canonical.signs[p] = 1;
  }
  for (const auto& c : a.crossing_pairs) {
    overs.insert(c.over);
    unders.insert(c.under);
    canonical.signs[c.over] = 1;
    canonical.signs[c.under] = -1;
  }

  // Arcs away from e0 carry the same weight in every maximal state.
  WeightMonomial fixed;
  std::map<int, const PantsArc*> pants_at;
  for (const auto& arc : a.pants_arcs) {
    const bool touches = on_e0.contains(arc.end1) || on_e0.contains(arc.end2);
    if (!touches) {
      fixed *= arc_weight(a, arc, canonical);
      continue;
    }
    if (on_e0.contains(arc.end1) && on_e0.contains(arc.end2)) {
      throw OracleError("pants arc joins two points of the dominant edge");
    }
    pants_at[on_e0.contains(arc.end1) ? arc.end1 : arc.end2] = &arc;
  }
  for (const auto& arc : a.annulus_arcs) {
    if (arc.edge != e0) fixed *= arc_weight(arc, canonical);
  }

  int overs_total = 0;
  std::vector<int> complexity;
  for (const auto& arc : a.annulus_arcs) {
    if (arc.edge != e0) continue;
    int o = 0, u = 0;
    for (int end : {arc.end_alpha, arc.end_alpha_prime}) {
      const PantsArc* neighbour = pants_at.at(end);
      const int other = neighbour->end1 == end ? neighbour->end2 : neighbour->end1;
      o += overs.contains(other) ? 1 : 0;
      u += unders.contains(other) ? 1 : 0;
    }
    overs_total += o;
    complexity.push_back(arc.swift - u);
  }
  std::sort(complexity.begin(), complexity.end());

  const int m = profile.max;
  const int l = (m - delta) / 2;
  int tau_sum = 0, minus_sum = 0;
  out.sign = fixed.leading_sign();
  for (int i = 0; i < m; ++i) {
    tau_sum += complexity[i];
    if (i < l) {
      minus_sum += complexity[i];
      if ((complexity[i] + 1) % 2 != 0) out.sign = -out.sign;
    }
  }
  out.degree = fixed.degree() + 2 * overs_total + m + delta + tau_sum - 2 * minus_sum;

  out.count = 1;
  if (l > 0) {
    const int threshold = complexity[l - 1];
    const auto below = std::count_if(complexity.begin(), complexity.end(), [&](int t) { return t < threshold; });
    const auto level = std::count(complexity.begin(), complexity.end(), threshold);
    mpz_bin_uiui(out.count.get_mpz_t(), static_cast<unsigned long>(level), static_cast<unsigned long>(l - below));
  }
  return out;
}

SignDegreeReport loop_sign_degree_relation(const ArcSystem& a, int delta, int e0, const StateSumOptions& options) {
  const auto profile = intersection_profile(a);
  check_dominant(profile, delta, e0);
  SignDegreeReport report;
  int ref_degree = 0, ref_sign = 0;
  bool have_top = false;
  for_each_state(
      a, dominant_shift(a, e0, delta),
      [&](const State& s) {
        for (const auto& c : a.crossing_pairs) {
          if (s.at(c.over) != 1) return;
        }
        const WeightMonomial w = total_weight(a, s);
        if (w.is_zero()) return;
        const int deg = w.degree();
        const int sign = w.leading_sign();
        if (report.states++ == 0) {
          ref_degree = deg;
          ref_sign = sign;
        }
        if (!have_top || deg > report.top_degree) report.top_degree = deg;
        have_top = true;
        const int gap = deg - ref_degree;
        if (gap % 2 != 0) {
          report.degrees_same_parity = false;
          return;
        }
        const int relative = sign * ref_sign;
        if (relative != ((gap / 2) % 2 == 0 ? 1 : -1)) ++report.half_degree_failures;
        if (relative != 1) ++report.literal_failures;
      },
      options);
  return report;
}

}  // namespace qint
