#include "qint/quantum.hpp"

namespace qint {

int quantum_count(const ArcSystem& a, const StateSumOptions& options) {
  const ArcSystem core = split_parallel(a).first;
  int count = 0;
  for (const auto& s : enumerate_shifts(core)) {
    if (!s.is_zero() && is_nonzero(core, s, options)) ++count;
  }
  return count;
}

BoundsReport bounds_report(const ArcSystem& a, const StateSumOptions& options) {
  const auto profile = intersection_profile(a);
  BoundsReport r;
  r.n_lim = quantum_count(a, options);
  r.genus = a.surface->graph.genus;
  r.total = profile.total;
  const int curves = 3 * r.genus - 3;
  r.lower = Rational(r.total, curves);
  r.lower.canonicalize();
  mpz_ui_pow_ui(r.upper.get_mpz_t(), static_cast<unsigned long>(r.total + 1), static_cast<unsigned long>(curves));
  r.upper -= 1;
  r.max_bound = profile.max;
  mpz_ui_pow_ui(r.two_pow.get_mpz_t(), 2, static_cast<unsigned long>(profile.m_gamma));
  r.lower_ok = r.lower <= r.n_lim;
  r.upper_ok = r.n_lim <= r.upper;
  r.max_ok = r.max_bound <= r.n_lim;
  // Only meaningful when the curve meets P at all.
  r.two_pow_ok = profile.total == 0 || r.two_pow <= r.n_lim;
  return r;
}

FamilyReport verify_dominant_family(const ArcSystem& a, const StateSumOptions& options) {
  const ArcSystem core = split_parallel(a).first;
  const auto profile = intersection_profile(core);
  FamilyReport report;
  report.max = profile.max;
  report.dominant_edge = profile.max_edge;
  for (int delta = -profile.max; delta <= profile.max; delta += 2) {
    if (delta == 0) continue;
    FamilyWitness w;
    w.delta = delta;
    w.shift = dominant_shift(core, profile.max_edge, delta);
    const auto c = coefficient(core, w.shift, options);
    w.nonzero = !c.poly.is_zero();
    w.leading = leading_term(c);
    if (!w.nonzero) report.falsified.push_back(delta);
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

}  // namespace qint
