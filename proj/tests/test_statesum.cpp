#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qint/dehn_thurston.hpp"
#include "qint/errors.hpp"
#include "qint/statesum.hpp"

using namespace qint;

namespace {

ColorShift shift(std::initializer_list<std::pair<const int, int>> v) { return ColorShift{std::map<int, int>(v)}; }

std::size_t point_count(const ArcSystem& a) {
  std::size_t n = 2 * a.crossing_pairs.size();
  for (const auto& l : a.on_curve_points) n += l.points.size();
  return n;
}

}  // namespace

TEST(StateSum, ShiftEnumeration) {
  const auto s = enumerate_shifts(smove_system());
  ASSERT_EQ(s.size(), 2U);
  EXPECT_EQ(s[0], shift({{0, -1}, {1, 0}, {2, 0}}));
  EXPECT_EQ(s[1], shift({{0, 1}, {1, 0}, {2, 0}}));
  const auto a = enumerate_shifts(amove_system());
  ASSERT_EQ(a.size(), 3U);
  EXPECT_TRUE(a[1].is_zero());

  auto surf = std::make_shared<const SurfaceModel>(standard_surface(2, "theta"));
  const auto two_edges = build_arc_system(surf, {{{0, 1}, {1, 1}}, {}, {}});
  EXPECT_EQ(enumerate_shifts(two_edges).size(), 4U);
}

TEST(StateSum, StateCountsOfElementaryMoves) {
  EXPECT_EQ(enumerate_states(smove_system(), shift({{0, 1}, {1, 0}, {2, 0}})).size(), 1U);
  EXPECT_EQ(enumerate_states(amove_system(), shift({{0, 2}, {1, 0}, {2, 0}})).size(), 4U);
  EXPECT_EQ(enumerate_states(amove_system(), shift({{0, 0}, {1, 0}, {2, 0}})).size(), 8U);
}

TEST(StateSum, BadShiftThrows) {
  EXPECT_THROW(coefficient(smove_system(), shift({{0, 3}, {1, 0}, {2, 0}})), DomainError);
  EXPECT_THROW(coefficient(smove_system(), shift({{0, 0}, {1, 0}, {2, 0}})), DomainError);
  EXPECT_THROW(enumerate_states(amove_system(), shift({{0, 1}})), DomainError);
}

TEST(StateSum, CapRaisesResourceError) {
  StateSumOptions tight{3};
  EXPECT_THROW(coefficient(amove_system(), shift({{0, 0}, {1, 0}, {2, 0}}), tight), ResourceError);
  EXPECT_NO_THROW(coefficient(amove_system(), shift({{0, 2}, {1, 0}, {2, 0}}), StateSumOptions{4}));
}

TEST(StateSum, WeightRules) {
  AnnulusArc y{0, 1, 2, 1};
  EXPECT_TRUE(arc_weight(y, State{{{1, 1}, {2, -1}}}).is_zero());
  const auto w = arc_weight(y, State{{{1, -1}, {2, -1}}});
  EXPECT_EQ(w.coeff, 1);
  EXPECT_EQ(w.z_pow, -1);

  const auto s = smove_system();
  const auto& arc = s.pants_arcs.front();
  const auto pm = arc_weight(s, arc, State{{{arc.end1, 1}, {arc.end2, -1}}});
  EXPECT_EQ(pm, (WeightMonomial{-1, 0, 1, 0, 0}));
}

TEST(StateSum, AnnulusWeightIsMultiplicative) {
  for (int eps : {-1, 1}) {
    for (int t1 = -5; t1 <= 5; ++t1) {
      for (int t2 = -5; t2 <= 5; ++t2) {
        auto lhs = annulus_weight(t1 + t2, eps);
        lhs.coeff *= eps;
        EXPECT_EQ(lhs, annulus_weight(t1, eps) * annulus_weight(t2, eps));
      }
    }
  }
}

TEST(StateSum, SMoveCoefficients) {
  for (int sign : {-1, 1}) {
    const auto c = coefficient(smove_system(), shift({{0, sign}, {1, 0}, {2, 0}}));
    EXPECT_EQ(c.n_pp, 1);
    EXPECT_EQ(c.n_pm, 0);
    EXPECT_EQ(c.poly.to_string(), "1");
    EXPECT_TRUE(c.up_to_sign);
  }
}

TEST(StateSum, AMoveCoefficientIsSquareOfDifference) {
  for (int t : {-1, 0, 2}) {
    const auto a = amove_system(t);
    for (int sign : {-2, 2}) {
      const auto c = coefficient(a, shift({{0, sign}, {1, 0}, {2, 0}}));
      EXPECT_EQ(c.n_pp, 2);
      EXPECT_EQ(c.n_pm, 2);
      EXPECT_FALSE(c.poly.is_zero());
      // (z^2 - z^-2)^2 up to a monomial in z and a global sign.
      const auto diff = LaurentPolynomial::monomial(2) - LaurentPolynomial::monomial(-2);
      const auto base = diff * diff;
      const int offset = *c.poly.degree() - 4;
      auto expected = base * LaurentPolynomial::monomial(offset, c.poly.leading_coefficient());
      EXPECT_EQ(c.poly, expected) << c.poly.to_string();
    }
  }
}

TEST(StateSum, EmptyCoreHasOnlyTheZeroShift) {
  ArcSystem a;
  a.surface = std::make_shared<const SurfaceModel>(standard_surface(2, "theta"));
  a.parallel_components[0] = 1;
  const auto shifts = enumerate_shifts(a);
  ASSERT_EQ(shifts.size(), 1U);
  EXPECT_TRUE(shifts[0].is_zero());
  EXPECT_EQ(coefficient(a, shifts[0]).poly.to_string(), "1");
}

class CorpusStateSum : public ::testing::TestWithParam<int> {
 protected:
  static const std::vector<ArcSystem>& corpus() {
    static const auto c = generate_corpus();
    return c;
  }
};

TEST_P(CorpusStateSum, MatchesBruteForceOracles) {
  const auto& a = corpus()[GetParam()];
  const bool small = point_count(a) <= 14;
  for (const auto& s : enumerate_shifts(a)) {
    const auto raw = raw_state_sum(a, s);
    const auto c = normalize(raw);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(raw.state_count)), state_count(a, s));
    EXPECT_TRUE(raw.arc_count_consistent);
    EXPECT_EQ(raw.min_pm_2mm, raw.max_pm_2mm);
    EXPECT_TRUE(reconstruction_matches(raw, c));
    for (double theta : {0.2, 1.0 / 3.0, 0.4}) {
      const auto direct = numeric_state_sum(a, s, theta);
      const auto normalized = evaluate_normalized(c, theta);
      EXPECT_LE(relative_error(direct, normalized), 1e-10);
    }
    if (!small) continue;
    const auto states = oracle::brute_force_states(a, s);
    EXPECT_EQ(states.size(), raw.state_count);
    for (double theta : {0.2, 0.4}) {
      const auto direct = oracle::numeric_sum(a, s, theta);
      const auto normalized = evaluate_normalized(c, theta);
      EXPECT_LE(std::abs(direct - normalized), 1e-9 * std::max(1.0, std::abs(direct)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, CorpusStateSum, ::testing::Range(0, 60));

TEST(StateSum, TriangleValuesSatisfyRatio) {
  for (double theta : {0.05, 0.2, 1.0 / 3.0, 0.4, 0.6}) {
    const auto t = triangle_values(theta);
    const auto ratio = t.dpp * t.dpp / (t.dpm * t.dpm);
    const auto expected = qint::triangle_ratio().evaluate(t.z);
    EXPECT_NEAR(ratio, expected.real(), 1e-12);
    EXPECT_NEAR(expected.imag(), 0.0, 1e-12);
    EXPECT_EQ(t.dmm, -t.dpp);
  }
  EXPECT_THROW(triangle_values(0.7), DomainError);
}

TEST(StateSum, CrossingFlipLowersDegree) {
  // Flipping one come-back pair from over-positive to over-negative, all
  // else fixed, drops the state degree by at least 2.
  for (const auto& a : generate_corpus()) {
    if (a.crossing_pairs.empty()) continue;
    const auto shifts = enumerate_shifts(a);
    const auto& s = shifts[shifts.size() / 2];
    for (const auto& st : enumerate_states(a, s)) {
      for (const auto& c : a.crossing_pairs) {
        if (st.at(c.over) != 1) continue;
        State flipped = st;
        flipped.signs[c.over] = -1;
        flipped.signs[c.under] = 1;
        const auto w = total_weight(a, st), wf = total_weight(a, flipped);
        if (w.is_zero() || wf.is_zero()) continue;
        EXPECT_LE(wf.degree(), w.degree() - 2);
      }
    }
  }
}
