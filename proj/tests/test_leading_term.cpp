#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qint/dehn_thurston.hpp"
#include "qint/errors.hpp"
#include "qint/leading_term.hpp"

using namespace qint;

TEST(LeadingTerm, TripleDegreeAtOrigin) {
  // t = o = u = 0 and a positive sign: t*eps + 2o + 1 + eps(1 - u) = 2.
  const int t = 0, o = 0, u = 0, eps = 1;
  EXPECT_EQ(t * eps + 2 * o + 1 + eps * (1 - u), 2);
}

TEST(LeadingTerm, AMoveMatchesBruteForce) {
  for (int twist : {-1, 0, 1, 2}) {
    const auto a = amove_system(twist);
    for (int delta : {-2, 2}) {
      const auto pred = leading_term_oracle(a, delta, 0);
      ASSERT_TRUE(pred.applicable);
      const auto s = dominant_shift(a, 0, delta);
      const auto lt = leading_term(coefficient(a, s));
      ASSERT_TRUE(lt.has_value());
      EXPECT_EQ(lt->degree, pred.degree);
      EXPECT_EQ(lt->coefficient, pred.coefficient());
      const auto [deg, coeff] = oracle::top_term(a, s);
      EXPECT_EQ(deg, pred.degree);
      EXPECT_EQ(coeff, pred.coefficient().get_num().get_si());
    }
  }
}

TEST(LeadingTerm, LoopEdgeIsNotApplicable) {
  const auto a = smove_system();
  EXPECT_FALSE(leading_term_oracle(a, 1, 0).applicable);
  for (int delta : {-1, 1}) {
    const auto rep = loop_sign_degree_relation(a, delta, 0);
    EXPECT_EQ(rep.states, 1U);
    EXPECT_TRUE(rep.holds());
  }
}

TEST(LeadingTerm, PreconditionsThrow) {
  const auto a = amove_system();
  EXPECT_THROW(leading_term_oracle(a, 1, 0), OracleError);
  EXPECT_THROW(leading_term_oracle(a, 4, 0), OracleError);
  EXPECT_THROW(leading_term_oracle(a, 0, 1), OracleError);
  EXPECT_THROW(leading_term_oracle(a, 2, 17), OracleError);
}

TEST(LeadingTerm, CorpusAgreement) {
  int non_loop = 0, loop = 0;
  for (const auto& a : generate_corpus()) {
    const auto p = intersection_profile(a);
    for (int delta = -p.max; delta <= p.max; delta += 2) {
      if (delta == 0) continue;
      const auto pred = leading_term_oracle(a, delta, p.max_edge);
      if (!pred.applicable) {
        ++loop;
        EXPECT_TRUE(loop_sign_degree_relation(a, delta, p.max_edge).holds());
        continue;
      }
      ++non_loop;
      const auto s = dominant_shift(a, p.max_edge, delta);
      const auto lt = leading_term(coefficient(a, s));
      ASSERT_TRUE(lt.has_value());
      EXPECT_EQ(lt->degree, pred.degree);
      EXPECT_EQ(lt->coefficient, pred.coefficient());
    }
  }
  EXPECT_GT(non_loop, 0);
  EXPECT_GT(loop, 0);
}

TEST(LeadingTerm, LiteralParityFormFailsWithSwifts) {
  // Loop edge with two points and swifts (0, 1): the two positive/negative
  // states differ in degree by 2 and have opposite signs, which the
  // half-degree form predicts and a plain degree-parity form does not.
  auto surf = std::make_shared<const SurfaceModel>(standard_surface(2, "dumbbell"));
  const auto a = build_arc_system(surf, {{{0, 2}}, {{0, 1}}, {}});
  const auto rep = loop_sign_degree_relation(a, 0, 0);
  EXPECT_TRUE(rep.holds());
  EXPECT_GT(rep.literal_failures, 0U);
}
