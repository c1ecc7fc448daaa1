#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qint/coloring.hpp"
#include "qint/errors.hpp"

using namespace qint;

TEST(Coloring, ThetaAtThree) {
  const auto g = standard_surface(2, "theta").graph;
  const auto cols = enumerate_colorings(g, 3);
  ASSERT_EQ(cols.size(), 4U);
  EXPECT_EQ(cols[0].values, (std::map<int, int>{{0, 1}, {1, 1}, {2, 1}}));
  int with_two = 0;
  for (const auto& c : cols) {
    int twos = 0;
    for (const auto& [e, v] : c.values) twos += v == 2 ? 1 : 0;
    with_two += twos == 2 ? 1 : 0;
  }
  EXPECT_EQ(with_two, 3);
}

TEST(Coloring, DumbbellBridgeForcedAtThree) {
  const auto g = standard_surface(2, "dumbbell").graph;
  const auto cols = enumerate_colorings(g, 3);
  ASSERT_EQ(cols.size(), 4U);
  for (const auto& c : cols) EXPECT_EQ(c.values.at(1), 1);
}

TEST(Coloring, CountsMatchBruteForceAndVerlinde) {
  for (int genus : {2, 3}) {
    for (int r = 3; r <= (genus == 2 ? 8 : 6); ++r) {
      const long long expected = std::llround(oracle::verlinde(genus, r));
      for (const auto& name : catalog_names(genus)) {
        const auto g = standard_surface(genus, name).graph;
        EXPECT_EQ(dim_count(g, r), oracle::count_colorings(g, r)) << name << " r=" << r;
        EXPECT_EQ(dim_count(g, r), expected) << name << " r=" << r;
      }
    }
  }
}

TEST(Coloring, ComplementFailsPredicate) {
  const auto g = standard_surface(2, "theta").graph;
  const int r = 4;
  const auto cols = enumerate_colorings(g, r);
  int admissible = 0;
  for (int a = 1; a < r; ++a) {
    for (int b = 1; b < r; ++b) {
      for (int c = 1; c < r; ++c) admissible += is_admissible(g, r, {{0, a}, {1, b}, {2, c}}) ? 1 : 0;
    }
  }
  EXPECT_EQ(admissible, static_cast<int>(cols.size()));
}

TEST(Coloring, SmallLevelThrows) { EXPECT_THROW(enumerate_colorings(standard_surface(2).graph, 2), DomainError); }

TEST(Coloring, DiagonalEigenvalues) {
  auto ev = [](int r, int color, int power) {
    AdmissibleColoring c{r, {{0, color}, {1, 1}, {2, 1}}};
    return diagonal_eigenvalue(c, {{0, power}, {1, 0}, {2, 0}}).value;
  };
  EXPECT_NEAR(ev(3, 1, 1), -1.0, 1e-14);
  EXPECT_EQ(ev(4, 2, 1), 0.0);
  EXPECT_NEAR(ev(6, 1, 2), 3.0, 1e-14);
  AdmissibleColoring c{3, {{0, 1}, {1, 1}, {2, 1}}};
  EXPECT_THROW(diagonal_eigenvalue(c, {{0, 1}}), DomainError);
}

TEST(Coloring, TauEmbeddingLandsInRegion) {
  for (const auto& name : catalog_names(3)) {
    const auto g = standard_surface(3, name).graph;
    for (const auto& c : enumerate_colorings(g, 6)) EXPECT_TRUE(in_limit_region(g, tau_embed(g, c)));
  }
  const auto theta = standard_surface(2, "theta").graph;
  const auto p = tau_embed(theta, {4, {{0, 2}, {1, 2}, {2, 3}}});
  EXPECT_EQ(p.values.at(0), Rational(1, 2));
  EXPECT_EQ(p.values.at(2), Rational(3, 4));
}
