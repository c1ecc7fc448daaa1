#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qint/errors.hpp"
#include "qint/surface.hpp"

using namespace qint;

TEST(Surface, CatalogShapes) {
  for (int g : {2, 3, 4}) {
    for (const auto& name : catalog_names(g)) {
      const auto s = standard_surface(g, name);
      EXPECT_EQ(s.graph.num_edges(), 3 * g - 3) << name;
      EXPECT_EQ(s.graph.num_vertices(), 2 * g - 2) << name;
      EXPECT_TRUE(validate_graph(s.graph).ok()) << name << validate_graph(s.graph).to_string();
      EXPECT_EQ(s.system.pants.size(), static_cast<std::size_t>(2 * g - 2));
      EXPECT_EQ(s.system.annuli.size(), static_cast<std::size_t>(3 * g - 3));
    }
  }
}

TEST(Surface, UnknownInputsThrow) {
  EXPECT_THROW(standard_surface(1), DomainError);
  EXPECT_THROW(standard_surface(2, "k4"), DomainError);
  EXPECT_THROW(standard_surface(3, "nope"), DomainError);
}

TEST(Surface, LoopHalfEdgesAppearTwice) {
  const auto s = standard_surface(2, "dumbbell");
  EXPECT_TRUE(s.graph.is_loop(0));
  EXPECT_FALSE(s.graph.is_loop(1));
  const auto slots = s.graph.slots(0);
  ASSERT_EQ(slots.size(), 3U);
  int loop_ends = 0;
  for (const auto& h : slots) loop_ends += h.edge == 0 ? 1 : 0;
  EXPECT_EQ(loop_ends, 2);
}

TEST(Surface, ValidationReportsEachBrokenInvariant) {
  auto g = standard_surface(2, "theta").graph;
  g.edges.push_back({7, {0, 5}});
  const auto rep = validate_graph(g);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(rep.has("dangling-edge"));
  EXPECT_TRUE(rep.has("edge-count"));

  auto h = standard_surface(2, "theta").graph;
  h.genus = 1;
  EXPECT_TRUE(validate_graph(h).has("genus"));
  EXPECT_THROW(make_surface(h), ValidationError);
}

TEST(Surface, ElementaryShiftSwapsThetaAndDumbbell) {
  const auto theta = standard_surface(2, "theta").graph;
  const auto dumbbell = standard_surface(2, "dumbbell").graph;
  for (int e : theta.edge_ids()) {
    const auto shifted = elementary_shift(theta, e);
    EXPECT_TRUE(validate_graph(shifted).ok());
    EXPECT_TRUE(are_isomorphic(shifted, dumbbell));
    EXPECT_TRUE(oracle::isomorphic_by_permutation(shifted, dumbbell));
  }
  const auto back = elementary_shift(dumbbell, 1);
  EXPECT_TRUE(are_isomorphic(back, theta));
  EXPECT_THROW(elementary_shift(dumbbell, 0), MoveError);
  EXPECT_THROW(elementary_shift(dumbbell, 9), DomainError);
}

TEST(Surface, IsomorphismAgreesWithPermutationOracle) {
  std::vector<DualGraph> graphs;
  for (int g : {2, 3}) {
    for (const auto& name : catalog_names(g)) graphs.push_back(standard_surface(g, name).graph);
  }
  // Shifted variants add graphs with the same degree data.
  const std::size_t base = graphs.size();
  for (std::size_t i = 0; i < base; ++i) {
    for (int e : graphs[i].edge_ids()) {
      if (!graphs[i].is_loop(e)) graphs.push_back(elementary_shift(graphs[i], e));
    }
  }
  for (const auto& a : graphs) {
    for (const auto& b : graphs) EXPECT_EQ(are_isomorphic(a, b), oracle::isomorphic_by_permutation(a, b));
  }
}

TEST(Surface, DecompositionBoundariesUseBothSides) {
  const auto s = standard_surface(3, "k4");
  std::map<std::pair<int, int>, int> seen;
  for (const auto& p : s.system.pants) {
    for (const auto& b : p.boundary) ++seen[{b.edge, b.side}];
  }
  EXPECT_EQ(seen.size(), 12U);
  for (const auto& [k, n] : seen) EXPECT_EQ(n, 1);
}
