#include <gtest/gtest.h>

#include "bbc/structure.hpp"
#include "oracles.hpp"

using namespace bbc;

namespace {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

}  // namespace

TEST(Bipartite, PathSplitsAlternately) {
  auto r = is_bipartite(path(3));
  ASSERT_TRUE(r);
  EXPECT_EQ(r.partition->side_a, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(r.partition->side_b, (std::vector<Vertex>{1}));
}

TEST(Bipartite, TriangleGivesOddCycle) {
  auto r = is_bipartite(complete(3));
  EXPECT_FALSE(r);
  ASSERT_EQ(r.odd_cycle.size() % 2, 1u);
  auto g = complete(3);
  for (std::size_t i = 0; i < r.odd_cycle.size(); ++i)
    EXPECT_TRUE(g.has_edge(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));
}

TEST(Bipartite, OddCycleWitnessOnLongCycle) {
  auto g = cycle(7);
  auto r = is_bipartite(g);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.odd_cycle.size() % 2, 1u);
  for (std::size_t i = 0; i < r.odd_cycle.size(); ++i)
    EXPECT_TRUE(g.has_edge(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));
}

TEST(Bipartite, EdgelessPutsEverythingOnSideA) {
  auto r = is_bipartite(Graph(4));
  ASSERT_TRUE(r);
  EXPECT_EQ(r.partition->side_a.size(), 4u);
  EXPECT_TRUE(r.partition->side_b.empty());
}

TEST(C4, CycleAndCompleteContainC4) {
  auto c4 = is_c4_free(cycle(4));
  EXPECT_FALSE(c4);
  ASSERT_TRUE(c4.witness.has_value());
  auto w = *c4.witness;
  auto g = cycle(4);
  for (int i = 0; i < 4; ++i) {
    EXPECT_TRUE(g.has_edge(w[i], w[(i + 1) % 4]));
  }
  EXPECT_FALSE(is_c4_free(complete(4)));
  EXPECT_TRUE(is_c4_free(complete(3)));
  EXPECT_TRUE(is_c4_free(cycle(5)));
}

TEST(Forest, Recognition) {
  EXPECT_TRUE(is_forest(path(5)));
  EXPECT_TRUE(is_forest(Graph(3)));
  EXPECT_FALSE(is_forest(cycle(3)));
}

TEST(Components, DisjointUnion) {
  Graph g(3, std::vector<Edge>{{0, 1}});
  auto parts = connected_components(g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(parts[1], (std::vector<Vertex>{2}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(Graph(0)));
}

TEST(Structure, AgreesWithOraclesOnRandomGraphs) {
  SplitMix64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.between(1, 9);
    const int num = rng.between(1, 5);
    auto g = oracle::random_graph(n, num, 8, rng);
    EXPECT_EQ(static_cast<bool>(is_bipartite(g)), oracle::bipartite(g));
    EXPECT_EQ(static_cast<bool>(is_c4_free(g)), oracle::c4_free(g));
    EXPECT_EQ(is_forest(g), oracle::forest(g));
    auto b = is_bipartite(g);
    if (b)
      for (auto [u, v] : g.edges()) {
        EXPECT_NE(b.partition->side[u], b.partition->side[v]);
      }
  }
}
