#include <gtest/gtest.h>

#include "bbc/exact.hpp"
#include "bbc/generators.hpp"
#include "bbc/io.hpp"
#include "oracles.hpp"

using namespace bbc;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

void expect_optimal(const BackboneInstance& inst, int value) {
  auto r = exact_bbc(inst);
  ASSERT_TRUE(r.exact);
  EXPECT_EQ(r.optimum, value);
  EXPECT_EQ(r.lower_bound, value);
  EXPECT_EQ(r.upper_bound, value);
  auto rep = verify_backbone_colouring(inst, r.witness);
  EXPECT_TRUE(rep.valid);
  EXPECT_EQ(rep.span, value);
}

}  // namespace

TEST(ExactBbc, SmallExamples) {
  expect_optimal(parse_instance("p bbc 3 2 2 2\nb 1 2\nb 2 3\n"), 3);
  expect_optimal(parse_instance("p bbc 3 3 1 2\ne 1 2\ne 2 3\ne 1 3\nb 1 2\n"), 3);
  expect_optimal(parse_instance("p bbc 2 1 1 2\nb 1 2\n"), 3);
  expect_optimal(parse_instance("p bbc 2 1 1 3\nb 1 2\n"), 4);
  expect_optimal(BackboneInstance(Graph(3), std::vector<Edge>{}, 2), 1);
  expect_optimal(BackboneInstance(Graph(0), std::vector<Edge>{}, 2), 0);
}

TEST(ExactBbc, LowerBoundFamilyNeedsFiveColoursPerThree) {
  expect_optimal(gen_lower_bound_family(1), 5);
}

TEST(ExactBbc, QOneIsChromaticNumber) {
  auto k4 = complete(4);
  expect_optimal(BackboneInstance(k4, k4.edges(), 1), 4);
  EXPECT_EQ(exact_chromatic_number(k4).optimum, 4);
}

TEST(ExactCbc, SmallExamples) {
  auto p3 = parse_instance("p bbc 3 2 2 2\nb 1 2\nb 2 3\n");
  auto r = exact_cbc(p3);
  ASSERT_TRUE(r.exact);
  EXPECT_EQ(r.optimum, 4);
  EXPECT_TRUE(verify_circular_colouring(p3, r.witness, 4).valid);
  auto k2 = parse_instance("p bbc 2 1 1 2\nb 1 2\n");
  EXPECT_EQ(exact_cbc(k2).optimum, 4);
  EXPECT_EQ(brute_force_cbc(k2), 4);
}

TEST(BruteForce, SmallExamples) {
  EXPECT_EQ(brute_force_bbc(parse_instance("p bbc 2 1 1 2\nb 1 2\n")), 3);
  EXPECT_EQ(brute_force_bbc(parse_instance("p bbc 2 1 1 3\nb 1 2\n")), 4);
  EXPECT_THROW(brute_force_bbc(BackboneInstance(Graph(9), std::vector<Edge>{}, 2)), PreconditionError);
}

TEST(ExactBbc, ZeroBudgetStillReturnsValidUpperBound) {
  auto inst = generate(GeneratorSpec{HostKind::chordal, 60, 7, 5, 1, 2, BackboneKind::full, 3});
  auto r = exact_bbc(inst, SolverOptions{1e-9});
  EXPECT_LE(r.lower_bound, r.upper_bound);
  EXPECT_TRUE(verify_backbone_colouring(inst, r.witness).valid);
  EXPECT_EQ(r.witness.span(), r.upper_bound);
}

TEST(ExactBbc, MatchesBruteForceOnRandomInstances) {
  SplitMix64 rng(99);
  for (int t = 0; t < 150; ++t) {
    const int n = rng.between(1, 6);
    auto g = oracle::random_graph(n, rng.between(2, 6), 8, rng);
    auto h = oracle::random_edge_subset(g, 1, 2, rng);
    BackboneInstance inst(g, h, rng.between(1, 3));
    auto r = exact_bbc(inst);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.optimum, brute_force_bbc(inst)) << serialize_instance(inst);
    auto c = exact_cbc(inst);
    ASSERT_TRUE(c.exact);
    EXPECT_EQ(c.optimum, brute_force_cbc(inst)) << serialize_instance(inst);
    EXPECT_TRUE(oracle::valid_circular(g, inst.backbone(), inst.q(), c.optimum, c.witness.values()));
    // Circular and linear spans sandwich each other.
    EXPECT_LE(r.optimum, c.optimum);
    EXPECT_LE(c.optimum, r.optimum + inst.q() - 1);
  }
}

TEST(Mad, KnownValues) {
  EXPECT_EQ(exact_mad(complete(4)).value, Rational(3));
  Graph p4(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(exact_mad(p4).value, Rational(3, 2));
  Graph c4(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(exact_mad(c4).value, Rational(2));
  Graph claw(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(exact_mad(claw).value, Rational(3, 2));
  Graph k4e(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_EQ(exact_mad(k4e).value, Rational(5, 2));
  EXPECT_EQ(exact_mad(Graph(3)).value, Rational(0));
}

TEST(Mad, WitnessAttainsValueAndMatchesBruteForce) {
  SplitMix64 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto g = oracle::random_graph(rng.between(1, 10), rng.between(1, 6), 8, rng);
    auto m = exact_mad(g);
    EXPECT_EQ(m.value, brute_force_mad(g).value);
    if (g.edge_count() > 0) {
      EXPECT_EQ(average_degree(g, m.witness), m.value);
    }
  }
}
