// Randomised properties checked against the independent oracles.

#include <gtest/gtest.h>

#include "bbc/bbc.hpp"
#include "oracles.hpp"

using namespace bbc;

namespace {

BackboneInstance random_chordal_instance(SplitMix64& rng, int max_n, BackboneKind kind) {
  GeneratorSpec spec;
  spec.n = rng.between(3, max_n);
  spec.omega = rng.between(2, std::min(spec.n, 6));
  spec.backbone = kind;
  spec.seed = rng.next();
  return generate(spec);
}

}  // namespace

TEST(Properties, EveryAlgorithmOutputPassesTheOracle) {
  SplitMix64 rng(2024);
  for (int t = 0; t < 120; ++t) {
    auto inst = random_chordal_instance(rng, 30, static_cast<BackboneKind>(rng.between(0, 4)));
    auto best = best_colouring(inst);
    EXPECT_TRUE(oracle::valid_backbone(inst.host(), inst.backbone(), 2, best.colouring.values()));
    for (const auto& r : best.reports)
      if (r.applicable) {
        EXPECT_TRUE(r.valid) << r.algorithm << ": " << r.note;
      }
  }
}

TEST(Properties, HeuristicsNeverBeatTheOptimum) {
  SplitMix64 rng(77);
  for (int t = 0; t < 60; ++t) {
    auto inst = random_chordal_instance(rng, 9, static_cast<BackboneKind>(rng.between(1, 4)));
    auto ex = exact_bbc(inst, SolverOptions{0});
    ASSERT_TRUE(ex.exact);
    if (inst.vertex_count() <= 7) {
      EXPECT_EQ(ex.optimum, brute_force_bbc(inst));
    }
    const int omega = oracle::clique_number(inst.host());
    EXPECT_GE(ex.optimum, omega);
    EXPECT_LE(ex.optimum, 2 * omega - 1);
    EXPECT_GE(best_colouring(inst).colouring.span(), ex.optimum);
  }
}

TEST(Properties, DoubleSpacedSpanMatchesOracleCliqueNumber) {
  SplitMix64 rng(3);
  for (int t = 0; t < 60; ++t) {
    auto inst = random_chordal_instance(rng, 25, BackboneKind::full);
    const int q = rng.between(1, 4);
    BackboneInstance with_q(inst.host(), inst.backbone(), q);
    const int omega = oracle::clique_number(inst.host());
    auto col = double_spaced_colouring(with_q);
    EXPECT_EQ(col.span(), q * omega - q + 1);
    EXPECT_TRUE(oracle::valid_backbone(inst.host(), inst.backbone(), q, col.values()));
  }
}

TEST(Properties, IntervalAlgorithmWithinOmegaPlusThree) {
  SplitMix64 rng(11);
  for (int t = 0; t < 150; ++t) {
    GeneratorSpec spec;
    spec.kind = HostKind::interval2;
    spec.length = rng.between(1, 12);
    spec.omega = rng.between(2, 9);
    spec.backbone = rng.coin() ? BackboneKind::bipartite : BackboneKind::forest;
    spec.seed = rng.next();
    auto inst = generate(spec);
    auto col = colour_interval_bipartite(inst);
    EXPECT_TRUE(oracle::valid_backbone(inst.host(), inst.backbone(), 2, col.values())) << spec.describe();
    EXPECT_LE(col.span(), spec.omega + 3) << spec.describe();
  }
}

TEST(Properties, SparseAlgorithmWithinItsBound) {
  SplitMix64 rng(13);
  for (int t = 0; t < 80; ++t) {
    auto inst = random_chordal_instance(rng, 40, rng.coin() ? BackboneKind::forest : BackboneKind::c4free);
    if (inst.backbone().edge_count() == 0) continue;
    const Rational d = exact_mad(inst.backbone()).value;
    auto r = run_sparse_peel(inst, d);
    EXPECT_TRUE(oracle::valid_backbone(inst.host(), inst.backbone(), 2, r.colouring.values()));
    EXPECT_LE(r.report.span, r.report.bound);
  }
}

TEST(Properties, ForestPartitionWithinItsBound) {
  SplitMix64 rng(17);
  for (int t = 0; t < 80; ++t) {
    auto inst = random_chordal_instance(rng, 40, BackboneKind::c4free);
    const int omega = oracle::clique_number(inst.host());
    auto col = colour_forest_partition(inst);
    EXPECT_TRUE(oracle::valid_backbone(inst.host(), inst.backbone(), 2, col.values()));
    EXPECT_LE(col.span(), omega % 2 ? (3 * omega + 7) / 2 : (3 * omega + 8) / 2);
  }
}

TEST(Properties, SerializationRoundTrip) {
  SplitMix64 rng(19);
  for (int t = 0; t < 50; ++t) {
    auto inst = random_chordal_instance(rng, 30, static_cast<BackboneKind>(rng.between(0, 4)));
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
    auto col = greedy_omega_colouring(inst.host());
    EXPECT_EQ(parse_colouring(serialize_colouring(col), inst.vertex_count()), col);
  }
}
