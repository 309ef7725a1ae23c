#include <gtest/gtest.h>

#include <limits>
#include <stdexcept>

#include "matchinfo/experiments.hpp"
#include "matchinfo/matching.hpp"
#include "matchinfo/samplers.hpp"
#include "oracles.hpp"

using namespace matchinfo;

namespace {

// A random G(30, 1/2) draw. TranspositionSweep.Cases confirms no vertex pair
// is interchangeable.
Graph asymmetric_graph() {
  RngStream rng(101);
  return oracle::random_graph(30, 0.5, rng);
}

SeedSet planted_seeds(const std::vector<int>& vertices, const Permutation& sigma) {
  SeedSet s;
  for (int v : vertices) s.pairs.emplace_back(v, sigma(v));
  return s;
}

}  // namespace

TEST(SeedSet, Validate) {
  SeedSet ok;
  ok.pairs = {{0, 2}, {1, 0}};
  EXPECT_NO_THROW(ok.validate(3));
  SeedSet clash;
  clash.pairs = {{0, 2}, {1, 2}};
  EXPECT_THROW(clash.validate(3), std::invalid_argument);
  SeedSet range;
  range.pairs = {{0, 3}};
  EXPECT_THROW(range.validate(3), std::invalid_argument);
}

TEST(FaqMatch, SelfMatchFromIdentity) {
  const Graph a = asymmetric_graph();
  const MatchResult r = faq_match(a, a, {MatchInit::identity(), 100, 1e-6});
  EXPECT_TRUE(r.permutation.is_identity());
  EXPECT_EQ(r.objective, 0);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 1);
}

TEST(FaqMatch, StartAtPlantedOptimum) {
  const Graph a = asymmetric_graph();
  RngStream rng(102);
  const Permutation sigma = oracle::random_permutation(30, rng);
  const Graph b = apply_permutation(a, sigma);
  const MatchResult r = faq_match(a, b, {MatchInit::from_permutation(sigma.inverse()), 100, 1e-6});
  EXPECT_EQ(r.objective, 0);
  EXPECT_EQ(r.permutation, sigma.inverse());
  EXPECT_EQ(apply_permutation(b, r.permutation), a);
}

TEST(FaqMatch, ThreeBlockRhoOneFromIdentity) {
  RngStream rng(103);
  const auto [g1, g2] = sample_rho_sbm(three_block_params(), {1.0}, rng);
  const MatchResult r = faq_match(g1, g2, {MatchInit::identity(), 100, 1e-6});
  EXPECT_EQ(edge_disagreements(g1, apply_permutation(g2, r.permutation)), 0);
}

TEST(FaqMatch, ObjectiveTraceNondecreasing) {
  RngStream rng(104);
  for (int t = 0; t < 20; ++t) {
    const Graph a = oracle::random_graph(25, 0.3, rng);
    const Graph b = oracle::random_graph(25, 0.3, rng);
    const MatchResult r = faq_match(a, b);
    ASSERT_GE(r.objective_trace.size(), 2u);
    for (std::size_t i = 1; i < r.objective_trace.size(); ++i) {
      EXPECT_GE(r.objective_trace[i], r.objective_trace[i - 1] - 1e-9);
    }
    EXPECT_EQ(r.objective, oracle::frobenius_objective(a, b, r.permutation));
  }
}

TEST(FaqMatch, InitErrors) {
  const Graph a = asymmetric_graph();
  EXPECT_THROW(faq_match(a, Graph(29)), std::invalid_argument);
  EXPECT_THROW(faq_match(a, a, {MatchInit::from_permutation(Permutation::identity(4)), 10, 1e-6}),
               std::invalid_argument);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Constant(30, 30, 0.5);
  EXPECT_THROW(faq_match(a, a, {MatchInit::from_matrix(bad), 10, 1e-6}), std::invalid_argument);
}

TEST(FaqMatch, DoublyStochasticInit) {
  const Graph a = asymmetric_graph();
  const Eigen::MatrixXd bary = Eigen::MatrixXd::Constant(30, 30, 1.0 / 30);
  const MatchResult from_matrix = faq_match(a, a, {MatchInit::from_matrix(bary), 100, 1e-6});
  const MatchResult from_bary = faq_match(a, a, {MatchInit::barycenter(), 100, 1e-6});
  EXPECT_EQ(from_matrix.permutation, from_bary.permutation);
  EXPECT_EQ(from_matrix.objective_trace, from_bary.objective_trace);
}

TEST(SgmMatch, AllSeededIsTheStatedCorrespondence) {
  RngStream rng(105);
  const Graph a = oracle::random_graph(12, 0.5, rng);
  const Graph b = oracle::random_graph(12, 0.5, rng);
  const Permutation tau = oracle::random_permutation(12, rng);
  std::vector<int> all(12);
  for (int i = 0; i < 12; ++i) all[i] = i;
  const MatchResult r = sgm_match(a, b, planted_seeds(all, tau));
  EXPECT_EQ(r.permutation, tau.inverse());
}

TEST(SgmMatch, RecoversPlantedShuffleWithTenSeeds) {
  RngStream rng(106);
  const auto [g1, g2] = sample_rho_sbm(three_block_params(), {1.0}, rng);
  const Permutation sigma = sample_uniform_permutation(150, rng);
  const Graph b = apply_permutation(g2, sigma);
  const SeedSet seeds = planted_seeds(sample_subset(150, 10, rng), sigma);
  const MatchResult r = sgm_match(g1, b, seeds);
  EXPECT_EQ(r.objective, 0);
  EXPECT_EQ(apply_permutation(b, r.permutation), g1);
}

TEST(SgmMatch, NoSeedsEqualsFaq) {
  RngStream rng(107);
  const Graph a = oracle::random_graph(20, 0.4, rng);
  const Graph b = oracle::random_graph(20, 0.4, rng);
  const MatchResult s = sgm_match(a, b, SeedSet{});
  const MatchResult f = faq_match(a, b);
  EXPECT_EQ(s.permutation, f.permutation);
  EXPECT_EQ(s.objective_trace, f.objective_trace);
  EXPECT_EQ(s.iterations, f.iterations);
}

TEST(SgmMatch, SeedsAreRespected) {
  RngStream rng(108);
  const Graph a = oracle::random_graph(20, 0.4, rng);
  const Graph b = oracle::random_graph(20, 0.4, rng);
  SeedSet seeds;
  seeds.pairs = {{0, 5}, {3, 1}, {7, 7}};
  const MatchResult r = sgm_match(a, b, seeds);
  for (const auto& [u, w] : seeds.pairs) EXPECT_EQ(r.permutation(w), u);
}

TEST(MatchAndAlign, Cases) {
  const Graph a = asymmetric_graph();
  EXPECT_EQ(match_and_align(a, a, SeedSet{}, {MatchInit::identity(), 100, 1e-6}), a);

  RngStream rng(109);
  const auto [g1, g2] = sample_rho_sbm(three_block_params(), {1.0}, rng);
  const Permutation sigma = sample_uniform_permutation(150, rng);
  const Graph b = apply_permutation(g2, sigma);
  EXPECT_EQ(match_and_align(g1, b, planted_seeds(sample_subset(150, 10, rng), sigma)), g1);
}

TEST(MatchAndAlign, RaisesCorrelationOfIndependentPair) {
  RngStream rng(110);
  const auto [g1, g2] = sample_rho_sbm(three_block_params(), {0.0}, rng);
  const Graph shuffled = apply_permutation(g2, sample_uniform_permutation(150, rng));
  const Graph aligned = match_and_align(g1, shuffled, SeedSet{});
  EXPECT_GE(sample_edge_correlation(g1, aligned), sample_edge_correlation(g1, shuffled));
}

TEST(TranspositionSweep, Cases) {
  const Graph a = asymmetric_graph();
  const BlockPartition one_block({30});
  // No twins: every transposition strictly increases the objective.
  const TranspositionSweep self = transposition_sweep(a, a, one_block);
  EXPECT_FALSE(self.found);
  EXPECT_GT(self.delta, 0);

  RngStream rng(111);
  const auto [g1, g2] = sample_rho_sbm(three_block_params(), {1.0}, rng);
  EXPECT_FALSE(transposition_sweep(g1, g2, three_block_params().partition).found);
}

TEST(TranspositionSweep, ReportsSmallestDeltaAgainstDirectScan) {
  RngStream rng(112);
  const Graph a = oracle::random_graph(12, 0.5, rng);
  const Graph b = oracle::random_graph(12, 0.5, rng);
  const BlockPartition part({5, 7});
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::pair<int, int> arg{-1, -1};
  const std::int64_t base = oracle::frobenius_objective(a, b, Permutation::identity(12));
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j) {
      if (part.block_of(i) != part.block_of(j)) continue;
      std::vector<int> m(12);
      for (int k = 0; k < 12; ++k) m[k] = k;
      std::swap(m[i], m[j]);
      const std::int64_t d = oracle::frobenius_objective(a, b, Permutation(m)) - base;
      if (d < best) {
        best = d;
        arg = {i, j};
      }
    }
  const TranspositionSweep s = transposition_sweep(a, b, part);
  EXPECT_EQ(s.delta, best);
  EXPECT_EQ(s.best, arg);
  EXPECT_EQ(s.found, best < 0);
}
