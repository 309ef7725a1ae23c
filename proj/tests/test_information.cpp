#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "matchinfo/information.hpp"

using namespace matchinfo;

namespace {

SbmParams er(int n, double p) {
  SbmParams s;
  s.partition = BlockPartition({n});
  s.lambda = Eigen::MatrixXd::Constant(1, 1, p);
  return s;
}

SbmParams k2_example() {
  SbmParams s;
  s.partition = BlockPartition({2, 2});
  s.lambda.resize(2, 2);
  s.lambda << 0.5, 0.3, 0.3, 0.5;
  return s;
}

// Σ p log(p / p_x p_y) over the 2×2 joint table, computed by hand.
double table_mi(double p, double rho) {
  const double p11 = p * p + rho * p * (1 - p);
  const double p10 = p * (1 - p) * (1 - rho);
  const double p00 = 1 - 2 * p + p11;
  double t = 0;
  if (p11 > 0) t += p11 * std::log(p11 / (p * p));
  if (p10 > 0) t += 2 * p10 * std::log(p10 / (p * (1 - p)));
  if (p00 > 0) t += p00 * std::log(p00 / ((1 - p) * (1 - p)));
  return t;
}

}  // namespace

TEST(BinaryEntropy, Values) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.5), std::log(2.0), 1e-15);
}

TEST(BernoulliPairMi, Values) {
  EXPECT_NEAR(bernoulli_pair_mi(0.5, 0.0), 0.0, 1e-15);
  EXPECT_NEAR(bernoulli_pair_mi(0.5, 1.0), std::log(2.0), 1e-15);
  // Joint table {0.174, 0.126, 0.126, 0.574}.
  EXPECT_NEAR(bernoulli_pair_mi(0.3, 0.4), 0.07680126123018163, 1e-14);
  for (double p : {0.1, 0.25, 0.7})
    for (double r : {0.05, 0.5, 0.95}) EXPECT_NEAR(bernoulli_pair_mi(p, r), table_mi(p, r), 1e-13);
}

TEST(RhoSbmMi, Values) {
  EXPECT_NEAR(rho_sbm_mi(k2_example(), 0.0), 0.0, 1e-15);
  EXPECT_NEAR(rho_sbm_mi(er(3, 0.5), 1.0), 3 * std::log(2.0), 1e-14);
  const double expected = 2 * table_mi(0.5, 0.4) + 4 * table_mi(0.3, 0.4);
  EXPECT_NEAR(rho_sbm_mi(k2_example(), 0.4), expected, 1e-13);
  EXPECT_NEAR(rho_sbm_mi(k2_example(), 0.4), 0.47177080193082954, 1e-13);
}

TEST(RhoSbmMi, MatchesEnumerationOracle) {
  EXPECT_NEAR(rho_sbm_mi(k2_example(), 0.4), brute_force_pair_mi(k2_example(), 0.4), 1e-9);
  EXPECT_NEAR(brute_force_pair_mi(k2_example(), 0.0), 0.0, 1e-12);
  EXPECT_NEAR(brute_force_pair_mi(k2_example(), 1.0), sbm_entropy(k2_example()), 1e-9);
}

TEST(SbmEntropy, Values) {
  SbmParams zero = k2_example();
  zero.lambda.setZero();
  EXPECT_EQ(sbm_entropy(zero), 0.0);
  EXPECT_NEAR(sbm_entropy(er(4, 0.5)), 6 * std::log(2.0), 1e-14);
  EXPECT_NEAR(sbm_entropy(k2_example()), brute_force_sbm_entropy(k2_example()), 1e-9);
}

TEST(PairCounts, FromPartition) {
  const PairCounts c = PairCounts::from_partition(BlockPartition({2, 3}));
  EXPECT_EQ(c.counts[0][0], 1);
  EXPECT_EQ(c.counts[0][1], 6);
  EXPECT_EQ(c.counts[1][1], 3);
  EXPECT_EQ(c.counts[1][0], 0);
  EXPECT_EQ(c.total(), 10);
}

TEST(BruteForce, RejectsLargeInputs) {
  EXPECT_THROW(brute_force_pair_mi(er(6, 0.5), 0.3), std::invalid_argument);
}

TEST(SmallRhoRatio, Values) {
  EXPECT_NEAR(mi_small_rho_ratio(er(200, 0.5), 0.01), 1.0000166673333581, 1e-9);
  EXPECT_NEAR(mi_small_rho_ratio(er(200, 0.5), 1.0), 2 * std::log(2.0), 1e-12);
  const double r1 = mi_small_rho_ratio(er(200, 0.3), 0.1);
  const double r2 = mi_small_rho_ratio(er(200, 0.3), 0.01);
  const double r3 = mi_small_rho_ratio(er(200, 0.3), 0.001);
  EXPECT_NEAR(r1, 0.9792819519913549, 1e-9);
  EXPECT_NEAR(r2, 0.9975114845537074, 1e-9);
  EXPECT_NEAR(r3, 0.9997465488702576, 1e-8);
  EXPECT_LT(std::abs(r2 - 1), std::abs(r1 - 1));
  EXPECT_LT(std::abs(r3 - 1), std::abs(r2 - 1));
  EXPECT_THROW(mi_small_rho_ratio(er(200, 0.3), 0.0), std::invalid_argument);
}
