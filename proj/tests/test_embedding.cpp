#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "matchinfo/embedding.hpp"
#include "matchinfo/samplers.hpp"
#include "oracles.hpp"

using namespace matchinfo;

TEST(MagnitudeOrderedEigen, OrderAndSign) {
  Eigen::MatrixXd m(3, 3);
  m << 0, 2, 0, 2, 0, 0, 0, 0, 1;  // eigenvalues −2, 2, 1
  const SpectralDecomposition s = magnitude_ordered_eigen(m);
  EXPECT_NEAR(std::abs(s.values(0)), 2.0, 1e-12);
  EXPECT_NEAR(std::abs(s.values(1)), 2.0, 1e-12);
  EXPECT_NEAR(s.values(2), 1.0, 1e-12);
  EXPECT_LT(s.values(0), s.values(1));  // solver order kept on magnitude ties
  for (int j = 0; j < 3; ++j) {
    Eigen::Index arg;
    s.vectors.col(j).cwiseAbs().maxCoeff(&arg);
    EXPECT_GT(s.vectors(arg, j), 0.0);
  }
  EXPECT_THROW(magnitude_ordered_eigen(Eigen::MatrixXd::Random(3, 3)), std::invalid_argument);
}

TEST(Ase, CompleteGraphSingleDimension) {
  const Embedding e = ase(Graph::complete(4), 1);
  ASSERT_EQ(e.dim(), 1);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(e.points(i, 0), std::sqrt(3.0) / 2, 1e-12);
}

TEST(Ase, EmptyGraphIsZero) {
  const Embedding e = ase(Graph(6), 2);
  EXPECT_EQ(e.points, Eigen::MatrixXd::Zero(6, 2));
}

TEST(Ase, ExactLowRankRecovery) {
  RngStream rng(201);
  const Eigen::MatrixXd x = sample_dirichlet_positions(40, rng);
  const Eigen::MatrixXd p = x * x.transpose();
  const Embedding e = ase(p, 3);
  EXPECT_LT((e.points * e.points.transpose() - p).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Ase, RejectsBadDimension) {
  EXPECT_THROW(ase(Graph::complete(4), 0), std::invalid_argument);
  EXPECT_THROW(ase(Graph::complete(4), 5), std::invalid_argument);
}

TEST(Omnibus, Structure) {
  RngStream rng(202);
  const Graph a = oracle::random_graph(8, 0.5, rng);
  const Graph b = oracle::random_graph(8, 0.5, rng);
  const Eigen::MatrixXd same = omnibus(a, a);
  const Eigen::MatrixXd am = a.to_matrix();
  EXPECT_EQ(same.topLeftCorner(8, 8), am);
  EXPECT_EQ(same.topRightCorner(8, 8), am);
  EXPECT_EQ(same.bottomLeftCorner(8, 8), am);
  EXPECT_EQ(same.bottomRightCorner(8, 8), am);
  EXPECT_EQ(omnibus(Graph(5), Graph(5)), Eigen::MatrixXd::Zero(10, 10));
  const Eigen::MatrixXd o = omnibus(a, b);
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) {
      EXPECT_EQ(o(u, 8 + v), (a.has_edge(u, v) + b.has_edge(u, v)) / 2.0);
      EXPECT_EQ(o(8 + v, u), o(u, 8 + v));
    }
}

TEST(Procrustes, ExactCases) {
  RngStream rng(203);
  Embedding x{Eigen::MatrixXd(30, 3)};
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 3; ++j) x.points(i, j) = rng.normal();
  const ProcrustesResult self = procrustes_align(x, x);
  EXPECT_LT(self.residual, 1e-12);
  const Eigen::MatrixXd w0 = oracle::random_orthogonal(3, rng);
  const ProcrustesResult r = procrustes_align(x, Embedding{x.points * w0});
  EXPECT_LT(r.residual, 1e-8);
  EXPECT_LT((r.w.transpose() * r.w - Eigen::MatrixXd::Identity(3, 3)).norm(), 1e-12);
  EXPECT_LT((r.w - w0).norm(), 1e-9);
}

TEST(Procrustes, BeatsRandomOrthogonalProbes) {
  RngStream rng(204);
  Embedding x{Eigen::MatrixXd(20, 2)}, y{Eigen::MatrixXd(20, 2)};
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 2; ++j) {
      x.points(i, j) = rng.normal();
      y.points(i, j) = rng.normal();
    }
  const double best = procrustes_align(x, y).residual;
  for (int t = 0; t < 10000; ++t) {
    const Eigen::MatrixXd q = oracle::random_orthogonal(2, rng);
    EXPECT_LE(best, (x.points * q - y.points).norm() + 1e-12);
  }
}

TEST(T1Semipar, Cases) {
  RngStream rng(205);
  const Graph a = oracle::random_graph(100, 0.5, rng);
  const Graph b = oracle::random_graph(100, 0.5, rng);
  EXPECT_LT(t1_semipar(a, a, 2), 1e-9);
  EXPECT_GT(t1_semipar(a, b, 2), 0.0);
  // Embeddings are vertex-ordered: relabeling one side changes the statistic.
  const Graph shuffled = apply_permutation(a, oracle::random_permutation(100, rng));
  EXPECT_GT(t1_semipar(a, shuffled, 2), 1.0);
}

TEST(T2Omni, ZeroForEqualGraphsAndGrowsUnderPerturbation) {
  RngStream rng(206);
  for (int t = 0; t < 50; ++t) {
    const Graph a = oracle::random_graph(40, 0.4, rng);
    EXPECT_LT(t2_omni(a, a, 2), 1e-9);
    Graph b = a;
    for (int f = 0; f < 10; ++f) {
      const int u = static_cast<int>(rng.uniform_below(40));
      int v = static_cast<int>(rng.uniform_below(39));
      if (v >= u) ++v;
      b.toggle_edge(u, v);
    }
    EXPECT_GT(t2_omni(a, b, 2), 1e-6);
  }
}

TEST(ScreeElbow, Cases) {
  const std::vector<double> a{10, 9, 1, 0.5};
  EXPECT_EQ(scree_elbow(a), 2);
  const std::vector<double> b{5, 1, 1, 1};
  EXPECT_EQ(scree_elbow(b), 1);
  // Rank 3 with comparable nonzero eigenvalues.
  const std::vector<double> c{10, 9, 8, 0, 0, 0, 0, 0};
  EXPECT_EQ(scree_elbow(c), 3);
  const std::vector<double> signs{-10, 9, 0.5, -1};
  EXPECT_EQ(scree_elbow(signs), 2);
  const std::vector<double> one{4};
  EXPECT_EQ(scree_elbow(one), 1);
  EXPECT_THROW(scree_elbow(std::vector<double>{}), std::invalid_argument);
}

TEST(ScreeElbow, ExactRankThreeMatrixSpectrum) {
  // U diag(10, 9, 8) Uᵀ for a random orthonormal U.
  RngStream rng(207);
  const Eigen::MatrixXd q = oracle::random_orthogonal(12, rng);
  const Eigen::MatrixXd u = q.leftCols(3);
  const Eigen::MatrixXd m = u * Eigen::Vector3d(10, 9, 8).asDiagonal() * u.transpose();
  const SpectralDecomposition s = magnitude_ordered_eigen(m);
  const std::vector<double> values(s.values.data(), s.values.data() + s.values.size());
  EXPECT_EQ(scree_elbow(values), 3);
}

TEST(ScreeElbow, DirichletGramSpectrumPeaksAtFirstGap) {
  // The leading eigenvalue of XXᵀ with simplex rows dominates, so the max-gap
  // rule stops at 1 even though the rank is 3.
  RngStream rng(208);
  const Eigen::MatrixXd x = sample_dirichlet_positions(100, rng);
  const SpectralDecomposition s = magnitude_ordered_eigen(x * x.transpose());
  const std::vector<double> values(s.values.data(), s.values.data() + s.values.size());
  EXPECT_EQ(scree_elbow(values), 1);
  EXPECT_LT(std::abs(s.values(3)), 1e-9);
}
