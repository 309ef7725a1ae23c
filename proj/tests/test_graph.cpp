#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "matchinfo/graph.hpp"
#include "matchinfo/rng.hpp"
#include "oracles.hpp"

using namespace matchinfo;

namespace {

Graph path3() {
  const std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}};
  return Graph::from_edges(3, e);
}

Graph edges_01_02() {
  const std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}};
  return Graph::from_edges(3, e);
}

Permutation swap01(std::size_t n) {
  std::vector<int> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i);
  std::swap(m[0], m[1]);
  return Permutation(m);
}

}  // namespace

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<int>{0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<int>{0, 3, 1}), std::invalid_argument);
}

TEST(Permutation, InverseAndCompose) {
  RngStream rng(3);
  const Permutation p = oracle::random_permutation(9, rng);
  EXPECT_TRUE(p.compose(p.inverse()).is_identity());
  EXPECT_TRUE(p.inverse().compose(p).is_identity());
  EXPECT_EQ(Permutation::identity(5).moved_count(), 0u);
  EXPECT_EQ(swap01(5).moved_count(), 2u);
}

TEST(Graph, FromEdgesRejectsBadInput) {
  const std::vector<std::pair<int, int>> loop{{1, 1}};
  const std::vector<std::pair<int, int>> dup{{0, 1}, {1, 0}};
  const std::vector<std::pair<int, int>> range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, loop), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, dup), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, range), std::invalid_argument);
}

TEST(ApplyPermutation, IdentityAndComplete) {
  RngStream rng(1);
  const Graph g = oracle::random_graph(8, 0.4, rng);
  EXPECT_EQ(apply_permutation(g, Permutation::identity(8)), g);
  const Graph k3 = Graph::complete(3);
  EXPECT_EQ(apply_permutation(k3, Permutation({2, 0, 1})), k3);
}

TEST(ApplyPermutation, PathSwap) {
  EXPECT_EQ(apply_permutation(path3(), swap01(3)), edges_01_02());
}

TEST(ApplyPermutation, AgreesWithMatrixConjugation) {
  RngStream rng(2);
  for (int t = 0; t < 20; ++t) {
    const Graph g = oracle::random_graph(7, 0.5, rng);
    const Permutation phi = oracle::random_permutation(7, rng);
    const Eigen::MatrixXi p = oracle::perm_matrix(phi);
    EXPECT_EQ(oracle::adjacency(apply_permutation(g, phi)),
              p * oracle::adjacency(g) * p.transpose());
  }
}

TEST(GmObjective, HandCases) {
  const Graph a = path3();
  EXPECT_EQ(gm_objective(a, a, Permutation::identity(3)), 0);
  EXPECT_EQ(gm_objective(a, edges_01_02(), Permutation::identity(3)), 4);
  EXPECT_EQ(gm_objective(a, edges_01_02(), swap01(3)), 0);
}

TEST(GmObjective, FrobeniusAndTraceIdentity) {
  RngStream rng(4);
  for (int t = 0; t < 50; ++t) {
    const Graph a = oracle::random_graph(6, 0.5, rng);
    const Graph b = oracle::random_graph(6, 0.5, rng);
    const Permutation phi = oracle::random_permutation(6, rng);
    const std::int64_t obj = gm_objective(a, b, phi);
    EXPECT_EQ(obj, oracle::frobenius_objective(a, b, phi));
    EXPECT_EQ(trace_objective(a, b, phi), oracle::trace_objective(a, b, phi));
    // ‖A − PBPᵀ‖² = ‖A‖² + ‖B‖² − 2 tr(A P B Pᵀ).
    EXPECT_EQ(obj, 2 * a.edge_count() + 2 * b.edge_count() - 2 * trace_objective(a, b, phi));
  }
}

TEST(TraceObjective, HandCases) {
  RngStream rng(5);
  const Graph a = oracle::random_graph(9, 0.3, rng);
  EXPECT_EQ(trace_objective(a, a, Permutation::identity(9)), 2 * a.edge_count());
  EXPECT_EQ(trace_objective(Graph(9), a, oracle::random_permutation(9, rng)), 0);
}

TEST(EdgeDisagreements, HandCases) {
  const Graph a = path3();
  EXPECT_EQ(edge_disagreements(a, a), 0);
  EXPECT_EQ(edge_disagreements(Graph::complete(3), Graph(3)), 3);
  EXPECT_EQ(edge_disagreements(a, edges_01_02()), 2);
}

TEST(SampleEdgeCorrelation, HandCases) {
  const Graph a = path3();
  EXPECT_DOUBLE_EQ(sample_edge_correlation(a, a), 1.0);
  EXPECT_DOUBLE_EQ(sample_edge_correlation(a, a.complement()), -1.0);
  const std::vector<std::pair<int, int>> e1{{0, 1}};
  const std::vector<std::pair<int, int>> e2{{0, 1}, {1, 2}};
  EXPECT_NEAR(sample_edge_correlation(Graph::from_edges(3, e1), Graph::from_edges(3, e2)), 0.5,
              1e-15);
  EXPECT_EQ(sample_edge_correlation(Graph(4), Graph::complete(4)), 0.0);
}

TEST(SampleEdgeCorrelation, MatchesPearsonOracle) {
  RngStream rng(6);
  for (int t = 0; t < 10; ++t) {
    const Graph a = oracle::random_graph(12, 0.4, rng);
    const Graph b = oracle::random_graph(12, 0.6, rng);
    std::vector<double> x, y;
    for (int u = 0; u < 12; ++u)
      for (int v = u + 1; v < 12; ++v) {
        x.push_back(a.has_edge(u, v));
        y.push_back(b.has_edge(u, v));
      }
    EXPECT_NEAR(sample_edge_correlation(a, b), oracle::pearson(x, y), 1e-12);
  }
}

TEST(TranspositionDelta, SelfPairIsSumOfSquares) {
  RngStream rng(7);
  const Graph a = oracle::random_graph(10, 0.5, rng);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      std::int64_t sq = 0;
      for (int k = 0; k < 10; ++k) {
        if (k == i || k == j) continue;
        const int d = a.has_edge(i, k) - a.has_edge(j, k);
        sq += d * d;
      }
      EXPECT_EQ(transposition_delta(a, a, i, j), 4 * sq);
    }
}

TEST(TranspositionDelta, StarAutomorphism) {
  const std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  const Graph star = Graph::from_edges(5, e);
  EXPECT_EQ(transposition_delta(star, star, 1, 2), 0);
}

TEST(TranspositionDelta, EqualsDirectDifference) {
  RngStream rng(8);
  for (int t = 0; t < 200; ++t) {
    const Graph a = oracle::random_graph(8, 0.5, rng);
    const Graph b = oracle::random_graph(8, 0.5, rng);
    const int i = static_cast<int>(rng.uniform_below(8));
    int j = static_cast<int>(rng.uniform_below(7));
    if (j >= i) ++j;
    std::vector<int> m{0, 1, 2, 3, 4, 5, 6, 7};
    std::swap(m[i], m[j]);
    const Permutation tau(m);
    EXPECT_EQ(transposition_delta(a, b, i, j),
              oracle::frobenius_objective(a, b, tau) -
                  oracle::frobenius_objective(a, b, Permutation::identity(8)));
  }
}

TEST(FixedErrorCounts, TrivialCases) {
  RngStream rng(9);
  const Graph x = oracle::random_graph(7, 0.5, rng);
  const Graph y = oracle::random_graph(7, 0.5, rng);
  const FixedErrorCounts id = fixed_error_counts(x, y, Permutation::identity(7));
  EXPECT_EQ(id.additions, 0);
  EXPECT_EQ(id.occlusions, 0);
  const FixedErrorCounts empty = fixed_error_counts(Graph(7), y, oracle::random_permutation(7, rng));
  EXPECT_EQ(empty.additions, 0);
  EXPECT_EQ(empty.occlusions, 0);
}

TEST(FixedErrorCounts, HandCaseN4) {
  // φ = 0↔1: φ(x) has edges 12, 03 and φ(y) has edges 12, 02.
  const std::vector<std::pair<int, int>> ex{{0, 2}, {1, 3}};
  const std::vector<std::pair<int, int>> ey{{0, 2}, {1, 2}};
  const Graph x = Graph::from_edges(4, ex);
  const Graph y = Graph::from_edges(4, ey);
  // Pairs: 03 added by φ(x), absent from φ(y) → addition. 12 added, present in
  // φ(y) → not counted. 02 removed by φ(x), present in φ(y) → occlusion. 13
  // removed, absent from φ(y) → not counted.
  const FixedErrorCounts c = fixed_error_counts(x, y, swap01(4));
  EXPECT_EQ(c.additions, 1);
  EXPECT_EQ(c.occlusions, 1);
}

TEST(FixedErrorCounts, ObjectiveDecomposition) {
  RngStream rng(10);
  for (int t = 0; t < 100; ++t) {
    const Graph x = oracle::random_graph(7, 0.5, rng);
    const Graph y = oracle::random_graph(7, 0.5, rng);
    const Permutation phi = oracle::random_permutation(7, rng);
    const FixedErrorCounts c = fixed_error_counts(x, y, phi);
    const auto id = Permutation::identity(7);
    EXPECT_EQ(gm_objective(x, y, phi) - gm_objective(x, y, id),
              gm_objective(x, x, phi) - 4 * c.additions - 4 * c.occlusions);
  }
}

TEST(Invariants, KnownValues) {
  const Graph k4 = Graph::complete(4);
  EXPECT_EQ(max_degree(k4), 3);
  EXPECT_EQ(triangle_count(k4), 4);
  EXPECT_NEAR(spectral_norm(k4), 3.0, 1e-12);
  const std::vector<std::pair<int, int>> e{{0, 1}};
  const Graph edge = Graph::from_edges(2, e);
  EXPECT_EQ(max_degree(edge), 1);
  EXPECT_EQ(triangle_count(edge), 0);
  EXPECT_NEAR(spectral_norm(edge), 1.0, 1e-12);
}

TEST(Invariants, TriangleCountMatchesTripleEnumeration) {
  RngStream rng(11);
  for (int t = 0; t < 20; ++t) {
    const Graph g = oracle::random_graph(10, 0.5, rng);
    EXPECT_EQ(triangle_count(g), oracle::triangles(g));
  }
}

TEST(BlockPartition, ContiguousAndExplicit) {
  const BlockPartition p({2, 3});
  EXPECT_EQ(p.num_vertices(), 5u);
  EXPECT_EQ(p.block_of(1), 0);
  EXPECT_EQ(p.block_of(2), 1);
  EXPECT_EQ(p.vertices_in(1), (std::vector<int>{2, 3, 4}));
  const BlockPartition q(2, {1, 0, 1});
  EXPECT_EQ(q.sizes(), (std::vector<int>{1, 2}));
  EXPECT_THROW(BlockPartition(2, {0, 2}), std::invalid_argument);
}
