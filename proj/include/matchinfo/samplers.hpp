#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "matchinfo/graph.hpp"
#include "matchinfo/rng.hpp"

namespace matchinfo {

/// Stochastic blockmodel parameters: partition plus symmetric K×K block
/// probability matrix.
struct SbmParams {
  BlockPartition partition;
  Eigen::MatrixXd lambda;

  /// Throws std::invalid_argument unless lambda is K×K, symmetric and in [0,1].
  void validate() const;
  std::size_t num_vertices() const { return partition.num_vertices(); }
  double edge_probability(std::size_t u, std::size_t v) const {
    return lambda(partition.block_of(u), partition.block_of(v));
  }
};

/// Edge-wise Pearson correlation ρ ∈ [0,1].
struct CorrelationSpec {
  double rho = 0.0;
  void validate() const;
};

/// Entry-wise marginals and correlations for a correlated heterogeneous
/// Erdős–Rényi pair. Diagonals are ignored.
struct HeterogeneousPair {
  Eigen::MatrixXd p;
  Eigen::MatrixXd q;
  Eigen::MatrixXd rho;

  /// Builds the pair with every ρ_uv set to max_feasible_correlation(p_uv, q_uv).
  static HeterogeneousPair maximally_correlated(const Eigen::MatrixXd& p,
                                                const Eigen::MatrixXd& q);
  void validate() const;
};

enum class ShuffleMode { kUniformAll, kBlockPreserving, kSubset };

struct ShuffleSpec {
  ShuffleMode mode = ShuffleMode::kUniformAll;
  int subset_size = 0;
  std::vector<int> seed_set;
};

Graph sample_sbm(const SbmParams& params, RngStream& rng);

/// G1 ~ SBM; given G1, each G2 pair is Bernoulli(Λ + ρ(1−Λ)) when present in
/// G1 and Bernoulli(Λ(1−ρ)) otherwise.
std::pair<Graph, Graph> sample_rho_sbm(const SbmParams& params,
                                       const CorrelationSpec& corr,
                                       RngStream& rng);

std::pair<BipartiteGraph, BipartiteGraph> sample_rho_bipartite(
    int m1, int m2, double p, const CorrelationSpec& corr, RngStream& rng);

/// Largest ρ for which a bivariate Bernoulli with marginals (p, q) exists:
/// min(√(p(1−q)/(q(1−p))), √(q(1−p)/(p(1−q)))). Returns 1 when p == q and 0
/// for degenerate marginals.
double max_feasible_correlation(double p, double q);

/// P(X=1, Y=1) for the bivariate Bernoulli with marginals (p, q) and
/// correlation ρ.
double joint_both_present(double p, double q, double rho);

std::pair<Graph, Graph> sample_correlated_heterogeneous(
    const HeterogeneousPair& spec, RngStream& rng);

/// n×3 matrix with i.i.d. Dirichlet(1,1,1) rows.
Eigen::MatrixXd sample_dirichlet_positions(int n, RngStream& rng);

/// First m rows become (1−w)·x_row + w·d_row with fresh Dirichlet(1,1,1)
/// rows d; the rest are copied.
Eigen::MatrixXd anomaly_perturb(const Eigen::MatrixXd& x, int m, double w,
                                RngStream& rng);

Permutation sample_uniform_permutation(std::size_t n, RngStream& rng);
/// Independent uniform permutation inside each block.
Permutation sample_block_permutation(const BlockPartition& partition,
                                     RngStream& rng);
/// Uniform permutation of a uniformly chosen k-subset of the non-seed
/// vertices; seeds and unchosen vertices are fixed points.
Permutation sample_subset_shuffle(std::size_t n, const std::vector<int>& seed_set,
                                  int k, RngStream& rng);
Permutation sample_shuffle(std::size_t n, const ShuffleSpec& spec,
                           const BlockPartition* partition, RngStream& rng);

/// Uniformly random k-subset of {0,…,n−1}, sorted ascending.
std::vector<int> sample_subset(std::size_t n, int k, RngStream& rng);

/// (G1, σ(G2)).
std::pair<Graph, Graph> shuffle_pair(const std::pair<Graph, Graph>& pair,
                                     const Permutation& sigma);

}  // namespace matchinfo
