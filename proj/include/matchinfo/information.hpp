#pragma once

#include <cstdint>
#include <vector>

#include "matchinfo/samplers.hpp"

namespace matchinfo {

// All quantities are in nats.

/// Vertex-pair counts n_ij for i ≤ j: n_i·n_j off the diagonal and
/// C(n_i, 2) on it. Entry (i, j) with i > j is zero.
struct PairCounts {
  std::vector<std::vector<std::int64_t>> counts;
  static PairCounts from_partition(const BlockPartition& partition);
  std::int64_t total() const;
};

/// Binary entropy h(p) with 0·log 0 = 0.
double binary_entropy(double p);

/// I(X;Y) for a ρ-correlated Bernoulli(p) pair.
double bernoulli_pair_mi(double p, double rho);

/// I(G1;G2) for a ρ-SBM pair under the latent alignment.
double rho_sbm_mi(const SbmParams& params, double rho);

/// H(G1) for an SBM graph.
double sbm_entropy(const SbmParams& params);

/// I(G1;G2) by exhaustive enumeration of every graph pair. Only for
/// C(n,2) ≤ 12; larger inputs throw.
double brute_force_pair_mi(const SbmParams& params, double rho);

/// H(G1) by exhaustive enumeration of every graph; C(n,2) ≤ 20.
double brute_force_sbm_entropy(const SbmParams& params);

/// rho_sbm_mi / (ρ² C(n,2) / 2). ρ must lie in (0, 1].
double mi_small_rho_ratio(const SbmParams& params, double rho);

}  // namespace matchinfo
