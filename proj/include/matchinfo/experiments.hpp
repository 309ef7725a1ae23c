#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "matchinfo/clustering.hpp"
#include "matchinfo/inference.hpp"
#include "matchinfo/matching.hpp"
#include "matchinfo/samplers.hpp"

namespace matchinfo {

// Random streams: every experiment roots its draws at
// RngStream(master_seed, <experiment tag>) and derives one substream per
// replicate, so tables do not depend on the thread count.

/// Three-block SBM with sizes (50,50,50) and Λ rows (0.5,0.3,0.2),
/// (0.3,0.5,0.3), (0.2,0.3,0.5).
SbmParams three_block_params();

// ---------------------------------------------------------------- matchability

struct PhaseTransitionConfig {
  SbmParams params = three_block_params();
  std::vector<double> rho_grid{0.0, 1.0 / 32, 1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1.0};
  int mc_reps = 50;
  std::uint64_t master_seed = 1;
  /// Matching starts at the latent alignment.
  MatchOptions match{MatchInit::identity(), 100, 1e-6};
  bool transposition_sweep = true;
  int threads = 1;
};

struct PhaseTransitionRow {
  double rho = 0.0;
  std::string variant;
  double mean = 0.0;
  double se = 0.0;
};

/// Per replicate: disagreements at the identity and after matching from
/// it, edge correlation of G1 with the matched and with a uniformly shuffled
/// G2, and 0/1 indicators for "matching kept the identity objective" and
/// "some within-block transposition improves on the identity".
struct PhaseTransitionReplicate {
  double identity_disagreements = 0.0;
  double matched_disagreements = 0.0;
  double matched_correlation = 0.0;
  double shuffled_correlation = 0.0;
  double identity_correlation = 0.0;
  double identity_is_fixed_point = 0.0;
  double improving_transposition = 0.0;
};

struct PhaseTransitionResult {
  std::vector<PhaseTransitionRow> rows;
  /// replicates[g][r] for rho_grid[g].
  std::vector<std::vector<PhaseTransitionReplicate>> replicates;
};

PhaseTransitionResult phase_transition_experiment(const PhaseTransitionConfig& config);

// ------------------------------------------------------------- ER power test

struct PowerErConfig {
  double p = 0.4;
  double q = 0.375;
  int n = 50;
  double rho = 0.7;
  std::vector<int> s_grid{0, 10, 20, 30, 40, 50};
  std::vector<int> x_grid{0, 10, 20, 30, 40, 50};
  double alpha = 0.05;
  int mc_reps = 500;
  int n_null = 999;
  /// Edge probability of the null pair (p = q = p_null, correlation rho).
  double p_null = 0.4;
  std::uint64_t master_seed = 1;
  MatchOptions match{};
  int threads = 1;

  void validate() const;
};

struct PowerErRow {
  int s = 0;
  int x = 0;
  std::string variant;
  PowerEstimate estimate;
};

struct PowerErResult {
  std::vector<PowerErRow> rows;
  /// Critical value of the paired statistic under the unshuffled null.
  double paired_critical_value = 0.0;
  double unpaired_critical_value = 0.0;
};

/// Variants: "unpaired" (pooled z against the normal critical value),
/// "paired" (paired z on the shuffled pair against the calibrated value) and
/// "matched" (paired z after seeded matching, same calibrated value).
PowerErResult power_er_experiment(const PowerErConfig& config);

// ------------------------------------------------------- omnibus anomaly test

/// Null pairs used to calibrate the label-free statistics.
enum class InvariantNull {
  /// Independent draws from P.
  kIndependent,
  /// The omnibus null itself: P = Q at maximal correlation, so both graphs
  /// coincide, every invariant statistic is 0 and any difference rejects.
  kModel,
};

struct PowerOmniConfig {
  int n = 100;
  int d = 3;
  int anomalies = 20;
  double mix = 0.2;
  std::vector<int> x_grid{0, 25, 50, 75};
  double alpha = 0.05;
  int mc_reps = 100;
  int n_null = 999;
  bool redraw_latents = false;
  InvariantNull invariant_null = InvariantNull::kIndependent;
  std::uint64_t master_seed = 1;
  MatchOptions match{};
  int threads = 1;

  void validate() const;
};

struct PowerOmniRow {
  int x = 0;
  std::string variant;
  PowerEstimate estimate;
  double critical_value = 0.0;
};

struct PowerOmniResult {
  std::vector<PowerOmniRow> rows;
};

/// For each x the x unseeded vertices are shuffled under both hypotheses.
/// Variants: "omni" (omnibus statistic on the shuffled pair), "omni_matched"
/// (seeded matching with the n − x seeds first, under both hypotheses) and
/// the label-free "max_degree", "triangles", "spectral".
PowerOmniResult power_omni_experiment(const PowerOmniConfig& config);

// -------------------------------------------------------- joint clustering

struct ClusterConfig {
  SbmParams params;
  std::vector<double> rho_grid{0.1, 0.3, 0.5};
  /// Empty: aligned comparison of "omni" and "single". Otherwise one row
  /// group per seed count with "omni_shuffled", "single", "omni_matched".
  std::vector<int> seeds_grid;
  int d = 2;
  int k = 2;
  int mc_reps = 200;
  std::uint64_t master_seed = 1;
  GmmOptions gmm{};
  MatchOptions match{};
  int threads = 1;

  ClusterConfig();
  void validate() const;
};

struct ClusterRow {
  double rho = 0.0;
  int s = 0;
  std::string variant;
  double mean_ari = 0.0;
  double se = 0.0;
};

struct ClusterResult {
  std::vector<ClusterRow> rows;
  /// ari[row][r] per replicate, aligned with rows.
  std::vector<std::vector<double>> ari;
};

/// ARI is scored against the block labels of G1's vertices, using the
/// first-n slice for joint clusterings.
ClusterResult cluster_experiment(const ClusterConfig& config);

// ------------------------------------------------------ user-supplied pair

struct RealClusterConfig {
  std::vector<int> seeds_grid{0};
  /// Embedding dimension; 0 selects it by the scree elbow of G1's spectrum.
  int d = 0;
  int k = 2;
  int mc_reps = 10;
  std::uint64_t master_seed = 1;
  GmmOptions gmm{};
  MatchOptions match{};
  int threads = 1;
};

struct RealClusterResult {
  std::vector<ClusterRow> rows;
  int d = 0;
};

/// Single-graph, joint (with the unseeded vertices of b shuffled) and
/// matched-joint clustering of a on a shared vertex set, scored against
/// `labels`. rho in the rows is the sample edge correlation of (a, b).
RealClusterResult cluster_real_experiment(const Graph& a, const Graph& b,
                                          const std::vector<int>& labels,
                                          const RealClusterConfig& config);

}  // namespace matchinfo
