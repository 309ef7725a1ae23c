#include "matchinfo/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "matchinfo/embedding.hpp"
#include "matchinfo/parallel.hpp"

namespace matchinfo {

namespace {

constexpr std::uint64_t kPhaseTag = 0x7068617365ULL;
constexpr std::uint64_t kPowerErTag = 0x706f776572ULL;
constexpr std::uint64_t kPowerOmniTag = 0x6f6d6e69ULL;
constexpr std::uint64_t kClusterTag = 0x636c7573ULL;
constexpr std::uint64_t kRealTag = 0x7265616cULL;

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& v) {
  MeanSe out;
  if (v.empty()) return out;
  double sum = 0.0;
  for (double x : v) sum += x;
  out.mean = sum / static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - out.mean) * (x - out.mean);
    out.se = std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void require_grid(const std::vector<int>& grid, int lo, int hi, const std::string& name) {
  require(!grid.empty(), name + " must be nonempty");
  for (int v : grid) {
    require(v >= lo && v <= hi, name + " entries must lie in [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
  }
}

void require_null_size(int n_null, double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0,1)");
  require(n_null >= 1 && n_null * alpha >= 1.0 - 1e-9, "n_null must be at least 1/alpha");
}

HeterogeneousPair constant_pair(int n, double p, double q, double rho) {
  return {Eigen::MatrixXd::Constant(n, n, p), Eigen::MatrixXd::Constant(n, n, q),
          Eigen::MatrixXd::Constant(n, n, rho)};
}

// Seeds are a uniform s-subset; the shuffle moves a uniform k-subset of the
// rest. Both graphs keep the seed labels, so seed pairs are (v, v).
struct PlantedShuffle {
  std::vector<int> seeds;
  Permutation sigma;
};

PlantedShuffle plant_shuffle(std::size_t n, int s, int k, RngStream& rng) {
  PlantedShuffle out;
  out.seeds = sample_subset(n, s, rng);
  out.sigma = sample_subset_shuffle(n, out.seeds, k, rng);
  return out;
}

}  // namespace

SbmParams three_block_params() {
  SbmParams params;
  params.partition = BlockPartition({50, 50, 50});
  params.lambda.resize(3, 3);
  params.lambda << 0.5, 0.3, 0.2, 0.3, 0.5, 0.3, 0.2, 0.3, 0.5;
  return params;
}

// ---------------------------------------------------------------- matchability

PhaseTransitionResult phase_transition_experiment(const PhaseTransitionConfig& config) {
  config.params.validate();
  require(!config.rho_grid.empty(), "rho grid must be nonempty");
  for (double rho : config.rho_grid) require(rho >= 0.0 && rho <= 1.0, "rho must lie in [0,1]");
  require(config.mc_reps >= 1, "mc_reps must be positive");

  const RngStream root(config.master_seed, kPhaseTag);
  const std::size_t grid = config.rho_grid.size();
  const auto reps = static_cast<std::size_t>(config.mc_reps);
  const std::size_t n = config.params.num_vertices();

  PhaseTransitionResult result;
  result.replicates.assign(grid, std::vector<PhaseTransitionReplicate>(reps));
  parallel_for(grid * reps, config.threads, [&](std::size_t job) {
    const std::size_t g = job / reps, r = job % reps;
    RngStream rng = root.substream(g).substream(r);
    const auto [g1, g2] = sample_rho_sbm(config.params, {config.rho_grid[g]}, rng);
    PhaseTransitionReplicate& out = result.replicates[g][r];
    const std::int64_t identity_objective = gm_objective(g1, g2, Permutation::identity(n));
    const MatchResult m = faq_match(g1, g2, config.match);
    const Graph matched = apply_permutation(g2, m.permutation);
    const Permutation sigma = sample_uniform_permutation(n, rng);
    out.identity_disagreements = static_cast<double>(identity_objective / 2);
    out.matched_disagreements = static_cast<double>(m.objective / 2);
    out.identity_correlation = sample_edge_correlation(g1, g2);
    out.matched_correlation = sample_edge_correlation(g1, matched);
    out.shuffled_correlation = sample_edge_correlation(g1, apply_permutation(g2, sigma));
    out.identity_is_fixed_point = m.objective == identity_objective ? 1.0 : 0.0;
    if (config.transposition_sweep) {
      out.improving_transposition =
          transposition_sweep(g1, g2, config.params.partition).found ? 1.0 : 0.0;
    }
  });

  struct Field {
    const char* name;
    double PhaseTransitionReplicate::*member;
  };
  std::vector<Field> fields{
      {"identity_disagreements", &PhaseTransitionReplicate::identity_disagreements},
      {"matched_disagreements", &PhaseTransitionReplicate::matched_disagreements},
      {"identity_correlation", &PhaseTransitionReplicate::identity_correlation},
      {"matched_correlation", &PhaseTransitionReplicate::matched_correlation},
      {"shuffled_correlation", &PhaseTransitionReplicate::shuffled_correlation},
      {"identity_is_fixed_point", &PhaseTransitionReplicate::identity_is_fixed_point},
  };
  if (config.transposition_sweep) {
    fields.push_back({"improving_transposition", &PhaseTransitionReplicate::improving_transposition});
  }
  for (std::size_t g = 0; g < grid; ++g) {
    for (const Field& f : fields) {
      std::vector<double> values;
      for (const auto& rep : result.replicates[g]) values.push_back(rep.*(f.member));
      const MeanSe ms = mean_se(values);
      result.rows.push_back({config.rho_grid[g], f.name, ms.mean, ms.se});
    }
  }
  return result;
}

// ------------------------------------------------------------- ER power test

void PowerErConfig::validate() const {
  require(n >= 2, "n must be at least 2");
  require(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0, "p and q must lie in (0,1)");
  require(p_null > 0.0 && p_null < 1.0, "p_null must lie in (0,1)");
  require(rho >= 0.0 && rho <= 1.0, "rho must lie in [0,1]");
  require(rho <= max_feasible_correlation(p, q) + 1e-12,
          "rho exceeds the largest feasible correlation for (p, q)");
  require_grid(s_grid, 0, n, "s grid");
  require_grid(x_grid, 0, n, "x grid");
  require(mc_reps >= 1, "mc_reps must be positive");
  require_null_size(n_null, alpha);
}

PowerErResult power_er_experiment(const PowerErConfig& config) {
  config.validate();
  const RngStream root(config.master_seed, kPowerErTag);
  const auto n = static_cast<std::size_t>(config.n);
  const HeterogeneousPair alt = constant_pair(config.n, config.p, config.q, config.rho);
  const HeterogeneousPair null =
      constant_pair(config.n, config.p_null, config.p_null, config.rho);

  PowerErResult result;
  // Least favorable null: nothing shuffled.
  result.paired_critical_value = empirical_critical_value(
      [&](RngStream& rng) {
        const auto [a, b] = sample_correlated_heterogeneous(null, rng);
        return paired_z(a, b);
      },
      config.alpha, config.n_null, root.substream(0), config.threads);
  result.unpaired_critical_value = two_sided_normal_critical_value(config.alpha);

  const std::size_t ns = config.s_grid.size(), nx = config.x_grid.size();
  const std::size_t cells = ns * nx;
  const auto reps = static_cast<std::size_t>(config.mc_reps);
  // rejects[rep][cell][variant]
  std::vector<std::vector<std::array<char, 3>>> rejects(
      reps, std::vector<std::array<char, 3>>(cells, {0, 0, 0}));
  parallel_for(reps, config.threads, [&](std::size_t r) {
    RngStream rng = root.substream(1).substream(r);
    const auto [g1, g2] = sample_correlated_heterogeneous(alt, rng);
    const bool unpaired = pooled_z(g1, g2) > result.unpaired_critical_value;
    for (std::size_t si = 0; si < ns; ++si) {
      for (std::size_t xi = 0; xi < nx; ++xi) {
        const std::size_t cell = si * nx + xi;
        RngStream srng = root.substream(2).substream(cell).substream(r);
        const int s = config.s_grid[si];
        const int k = std::min(config.n - s, config.x_grid[xi]);
        const PlantedShuffle plant = plant_shuffle(n, s, k, srng);
        const Graph b = apply_permutation(g2, plant.sigma);
        const Graph aligned =
            match_and_align(g1, b, SeedSet::identity_on(plant.seeds), config.match);
        auto& out = rejects[r][cell];
        out[0] = unpaired;
        out[1] = paired_z(g1, b) > result.paired_critical_value;
        out[2] = paired_z(g1, aligned) > result.paired_critical_value;
      }
    }
  });

  const char* names[3] = {"unpaired", "paired", "matched"};
  for (std::size_t si = 0; si < ns; ++si) {
    for (std::size_t xi = 0; xi < nx; ++xi) {
      for (int v = 0; v < 3; ++v) {
        std::int64_t count = 0;
        for (std::size_t r = 0; r < reps; ++r) count += rejects[r][si * nx + xi][v];
        result.rows.push_back({config.s_grid[si], config.x_grid[xi], names[v],
                               PowerEstimate::from_counts(count, config.mc_reps)});
      }
    }
  }
  return result;
}

// ------------------------------------------------------- omnibus anomaly test

void PowerOmniConfig::validate() const {
  require(n >= 2, "n must be at least 2");
  require(d >= 1 && d <= 2 * n, "d must lie in [1, 2n]");
  require(anomalies >= 0 && anomalies <= n, "anomalies must lie in [0, n]");
  require(mix >= 0.0 && mix <= 1.0, "mix must lie in [0,1]");
  require_grid(x_grid, 0, n, "x grid");
  require(mc_reps >= 1, "mc_reps must be positive");
  require_null_size(n_null, alpha);
}

namespace {

constexpr int kOmniVariants = 5;
const char* const kOmniNames[kOmniVariants] = {"omni", "omni_matched", "max_degree",
                                               "triangles", "spectral"};
constexpr InvariantKind kInvariants[3] = {InvariantKind::kMaxDegree, InvariantKind::kTriangles,
                                          InvariantKind::kSpectral};

struct Latents {
  Eigen::MatrixXd p;
  Eigen::MatrixXd q;
};

Latents draw_latents(const PowerOmniConfig& c, RngStream& rng) {
  const Eigen::MatrixXd x = sample_dirichlet_positions(c.n, rng);
  const Eigen::MatrixXd y = anomaly_perturb(x, c.anomalies, c.mix, rng);
  return {x * x.transpose(), y * y.transpose()};
}

// Statistics for every variant at one shuffle level. `inv_b` is the graph
// the label-free statistics compare against (before shuffling).
std::array<double, kOmniVariants> omni_statistics(const PowerOmniConfig& c, const Graph& a,
                                                  const Graph& b, const Graph& inv_b, int x,
                                                  RngStream& rng) {
  const auto n = static_cast<std::size_t>(c.n);
  const PlantedShuffle plant = plant_shuffle(n, c.n - x, x, rng);
  const Graph shuffled = apply_permutation(b, plant.sigma);
  const Graph aligned = match_and_align(a, shuffled, SeedSet::identity_on(plant.seeds), c.match);
  const Graph inv_shuffled = apply_permutation(inv_b, plant.sigma);
  std::array<double, kOmniVariants> out{};
  out[0] = t2_omni(a, shuffled, c.d);
  out[1] = t2_omni(a, aligned, c.d);
  for (int i = 0; i < 3; ++i) out[2 + i] = invariant_stat(a, inv_shuffled, kInvariants[i]);
  return out;
}

}  // namespace

PowerOmniResult power_omni_experiment(const PowerOmniConfig& config) {
  config.validate();
  const RngStream root(config.master_seed, kPowerOmniTag);
  RngStream latent_rng = root.substream(0);
  const Latents fixed = draw_latents(config, latent_rng);
  const std::size_t nx = config.x_grid.size();

  // null_stats[xi][variant][draw]
  std::vector<std::vector<std::vector<double>>> null_stats(
      nx, std::vector<std::vector<double>>(kOmniVariants, std::vector<double>(config.n_null)));
  parallel_for(static_cast<std::size_t>(config.n_null), config.threads, [&](std::size_t i) {
    RngStream rng = root.substream(1).substream(i);
    const Latents lat = config.redraw_latents ? draw_latents(config, rng) : fixed;
    const auto [a, b] =
        sample_correlated_heterogeneous(HeterogeneousPair::maximally_correlated(lat.p, lat.p), rng);
    Graph inv_b = b;
    if (config.invariant_null == InvariantNull::kIndependent) {
      RngStream irng = root.substream(3).substream(i);
      inv_b = sample_correlated_heterogeneous(
                  {lat.p, lat.p, Eigen::MatrixXd::Zero(config.n, config.n)}, irng)
                  .second;
    }
    for (std::size_t xi = 0; xi < nx; ++xi) {
      RngStream srng = root.substream(2).substream(xi).substream(i);
      const auto stats = omni_statistics(config, a, b, inv_b, config.x_grid[xi], srng);
      for (int v = 0; v < kOmniVariants; ++v) null_stats[xi][v][i] = stats[v];
    }
  });
  std::vector<std::array<double, kOmniVariants>> crit(nx);
  for (std::size_t xi = 0; xi < nx; ++xi) {
    for (int v = 0; v < kOmniVariants; ++v) {
      crit[xi][v] = critical_value_from_draws(null_stats[xi][v], config.alpha);
    }
  }

  const auto reps = static_cast<std::size_t>(config.mc_reps);
  std::vector<std::vector<std::array<char, kOmniVariants>>> rejects(
      reps, std::vector<std::array<char, kOmniVariants>>(nx));
  parallel_for(reps, config.threads, [&](std::size_t r) {
    RngStream rng = root.substream(4).substream(r);
    const Latents lat = config.redraw_latents ? draw_latents(config, rng) : fixed;
    const auto [a, b] =
        sample_correlated_heterogeneous(HeterogeneousPair::maximally_correlated(lat.p, lat.q), rng);
    for (std::size_t xi = 0; xi < nx; ++xi) {
      RngStream srng = root.substream(5).substream(xi).substream(r);
      const auto stats = omni_statistics(config, a, b, b, config.x_grid[xi], srng);
      for (int v = 0; v < kOmniVariants; ++v) rejects[r][xi][v] = stats[v] > crit[xi][v];
    }
  });

  PowerOmniResult result;
  for (std::size_t xi = 0; xi < nx; ++xi) {
    for (int v = 0; v < kOmniVariants; ++v) {
      std::int64_t count = 0;
      for (std::size_t r = 0; r < reps; ++r) count += rejects[r][xi][v];
      result.rows.push_back({config.x_grid[xi], kOmniNames[v],
                             PowerEstimate::from_counts(count, config.mc_reps), crit[xi][v]});
    }
  }
  return result;
}

// -------------------------------------------------------- joint clustering

ClusterConfig::ClusterConfig() {
  params.partition = BlockPartition({50, 50});
  params.lambda.resize(2, 2);
  params.lambda << 0.1, 0.05, 0.05, 0.2;
}

void ClusterConfig::validate() const {
  params.validate();
  const int n = static_cast<int>(params.num_vertices());
  require(!rho_grid.empty(), "rho grid must be nonempty");
  for (double rho : rho_grid) require(rho >= 0.0 && rho <= 1.0, "rho must lie in [0,1]");
  if (!seeds_grid.empty()) require_grid(seeds_grid, 0, n, "seeds grid");
  require(d >= 1 && d <= n, "d must lie in [1, n]");
  require(k >= 1 && k <= n, "k must lie in [1, n]");
  require(mc_reps >= 1, "mc_reps must be positive");
}

ClusterResult cluster_experiment(const ClusterConfig& config) {
  config.validate();
  const RngStream root(config.master_seed, kClusterTag);
  const std::size_t n = config.params.num_vertices();
  const std::vector<int>& truth = config.params.partition.membership();
  const std::size_t grid = config.rho_grid.size();
  const auto reps = static_cast<std::size_t>(config.mc_reps);
  const bool aligned_only = config.seeds_grid.empty();
  const std::size_t ns = config.seeds_grid.size();
  // Per replicate: single, then omni (aligned_only) or (shuffled, matched) per s.
  const std::size_t slots = aligned_only ? 2 : 1 + 2 * ns;

  std::vector<std::vector<std::vector<double>>> scores(
      grid, std::vector<std::vector<double>>(reps, std::vector<double>(slots)));
  parallel_for(grid * reps, config.threads, [&](std::size_t job) {
    const std::size_t g = job / reps, r = job % reps;
    RngStream rng = root.substream(0).substream(g).substream(r);
    const auto [g1, g2] = sample_rho_sbm(config.params, {config.rho_grid[g]}, rng);
    const RngStream gmm_root = root.substream(1).substream(g).substream(r);
    auto& out = scores[g][r];
    out[0] = ari(single_cluster(g1, config.d, config.k, gmm_root.substream(0), config.gmm).labels,
                 truth);
    if (aligned_only) {
      out[1] = ari(joint_cluster(g1, g2, config.d, config.k, gmm_root.substream(1), config.gmm)
                       .first.labels,
                   truth);
      return;
    }
    for (std::size_t si = 0; si < ns; ++si) {
      RngStream srng = root.substream(2).substream(g).substream(si).substream(r);
      const int s = config.seeds_grid[si];
      const PlantedShuffle plant = plant_shuffle(n, s, static_cast<int>(n) - s, srng);
      const Graph b = apply_permutation(g2, plant.sigma);
      const Graph aligned =
          match_and_align(g1, b, SeedSet::identity_on(plant.seeds), config.match);
      // Shared GMM stream so that an untouched pair scores identically.
      const RngStream gmm = gmm_root.substream(2 + si);
      out[1 + 2 * si] =
          ari(joint_cluster(g1, b, config.d, config.k, gmm, config.gmm).first.labels, truth);
      out[2 + 2 * si] =
          ari(joint_cluster(g1, aligned, config.d, config.k, gmm, config.gmm).first.labels, truth);
    }
  });

  ClusterResult result;
  auto emit = [&](std::size_t g, int s, const char* variant, std::size_t slot) {
    std::vector<double> values;
    for (std::size_t r = 0; r < reps; ++r) values.push_back(scores[g][r][slot]);
    const MeanSe ms = mean_se(values);
    result.rows.push_back({config.rho_grid[g], s, variant, ms.mean, ms.se});
    result.ari.push_back(std::move(values));
  };
  for (std::size_t g = 0; g < grid; ++g) {
    if (aligned_only) {
      emit(g, static_cast<int>(n), "omni", 1);
      emit(g, static_cast<int>(n), "single", 0);
      continue;
    }
    for (std::size_t si = 0; si < ns; ++si) {
      emit(g, config.seeds_grid[si], "omni_shuffled", 1 + 2 * si);
      emit(g, config.seeds_grid[si], "single", 0);
      emit(g, config.seeds_grid[si], "omni_matched", 2 + 2 * si);
    }
  }
  return result;
}

// ------------------------------------------------------ user-supplied pair

RealClusterResult cluster_real_experiment(const Graph& a, const Graph& b,
                                          const std::vector<int>& labels,
                                          const RealClusterConfig& config) {
  const auto n = static_cast<int>(a.size());
  require(b.size() == a.size(), "graphs must share a vertex count");
  require(labels.size() == a.size(), "label count (" + std::to_string(labels.size()) +
                                         ") differs from vertex count (" + std::to_string(n) +
                                         ")");
  require_grid(config.seeds_grid, 0, n, "seeds grid");
  require(config.k >= 1 && config.k <= n, "k must lie in [1, n]");
  require(config.d >= 0 && config.d <= n, "d must lie in [0, n]");
  require(config.mc_reps >= 1, "mc_reps must be positive");

  RealClusterResult result;
  result.d = config.d;
  if (result.d == 0) {
    const SpectralDecomposition eig = magnitude_ordered_eigen(a.to_matrix());
    result.d = scree_elbow(std::span<const double>(eig.values.data(), eig.values.size()));
  }
  const int d = result.d;
  const RngStream root(config.master_seed, kRealTag);
  const double rho = sample_edge_correlation(a, b);
  const std::size_t ns = config.seeds_grid.size();
  const auto reps = static_cast<std::size_t>(config.mc_reps);

  std::vector<std::vector<double>> scores(reps, std::vector<double>(1 + 2 * ns));
  parallel_for(reps, config.threads, [&](std::size_t r) {
    const RngStream gmm_root = root.substream(1).substream(r);
    scores[r][0] = ari(single_cluster(a, d, config.k, gmm_root.substream(0), config.gmm).labels,
                       labels);
    for (std::size_t si = 0; si < ns; ++si) {
      RngStream srng = root.substream(0).substream(si).substream(r);
      const int s = config.seeds_grid[si];
      const PlantedShuffle plant = plant_shuffle(a.size(), s, n - s, srng);
      const Graph shuffled = apply_permutation(b, plant.sigma);
      const Graph aligned =
          match_and_align(a, shuffled, SeedSet::identity_on(plant.seeds), config.match);
      const RngStream gmm = gmm_root.substream(2 + si);
      scores[r][1 + 2 * si] =
          ari(joint_cluster(a, shuffled, d, config.k, gmm, config.gmm).first.labels, labels);
      scores[r][2 + 2 * si] =
          ari(joint_cluster(a, aligned, d, config.k, gmm, config.gmm).first.labels, labels);
    }
  });

  auto emit = [&](int s, const char* variant, std::size_t slot) {
    std::vector<double> values;
    for (std::size_t r = 0; r < reps; ++r) values.push_back(scores[r][slot]);
    const MeanSe ms = mean_se(values);
    result.rows.push_back({rho, s, variant, ms.mean, ms.se});
  };
  for (std::size_t si = 0; si < ns; ++si) {
    emit(config.seeds_grid[si], "omni_shuffled", 1 + 2 * si);
    emit(config.seeds_grid[si], "single", 0);
    emit(config.seeds_grid[si], "omni_matched", 2 + 2 * si);
  }
  return result;
}

}  // namespace matchinfo
