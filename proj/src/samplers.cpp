#include "matchinfo/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace matchinfo {

namespace {

constexpr double kFeasibilitySlack = 1e-12;

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

// Two uniforms per pair, always, so that samplers sharing this routine
// consume their streams identically.
std::pair<bool, bool> draw_correlated(RngStream& rng, double p_first,
                                      double p_second_if_present,
                                      double p_second_if_absent) {
  const bool first = rng.uniform() < p_first;
  const bool second =
      rng.uniform() < (first ? p_second_if_present : p_second_if_absent);
  return {first, second};
}

struct ConditionalTable {
  double if_present;
  double if_absent;
};

ConditionalTable equal_marginal_table(double p, double rho) {
  return {p + rho * (1.0 - p), p * (1.0 - rho)};
}

ConditionalTable unequal_marginal_table(double p, double q, double rho) {
  if (p == q) return equal_marginal_table(p, rho);
  const double both = joint_both_present(p, q, rho);
  const double if_present = p > 0.0 ? both / p : 0.0;
  const double if_absent = p < 1.0 ? (q - both) / (1.0 - p) : 0.0;
  return {std::clamp(if_present, 0.0, 1.0), std::clamp(if_absent, 0.0, 1.0)};
}

Eigen::RowVector3d dirichlet_111(RngStream& rng) {
  Eigen::RowVector3d row(rng.exponential(), rng.exponential(), rng.exponential());
  return row / row.sum();
}

}  // namespace

void SbmParams::validate() const {
  const auto k = static_cast<Eigen::Index>(partition.num_blocks());
  if (k < 1) throw std::invalid_argument("SbmParams: need at least one block");
  if (lambda.rows() != k || lambda.cols() != k) {
    throw std::invalid_argument("SbmParams: lambda must be K×K with K = " +
                                std::to_string(k));
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      if (!is_probability(lambda(i, j))) {
        throw std::invalid_argument("SbmParams: lambda entries must lie in [0,1]");
      }
      if (lambda(i, j) != lambda(j, i)) {
        throw std::invalid_argument("SbmParams: lambda must be symmetric");
      }
    }
  }
}

void CorrelationSpec::validate() const {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("CorrelationSpec: rho must lie in [0,1]");
  }
}

HeterogeneousPair HeterogeneousPair::maximally_correlated(const Eigen::MatrixXd& p,
                                                          const Eigen::MatrixXd& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw std::invalid_argument("maximally_correlated: shape mismatch");
  }
  HeterogeneousPair out{p, q, Eigen::MatrixXd::Zero(p.rows(), p.cols())};
  for (Eigen::Index u = 0; u < p.rows(); ++u) {
    for (Eigen::Index v = 0; v < p.cols(); ++v) {
      if (u != v) out.rho(u, v) = max_feasible_correlation(p(u, v), q(u, v));
    }
  }
  return out;
}

void HeterogeneousPair::validate() const {
  const Eigen::Index n = p.rows();
  if (p.cols() != n || q.rows() != n || q.cols() != n || rho.rows() != n ||
      rho.cols() != n) {
    throw std::invalid_argument("HeterogeneousPair: matrices must be n×n");
  }
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Eigen::Index v = u + 1; v < n; ++v) {
      const double puv = p(u, v), quv = q(u, v), r = rho(u, v);
      if (puv != p(v, u) || quv != q(v, u) || r != rho(v, u)) {
        throw std::invalid_argument("HeterogeneousPair: matrices must be symmetric");
      }
      if (!is_probability(puv) || !is_probability(quv)) {
        throw std::invalid_argument("HeterogeneousPair: probabilities outside [0,1]");
      }
      if (!(r >= 0.0 && r <= 1.0)) {
        throw std::invalid_argument("HeterogeneousPair: correlation outside [0,1]");
      }
      if (r > max_feasible_correlation(puv, quv) + kFeasibilitySlack &&
          puv > 0.0 && puv < 1.0 && quv > 0.0 && quv < 1.0) {
        throw std::invalid_argument("HeterogeneousPair: infeasible correlation at (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
      }
    }
  }
}

Graph sample_sbm(const SbmParams& params, RngStream& rng) {
  params.validate();
  const std::size_t n = params.num_vertices();
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.uniform() < params.edge_probability(u, v)) g.set_edge(u, v, true);
    }
  }
  return g;
}

std::pair<Graph, Graph> sample_rho_sbm(const SbmParams& params,
                                       const CorrelationSpec& corr, RngStream& rng) {
  params.validate();
  corr.validate();
  const std::size_t n = params.num_vertices();
  Graph g1(n), g2(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double p = params.edge_probability(u, v);
      const auto table = equal_marginal_table(p, corr.rho);
      const auto [e1, e2] = draw_correlated(rng, p, table.if_present, table.if_absent);
      if (e1) g1.set_edge(u, v, true);
      if (e2) g2.set_edge(u, v, true);
    }
  }
  return {std::move(g1), std::move(g2)};
}

std::pair<BipartiteGraph, BipartiteGraph> sample_rho_bipartite(
    int m1, int m2, double p, const CorrelationSpec& corr, RngStream& rng) {
  if (m1 < 0 || m2 < 0) throw std::invalid_argument("sample_rho_bipartite: negative side");
  if (!is_probability(p)) throw std::invalid_argument("sample_rho_bipartite: p outside [0,1]");
  corr.validate();
  BipartiteGraph g1(m1, m2), g2(m1, m2);
  const auto table = equal_marginal_table(p, corr.rho);
  for (int i = 0; i < m1; ++i) {
    for (int j = 0; j < m2; ++j) {
      const auto [e1, e2] = draw_correlated(rng, p, table.if_present, table.if_absent);
      g1.set_edge(i, j, e1);
      g2.set_edge(i, j, e2);
    }
  }
  return {std::move(g1), std::move(g2)};
}

double max_feasible_correlation(double p, double q) {
  if (!is_probability(p) || !is_probability(q)) {
    throw std::invalid_argument("max_feasible_correlation: arguments outside [0,1]");
  }
  if (p <= 0.0 || p >= 1.0 || q <= 0.0 || q >= 1.0) return 0.0;
  if (p == q) return 1.0;
  const double ratio = (p * (1.0 - q)) / (q * (1.0 - p));
  return std::min(std::sqrt(ratio), std::sqrt(1.0 / ratio));
}

double joint_both_present(double p, double q, double rho) {
  return p * q + rho * std::sqrt(p * q * (1.0 - p) * (1.0 - q));
}

std::pair<Graph, Graph> sample_correlated_heterogeneous(const HeterogeneousPair& spec,
                                                        RngStream& rng) {
  spec.validate();
  const auto n = static_cast<std::size_t>(spec.p.rows());
  Graph g1(n), g2(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto i = static_cast<Eigen::Index>(u), j = static_cast<Eigen::Index>(v);
      const double p = spec.p(i, j);
      const auto table = unequal_marginal_table(p, spec.q(i, j), spec.rho(i, j));
      const auto [e1, e2] = draw_correlated(rng, p, table.if_present, table.if_absent);
      if (e1) g1.set_edge(u, v, true);
      if (e2) g2.set_edge(u, v, true);
    }
  }
  return {std::move(g1), std::move(g2)};
}

Eigen::MatrixXd sample_dirichlet_positions(int n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_dirichlet_positions: n must be >= 1");
  Eigen::MatrixXd x(n, 3);
  for (int i = 0; i < n; ++i) x.row(i) = dirichlet_111(rng);
  return x;
}

Eigen::MatrixXd anomaly_perturb(const Eigen::MatrixXd& x, int m, double w, RngStream& rng) {
  if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("anomaly_perturb: w outside [0,1]");
  if (m < 0 || m > x.rows()) throw std::invalid_argument("anomaly_perturb: m outside [0,n]");
  if (x.cols() != 3) throw std::invalid_argument("anomaly_perturb: expected 3 columns");
  Eigen::MatrixXd y = x;
  for (int i = 0; i < m; ++i) {
    const Eigen::RowVector3d d = dirichlet_111(rng);
    y.row(i) = (1.0 - w) * x.row(i) + w * d;
  }
  return y;
}

Permutation sample_uniform_permutation(std::size_t n, RngStream& rng) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_below(i));
    std::swap(m[i - 1], m[j]);
  }
  return Permutation(std::move(m));
}

Permutation sample_block_permutation(const BlockPartition& partition, RngStream& rng) {
  std::vector<int> m(partition.num_vertices());
  std::iota(m.begin(), m.end(), 0);
  for (int b = 0; b < partition.num_blocks(); ++b) {
    const std::vector<int> members = partition.vertices_in(b);
    const Permutation local = sample_uniform_permutation(members.size(), rng);
    for (std::size_t i = 0; i < members.size(); ++i) m[members[i]] = members[local(i)];
  }
  return Permutation(std::move(m));
}

std::vector<int> sample_subset(std::size_t n, int k, RngStream& rng) {
  if (k < 0 || static_cast<std::size_t>(k) > n) {
    throw std::invalid_argument("sample_subset: k outside [0,n]");
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Permutation sample_subset_shuffle(std::size_t n, const std::vector<int>& seed_set, int k,
                                  RngStream& rng) {
  std::vector<char> is_seed(n, 0);
  for (int s : seed_set) {
    if (s < 0 || static_cast<std::size_t>(s) >= n) {
      throw std::invalid_argument("sample_subset_shuffle: seed outside [0,n)");
    }
    if (is_seed[s]) throw std::invalid_argument("sample_subset_shuffle: repeated seed");
    is_seed[s] = 1;
  }
  std::vector<int> free_vertices;
  for (std::size_t v = 0; v < n; ++v) {
    if (!is_seed[v]) free_vertices.push_back(static_cast<int>(v));
  }
  if (k < 0 || static_cast<std::size_t>(k) > free_vertices.size()) {
    throw std::invalid_argument("sample_subset_shuffle: k exceeds n − |seeds|");
  }
  const std::vector<int> chosen_idx = sample_subset(free_vertices.size(), k, rng);
  std::vector<int> chosen;
  chosen.reserve(k);
  for (int i : chosen_idx) chosen.push_back(free_vertices[i]);
  const Permutation local = sample_uniform_permutation(chosen.size(), rng);
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  for (std::size_t i = 0; i < chosen.size(); ++i) m[chosen[i]] = chosen[local(i)];
  return Permutation(std::move(m));
}

Permutation sample_shuffle(std::size_t n, const ShuffleSpec& spec,
                           const BlockPartition* partition, RngStream& rng) {
  switch (spec.mode) {
    case ShuffleMode::kUniformAll:
      if (!spec.seed_set.empty()) {
        return sample_subset_shuffle(n, spec.seed_set,
                                     static_cast<int>(n - spec.seed_set.size()), rng);
      }
      return sample_uniform_permutation(n, rng);
    case ShuffleMode::kBlockPreserving:
      if (partition == nullptr || partition->num_vertices() != n) {
        throw std::invalid_argument("block-preserving shuffle needs a matching partition");
      }
      return sample_block_permutation(*partition, rng);
    case ShuffleMode::kSubset:
      return sample_subset_shuffle(n, spec.seed_set, spec.subset_size, rng);
  }
  throw std::invalid_argument("unknown shuffle mode");
}

std::pair<Graph, Graph> shuffle_pair(const std::pair<Graph, Graph>& pair,
                                     const Permutation& sigma) {
  if (pair.first.size() != pair.second.size()) {
    throw std::invalid_argument("shuffle_pair: graph sizes differ");
  }
  return {pair.first, apply_permutation(pair.second, sigma)};
}

}  // namespace matchinfo
