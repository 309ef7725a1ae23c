#include "matchinfo/information.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace matchinfo {

namespace {

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
  }
}

double xlogy_ratio(double mass, double ratio) {
  return mass > 0.0 ? mass * std::log(ratio) : 0.0;
}

// Per-pair joint table of a ρ-correlated Bernoulli(p) pair.
struct PairTable {
  double p11, p10, p01, p00;
};

PairTable pair_table(double p, double rho) {
  const double p11 = p * (p + rho * (1.0 - p));
  const double off = p * (1.0 - p) * (1.0 - rho);
  const double p00 = (1.0 - p) * (1.0 - p + p * rho);
  return {p11, off, off, p00};
}

}  // namespace

PairCounts PairCounts::from_partition(const BlockPartition& partition) {
  const int k = partition.num_blocks();
  const auto& sizes = partition.sizes();
  PairCounts out;
  out.counts.assign(k, std::vector<std::int64_t>(k, 0));
  for (int i = 0; i < k; ++i) {
    const std::int64_t ni = sizes[i];
    out.counts[i][i] = ni * (ni - 1) / 2;
    for (int j = i + 1; j < k; ++j) out.counts[i][j] = ni * sizes[j];
  }
  return out;
}

std::int64_t PairCounts::total() const {
  std::int64_t t = 0;
  for (const auto& row : counts) {
    for (std::int64_t c : row) t += c;
  }
  return t;
}

double binary_entropy(double p) {
  require_unit_interval(p, "binary_entropy: p");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

double bernoulli_pair_mi(double p, double rho) {
  require_unit_interval(p, "bernoulli_pair_mi: p");
  require_unit_interval(rho, "bernoulli_pair_mi: rho");
  if (p == 0.0 || p == 1.0 || rho == 0.0) return 0.0;
  if (rho == 1.0) return binary_entropy(p);
  const double q = 1.0 - p;
  return p * (p + rho * q) * std::log1p(rho * q / p) +
         2.0 * p * q * (1.0 - rho) * std::log1p(-rho) +
         q * (q + p * rho) * std::log1p(rho * p / q);
}

double rho_sbm_mi(const SbmParams& params, double rho) {
  params.validate();
  require_unit_interval(rho, "rho_sbm_mi: rho");
  const PairCounts pc = PairCounts::from_partition(params.partition);
  double total = 0.0;
  for (int i = 0; i < params.partition.num_blocks(); ++i) {
    for (int j = i; j < params.partition.num_blocks(); ++j) {
      total += static_cast<double>(pc.counts[i][j]) *
               bernoulli_pair_mi(params.lambda(i, j), rho);
    }
  }
  return total;
}

double sbm_entropy(const SbmParams& params) {
  params.validate();
  const PairCounts pc = PairCounts::from_partition(params.partition);
  double total = 0.0;
  for (int i = 0; i < params.partition.num_blocks(); ++i) {
    for (int j = i; j < params.partition.num_blocks(); ++j) {
      total += static_cast<double>(pc.counts[i][j]) * binary_entropy(params.lambda(i, j));
    }
  }
  return total;
}

namespace {

std::vector<double> pair_probabilities(const SbmParams& params) {
  std::vector<double> probs;
  const std::size_t n = params.num_vertices();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) probs.push_back(params.edge_probability(u, v));
  }
  return probs;
}

}  // namespace

// Σ_{x,y} P(x,y) log(P(x,y) / (P(x)P(y))) over all 2^m × 2^m graph pairs,
// where m = C(n,2) and graphs are bitmasks over the vertex pairs.
double brute_force_pair_mi(const SbmParams& params, double rho) {
  params.validate();
  require_unit_interval(rho, "brute_force_pair_mi: rho");
  const std::vector<double> probs = pair_probabilities(params);
  const std::size_t m = probs.size();
  if (m > 12) throw std::invalid_argument("brute_force_pair_mi: C(n,2) must be <= 12");
  const std::uint32_t graphs = 1u << m;

  std::vector<PairTable> tables;
  for (double p : probs) tables.push_back(pair_table(p, rho));

  std::vector<double> marginal(graphs, 1.0);
  for (std::uint32_t x = 0; x < graphs; ++x) {
    for (std::size_t k = 0; k < m; ++k) {
      marginal[x] *= ((x >> k) & 1u) ? probs[k] : 1.0 - probs[k];
    }
  }

  long double total = 0.0L;
  for (std::uint32_t x = 0; x < graphs; ++x) {
    if (marginal[x] == 0.0) continue;
    for (std::uint32_t y = 0; y < graphs; ++y) {
      if (marginal[y] == 0.0) continue;
      double joint = 1.0;
      for (std::size_t k = 0; k < m && joint > 0.0; ++k) {
        const bool ex = (x >> k) & 1u;
        const bool ey = (y >> k) & 1u;
        const PairTable& t = tables[k];
        joint *= ex ? (ey ? t.p11 : t.p10) : (ey ? t.p01 : t.p00);
      }
      total += xlogy_ratio(joint, joint / (marginal[x] * marginal[y]));
    }
  }
  return static_cast<double>(total);
}

double brute_force_sbm_entropy(const SbmParams& params) {
  params.validate();
  const std::vector<double> probs = pair_probabilities(params);
  const std::size_t m = probs.size();
  if (m > 20) throw std::invalid_argument("brute_force_sbm_entropy: C(n,2) must be <= 20");
  long double total = 0.0L;
  for (std::uint32_t x = 0; x < (1u << m); ++x) {
    double p = 1.0;
    for (std::size_t k = 0; k < m; ++k) p *= ((x >> k) & 1u) ? probs[k] : 1.0 - probs[k];
    if (p > 0.0) total -= p * std::log(p);
  }
  return static_cast<double>(total);
}

double mi_small_rho_ratio(const SbmParams& params, double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("mi_small_rho_ratio: rho must lie in (0,1]");
  }
  const double n = static_cast<double>(params.num_vertices());
  const double pairs = n * (n - 1.0) / 2.0;
  return rho_sbm_mi(params, rho) / (rho * rho * pairs / 2.0);
}

}  // namespace matchinfo
