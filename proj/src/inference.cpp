#include "matchinfo/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

#include "matchinfo/parallel.hpp"

namespace matchinfo {

PowerEstimate PowerEstimate::from_counts(std::int64_t rejections, int mc_reps) {
  if (mc_reps <= 0) throw std::invalid_argument("PowerEstimate: mc_reps must be positive");
  const double p = static_cast<double>(rejections) / mc_reps;
  return {p, mc_reps, std::sqrt(p * (1.0 - p) / mc_reps)};
}

namespace {

struct Densities {
  double p1, p2, pooled, pairs;
};

Densities densities(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) throw std::invalid_argument("z-test: graph sizes differ");
  if (a.size() < 2) throw std::invalid_argument("z-test: need at least two vertices");
  const double n = static_cast<double>(a.size());
  const double pairs = n * (n - 1.0) / 2.0;
  const double p1 = static_cast<double>(a.edge_count()) / pairs;
  const double p2 = static_cast<double>(b.edge_count()) / pairs;
  return {p1, p2, 0.5 * (p1 + p2), pairs};
}

}  // namespace

double pooled_z(const Graph& a, const Graph& b) {
  const Densities d = densities(a, b);
  if (d.pooled <= 0.0 || d.pooled >= 1.0) return 0.0;
  return std::abs(d.p1 - d.p2) / std::sqrt(2.0 * d.pooled * (1.0 - d.pooled) / d.pairs);
}

double paired_z(const Graph& a, const Graph& b) {
  const Densities d = densities(a, b);
  if (d.pooled <= 0.0 || d.pooled >= 1.0) return 0.0;
  const double rho = sample_edge_correlation(a, b);
  const double diff = std::abs(d.p1 - d.p2);
  if (rho >= 1.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / std::sqrt(2.0 * d.pooled * (1.0 - d.pooled) * (1.0 - rho) / d.pairs);
}

std::string to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::kMaxDegree: return "max_degree";
    case InvariantKind::kTriangles: return "triangles";
    case InvariantKind::kSpectral: return "spectral";
  }
  return "unknown";
}

InvariantKind parse_invariant_kind(const std::string& name) {
  if (name == "max_degree") return InvariantKind::kMaxDegree;
  if (name == "triangles") return InvariantKind::kTriangles;
  if (name == "spectral") return InvariantKind::kSpectral;
  throw std::invalid_argument("unknown invariant '" + name + "'");
}

double graph_invariant(const Graph& g, InvariantKind kind) {
  switch (kind) {
    case InvariantKind::kMaxDegree: return static_cast<double>(max_degree(g));
    case InvariantKind::kTriangles: return static_cast<double>(triangle_count(g));
    case InvariantKind::kSpectral: return spectral_norm(g);
  }
  throw std::invalid_argument("unknown invariant kind");
}

double invariant_stat(const Graph& a, const Graph& b, InvariantKind kind) {
  return std::abs(graph_invariant(a, kind) - graph_invariant(b, kind));
}

double critical_value_from_draws(std::vector<double> draws, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  const auto m = static_cast<double>(draws.size());
  if (draws.empty() || m * alpha < 1.0 - 1e-9) {
    throw std::invalid_argument("critical value: need at least 1/alpha null draws");
  }
  // Guard keeps e.g. 0.95 * 1000 from rounding up to 951.
  auto rank = static_cast<std::size_t>(std::ceil((1.0 - alpha) * (m + 1.0) - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, draws.size());
  std::nth_element(draws.begin(), draws.begin() + (rank - 1), draws.end());
  return draws[rank - 1];
}

double empirical_critical_value(const std::function<double(RngStream&)>& null_sampler,
                                double alpha, int n_null, const RngStream& rng,
                                int threads) {
  if (n_null < 1) throw std::invalid_argument("empirical_critical_value: n_null must be positive");
  if (static_cast<double>(n_null) * alpha < 1.0 - 1e-9) {
    throw std::invalid_argument("empirical_critical_value: need n_null >= 1/alpha");
  }
  std::vector<double> draws(n_null);
  parallel_for(draws.size(), threads, [&](std::size_t i) {
    RngStream local = rng.substream(i);
    draws[i] = null_sampler(local);
  });
  return critical_value_from_draws(std::move(draws), alpha);
}

double two_sided_normal_critical_value(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  return boost::math::quantile(boost::math::normal_distribution<double>(), 1.0 - alpha / 2.0);
}

}  // namespace matchinfo
