#pragma once

// Slow reference computations written directly from the definitions. They
// share no code with the library beyond the Graph container.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "matchinfo/graph.hpp"
#include "matchinfo/rng.hpp"

namespace oracle {

using matchinfo::Graph;
using matchinfo::Permutation;

inline Eigen::MatrixXi adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index u = 0; u < n; ++u)
    for (Eigen::Index v = 0; v < n; ++v) m(u, v) = g.has_edge(u, v) ? 1 : 0;
  return m;
}

// P with P(phi(i), i) = 1, so (P B Pᵀ)(phi(i), phi(j)) = B(i, j).
inline Eigen::MatrixXi perm_matrix(const Permutation& phi) {
  const auto n = static_cast<Eigen::Index>(phi.size());
  Eigen::MatrixXi p = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) p(phi(i), i) = 1;
  return p;
}

inline std::int64_t frobenius_objective(const Graph& a, const Graph& b, const Permutation& phi) {
  const Eigen::MatrixXi p = perm_matrix(phi);
  const Eigen::MatrixXi diff = adjacency(a) - p * adjacency(b) * p.transpose();
  return diff.cwiseProduct(diff).sum();
}

inline std::int64_t trace_objective(const Graph& a, const Graph& b, const Permutation& phi) {
  const Eigen::MatrixXi p = perm_matrix(phi);
  return (adjacency(a) * p * adjacency(b) * p.transpose()).trace();
}

inline std::int64_t triangles(const Graph& g) {
  const std::size_t n = g.size();
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (g.has_edge(i, j) && g.has_edge(j, k) && g.has_edge(i, k)) ++t;
  return t;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Minimum over all n! assignments; ties resolved to the lexicographically
// smallest assignment because permutations are visited in that order.
struct BruteLap {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<int> assignment;
};

inline BruteLap brute_lap(const Eigen::MatrixXd& c) {
  const int n = static_cast<int>(c.rows());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  BruteLap best;
  do {
    double total = 0;
    for (int i = 0; i < n; ++i) total += c(i, p[i]);
    if (total < best.cost) {
      best.cost = total;
      best.assignment = p;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Adjusted Rand index by counting agreeing vertex pairs directly.
inline double pair_count_ari(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = a.size();
  double both = 0, in_a = 0, in_b = 0, pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool sa = a[i] == a[j], sb = b[i] == b[j];
      both += sa && sb;
      in_a += sa;
      in_b += sb;
      pairs += 1;
    }
  }
  const double expected = in_a * in_b / pairs;
  const double max_index = 0.5 * (in_a + in_b);
  return (both - expected) / (max_index - expected);
}

inline Graph random_graph(std::size_t n, double p, matchinfo::RngStream& rng) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.uniform() < p) g.set_edge(u, v, true);
  return g;
}

inline Permutation random_permutation(std::size_t n, matchinfo::RngStream& rng) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(m[i - 1], m[rng.uniform_below(i)]);
  return Permutation(std::move(m));
}

inline Eigen::MatrixXd random_orthogonal(int d, matchinfo::RngStream& rng) {
  Eigen::MatrixXd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
}

}  // namespace oracle
