#include "matchinfo/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "matchinfo/lap.hpp"

namespace matchinfo {

SeedSet SeedSet::identity_on(const std::vector<int>& vertices) {
  SeedSet s;
  for (int v : vertices) s.pairs.emplace_back(v, v);
  return s;
}

void SeedSet::validate(std::size_t n) const {
  std::vector<char> used_a(n, 0), used_b(n, 0);
  for (const auto& [u, w] : pairs) {
    if (u < 0 || w < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(w) >= n) {
      throw std::invalid_argument("seed (" + std::to_string(u) + "," + std::to_string(w) +
                                  ") out of range");
    }
    if (used_a[u] || used_b[w]) {
      throw std::invalid_argument("conflicting seeds at (" + std::to_string(u) + "," +
                                  std::to_string(w) + ")");
    }
    used_a[u] = used_b[w] = 1;
  }
}

namespace {

// Seeds first, then the remaining vertices in ascending order, per graph.
struct SeedOrdering {
  std::vector<int> a_order;
  std::vector<int> b_order;
  int num_seeds = 0;
};

SeedOrdering order_by_seeds(std::size_t n, const SeedSet& seeds) {
  SeedOrdering ord;
  ord.num_seeds = static_cast<int>(seeds.size());
  std::vector<char> seeded_a(n, 0), seeded_b(n, 0);
  for (const auto& [u, w] : seeds.pairs) {
    ord.a_order.push_back(u);
    ord.b_order.push_back(w);
    seeded_a[u] = seeded_b[w] = 1;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seeded_a[v]) ord.a_order.push_back(static_cast<int>(v));
    if (!seeded_b[v]) ord.b_order.push_back(static_cast<int>(v));
  }
  return ord;
}

Eigen::MatrixXd submatrix(const Graph& g, const std::vector<int>& order, int row_begin,
                          int row_end, int col_begin, int col_end) {
  Eigen::MatrixXd m(row_end - row_begin, col_end - col_begin);
  for (int r = row_begin; r < row_end; ++r) {
    for (int c = col_begin; c < col_end; ++c) {
      m(r - row_begin, c - col_begin) = g.has_edge(order[r], order[c]) ? 1.0 : 0.0;
    }
  }
  return m;
}

void require_doubly_stochastic(const Eigen::MatrixXd& d) {
  if (d.rows() != d.cols()) throw std::invalid_argument("init matrix must be square");
  if (d.size() == 0) return;
  if (d.minCoeff() < -1e-12) throw std::invalid_argument("init matrix has negative entries");
  const double row_err = (d.rowwise().sum().array() - 1.0).abs().maxCoeff();
  const double col_err = (d.colwise().sum().array() - 1.0).abs().maxCoeff();
  if (row_err > 1e-9 || col_err > 1e-9) {
    throw std::invalid_argument("init matrix is not doubly stochastic");
  }
}

Eigen::MatrixXd initial_iterate(const MatchInit& init, const SeedOrdering& ord,
                                std::size_t n) {
  const int s = ord.num_seeds;
  const int m = static_cast<int>(n) - s;
  switch (init.kind) {
    case MatchInit::Kind::kIdentity:
      return Eigen::MatrixXd::Identity(m, m);
    case MatchInit::Kind::kBarycenter:
      return Eigen::MatrixXd::Constant(m, m, m > 0 ? 1.0 / m : 0.0);
    case MatchInit::Kind::kPermutation: {
      if (init.permutation.size() != n) {
        throw std::invalid_argument("init permutation length differs from vertex count");
      }
      // B-vertex w pairs with A-vertex φ(w).
      std::vector<int> b_pos(n);
      for (std::size_t k = 0; k < n; ++k) b_pos[ord.b_order[k]] = static_cast<int>(k);
      const Permutation inv = init.permutation.inverse();
      Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
      for (int r = 0; r < m; ++r) {
        const int col = b_pos[inv(ord.a_order[s + r])] - s;
        if (col < 0) throw std::invalid_argument("init permutation conflicts with seeds");
        d(r, col) = 1.0;
      }
      return d;
    }
    case MatchInit::Kind::kDoublyStochastic: {
      const Eigen::MatrixXd& full = init.doubly_stochastic;
      if (full.rows() != static_cast<Eigen::Index>(n) ||
          full.cols() != static_cast<Eigen::Index>(n)) {
        throw std::invalid_argument("init matrix must be n×n");
      }
      Eigen::MatrixXd d(m, m);
      for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) d(r, c) = full(ord.a_order[s + r], ord.b_order[s + c]);
      }
      require_doubly_stochastic(d);
      return d;
    }
  }
  throw std::invalid_argument("unknown init kind");
}

double frobenius_inner(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  return (x.array() * y.array()).sum();
}

Eigen::MatrixXd permutation_matrix(const Permutation& row_to_col) {
  const auto m = static_cast<Eigen::Index>(row_to_col.size());
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index r = 0; r < m; ++r) q(r, row_to_col(r)) = 1.0;
  return q;
}

}  // namespace

MatchResult sgm_match(const Graph& a, const Graph& b, const SeedSet& seeds,
                      const MatchOptions& options) {
  if (a.size() != b.size()) throw std::invalid_argument("sgm_match: graph sizes differ");
  const std::size_t n = a.size();
  seeds.validate(n);
  const SeedOrdering ord = order_by_seeds(n, seeds);
  const int s = ord.num_seeds;
  const int m = static_cast<int>(n) - s;

  MatchResult result;
  Eigen::MatrixXd d = initial_iterate(options.init, ord, n);

  if (m > 0) {
    const Eigen::MatrixXd a22 = submatrix(a, ord.a_order, s, s + m, s, s + m);
    const Eigen::MatrixXd b22 = submatrix(b, ord.b_order, s, s + m, s, s + m);
    const Eigen::MatrixXd a21 = submatrix(a, ord.a_order, s, s + m, 0, s);
    const Eigen::MatrixXd b21 = submatrix(b, ord.b_order, s, s + m, 0, s);
    // f(D) = tr(A22 D B22 Dᵀ) + tr(Dᵀ L),  ∇f = 2 A22 D B22 + L,  L = 2 A21 B21ᵀ.
    const Eigen::MatrixXd linear = 2.0 * a21 * b21.transpose();
    Eigen::MatrixXd adb = a22 * d * b22;
    double f = frobenius_inner(adb, d) + frobenius_inner(linear, d);
    result.objective_trace.push_back(f);

    for (int iter = 1; iter <= options.max_iters; ++iter) {
      result.iterations = iter;
      const Eigen::MatrixXd grad = 2.0 * adb + linear;
      const LapSolution dir = solve_lap(-grad);
      const Eigen::MatrixXd r = permutation_matrix(dir.assignment) - d;
      const Eigen::MatrixXd arb = a22 * r * b22;
      // g(t) = f + c1 t + c2 t² along D + tR.
      const double c1 = frobenius_inner(grad, r);
      const double c2 = frobenius_inner(arb, r);
      double step = 1.0;
      if (c2 < 0.0) {
        const double interior = -c1 / (2.0 * c2);
        if (interior >= 0.0 && interior <= 1.0) step = interior;
      }
      if (step == 1.0 && c1 + c2 < 0.0) step = 0.0;
      if (step == 0.0) {
        // No ascent left along the Frank–Wolfe direction.
        result.converged = true;
        result.objective_trace.push_back(f);
        break;
      }
      d += step * r;
      adb += step * arb;
      const double f_next = frobenius_inner(adb, d) + frobenius_inner(linear, d);
      result.objective_trace.push_back(f_next);
      const double change = std::abs(f_next - f);
      f = f_next;
      if (change <= options.tol * std::max(std::abs(f), 1.0)) {
        result.converged = true;
        break;
      }
    }
  } else {
    result.converged = true;
  }

  // Project onto the closest permutation: maximize trace(Dᵀ P).
  std::vector<int> b_of_a(n);
  for (int k = 0; k < s; ++k) b_of_a[ord.a_order[k]] = ord.b_order[k];
  if (m > 0) {
    const LapSolution proj = solve_lap(-d);
    for (int r = 0; r < m; ++r) b_of_a[ord.a_order[s + r]] = ord.b_order[s + proj.assignment(r)];
  }
  std::vector<int> phi(n);
  for (std::size_t u = 0; u < n; ++u) phi[b_of_a[u]] = static_cast<int>(u);
  result.permutation = Permutation(std::move(phi));
  result.objective = gm_objective(a, b, result.permutation);
  result.trace_value = trace_objective(a, b, result.permutation);
  return result;
}

MatchResult faq_match(const Graph& a, const Graph& b, const MatchOptions& options) {
  return sgm_match(a, b, SeedSet{}, options);
}

Graph match_and_align(const Graph& a, const Graph& b, const SeedSet& seeds,
                      const MatchOptions& options) {
  const MatchResult r = sgm_match(a, b, seeds, options);
  return apply_permutation(b, r.permutation);
}

TranspositionSweep transposition_sweep(const Graph& a, const Graph& b,
                                       const BlockPartition& partition) {
  if (a.size() != b.size() || partition.num_vertices() != a.size()) {
    throw std::invalid_argument("transposition_sweep: size mismatch");
  }
  TranspositionSweep out;
  out.delta = std::numeric_limits<std::int64_t>::max();
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (partition.block_of(i) != partition.block_of(j)) continue;
      const std::int64_t delta = transposition_delta(a, b, i, j);
      if (delta < out.delta) {
        out.delta = delta;
        out.best = {i, j};
      }
    }
  }
  if (out.best.first < 0) out.delta = 0;
  out.found = out.delta < 0;
  return out;
}

}  // namespace matchinfo
