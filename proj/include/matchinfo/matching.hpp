#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "matchinfo/graph.hpp"

namespace matchinfo {

/// Known cross-graph correspondences: (vertex of A, vertex of B).
struct SeedSet {
  std::vector<std::pair<int, int>> pairs;

  /// Seeds where every listed vertex corresponds to itself.
  static SeedSet identity_on(const std::vector<int>& vertices);
  /// Throws std::invalid_argument unless the pairs are in range and
  /// injective on both sides.
  void validate(std::size_t n) const;
  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }
};

/// Starting point of the relaxed search. Matrices are indexed
/// [vertex of A][vertex of B]; a permutation φ starts at P_φ, i.e. B-vertex
/// w is paired with A-vertex φ(w).
struct MatchInit {
  enum class Kind { kIdentity, kBarycenter, kPermutation, kDoublyStochastic };
  Kind kind = Kind::kBarycenter;
  Permutation permutation;
  Eigen::MatrixXd doubly_stochastic;

  static MatchInit identity() { return {Kind::kIdentity, {}, {}}; }
  static MatchInit barycenter() { return {Kind::kBarycenter, {}, {}}; }
  static MatchInit from_permutation(Permutation phi) {
    return {Kind::kPermutation, std::move(phi), {}};
  }
  static MatchInit from_matrix(Eigen::MatrixXd d) {
    return {Kind::kDoublyStochastic, {}, std::move(d)};
  }
};

struct MatchOptions {
  MatchInit init = MatchInit::barycenter();
  int max_iters = 100;
  /// Stop once |Δf| ≤ tol · max(|f|, 1).
  double tol = 1e-6;
};

struct MatchResult {
  /// φ such that apply_permutation(b, φ) is b aligned to a.
  Permutation permutation;
  /// ‖A − P_φ B P_φᵀ‖_F².
  std::int64_t objective = 0;
  /// trace(A P_φ B P_φᵀ).
  std::int64_t trace_value = 0;
  int iterations = 0;
  bool converged = false;
  /// Relaxed objective at the start and after every Frank–Wolfe step.
  std::vector<double> objective_trace;
};

/// Frank–Wolfe ascent of trace(A D B Dᵀ) over doubly stochastic D followed
/// by projection onto the nearest permutation.
MatchResult faq_match(const Graph& a, const Graph& b, const MatchOptions& options = {});

/// Seeded variant: seeds stay fixed and only the non-seed block is
/// optimized. With no seeds this is faq_match.
MatchResult sgm_match(const Graph& a, const Graph& b, const SeedSet& seeds,
                      const MatchOptions& options = {});

/// b relabeled by the matcher's permutation, the computational stand-in for
/// "b matched to a".
Graph match_and_align(const Graph& a, const Graph& b, const SeedSet& seeds,
                      const MatchOptions& options = {});

struct TranspositionSweep {
  bool found = false;
  std::pair<int, int> best{-1, -1};
  std::int64_t delta = 0;
};

/// Scans every within-block pair (i, j) and reports whether swapping any of
/// them lowers ‖A − B‖_F² (i.e. the identity is not 2-swap locally optimal),
/// along with the pair of smallest delta (first in row-major scan on ties).
TranspositionSweep transposition_sweep(const Graph& a, const Graph& b,
                                       const BlockPartition& partition);

}  // namespace matchinfo
