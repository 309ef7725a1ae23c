#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace matchinfo {

/// A bijection of {0, ..., n-1}. `mapping[i]` is the image of vertex i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument if `mapping` is not a bijection.
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return mapping_.size(); }
  int operator()(std::size_t i) const { return mapping_[i]; }
  int operator[](std::size_t i) const { return mapping_[i]; }
  const std::vector<int>& mapping() const { return mapping_; }

  Permutation inverse() const;
  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  bool is_identity() const;
  /// Number of points that are not fixed.
  std::size_t moved_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> mapping_;
};

/// Simple undirected graph on n labeled vertices, dense symmetric 0/1 storage.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws on out-of-range endpoints, self-loops and duplicate edges.
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<int, int>> edges);
  static Graph complete(std::size_t n);

  std::size_t size() const { return n_; }
  bool has_edge(std::size_t u, std::size_t v) const {
    return adj_[u * n_ + v] != 0;
  }
  /// Sets or clears {u,v}; u == v throws.
  void set_edge(std::size_t u, std::size_t v, bool present);
  void toggle_edge(std::size_t u, std::size_t v) {
    set_edge(u, v, !has_edge(u, v));
  }

  std::int64_t edge_count() const;
  std::int64_t degree(std::size_t u) const;
  /// Edges {u,v} with u < v in row-major order.
  std::vector<std::pair<int, int>> edges() const;
  Graph complement() const;
  Eigen::MatrixXd to_matrix() const;
  const std::uint8_t* row(std::size_t u) const { return adj_.data() + u * n_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// m1 × m2 binary biadjacency matrix; no symmetry constraint.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t m1, std::size_t m2);

  std::size_t rows() const { return m1_; }
  std::size_t cols() const { return m2_; }
  bool has_edge(std::size_t i, std::size_t j) const {
    return bits_[i * m2_ + j] != 0;
  }
  void set_edge(std::size_t i, std::size_t j, bool present) {
    bits_[i * m2_ + j] = present ? 1 : 0;
  }
  std::int64_t edge_count() const;

  friend bool operator==(const BipartiteGraph&,
                         const BipartiteGraph&) = default;

 private:
  std::size_t m1_ = 0;
  std::size_t m2_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Vertex-to-block assignment b: [n] -> [K] together with the block sizes.
class BlockPartition {
 public:
  BlockPartition() = default;
  /// Contiguous blocks: the first sizes[0] vertices form block 0, and so on.
  explicit BlockPartition(std::vector<int> sizes);
  /// Arbitrary membership; sizes are derived. Throws on labels outside [0,K).
  BlockPartition(int num_blocks, std::vector<int> membership);

  int num_blocks() const { return static_cast<int>(sizes_.size()); }
  std::size_t num_vertices() const { return membership_.size(); }
  const std::vector<int>& sizes() const { return sizes_; }
  const std::vector<int>& membership() const { return membership_; }
  int block_of(std::size_t v) const { return membership_[v]; }
  std::vector<int> vertices_in(int block) const;

 private:
  std::vector<int> sizes_;
  std::vector<int> membership_;
};

Graph apply_permutation(const Graph& g, const Permutation& phi);

/// ‖A − P_φ B P_φᵀ‖_F²; each disagreeing unordered pair contributes 2.
std::int64_t gm_objective(const Graph& a, const Graph& b,
                          const Permutation& phi);
/// trace(A P_φ B P_φᵀ).
std::int64_t trace_objective(const Graph& a, const Graph& b,
                             const Permutation& phi);
std::int64_t edge_disagreements(const Graph& a, const Graph& b);

/// Pearson correlation of the strict upper triangles. Zero-variance input
/// (empty or complete graph on either side) yields 0.
double sample_edge_correlation(const Graph& a, const Graph& b);

/// ‖A − P_τ B P_τᵀ‖_F² − ‖A − B‖_F² for the transposition τ = (i j),
/// evaluated in O(n) as 4 Σ_{k≠i,j} (A_ik − A_jk)(B_ik − B_jk).
std::int64_t transposition_delta(const Graph& a, const Graph& b, int i, int j);

struct FixedErrorCounts {
  std::int64_t additions = 0;
  std::int64_t occlusions = 0;
};

/// Pairs that φ adds to (resp. removes from) x but that φ(y) keeps absent
/// (resp. present).
FixedErrorCounts fixed_error_counts(const Graph& x, const Graph& y,
                                    const Permutation& phi);

std::int64_t max_degree(const Graph& g);
std::int64_t triangle_count(const Graph& g);
/// Largest singular value of the adjacency matrix.
double spectral_norm(const Graph& g);

}  // namespace matchinfo
