#include "matchinfo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace matchinfo {

Permutation::Permutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
  std::vector<char> seen(mapping_.size(), 0);
  for (int v : mapping_) {
    if (v < 0 || static_cast<std::size_t>(v) >= mapping_.size() || seen[v]) {
      throw std::invalid_argument("Permutation: mapping is not a bijection");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    inv[mapping_[i]] = static_cast<int>(i);
  }
  Permutation out;
  out.mapping_ = std::move(inv);
  return out;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("Permutation::compose: size mismatch");
  }
  std::vector<int> m(size());
  for (std::size_t i = 0; i < size(); ++i) m[i] = mapping_[other.mapping_[i]];
  Permutation out;
  out.mapping_ = std::move(m);
  return out;
}

bool Permutation::is_identity() const { return moved_count() == 0; }

std::size_t Permutation::moved_count() const {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    if (mapping_[i] != static_cast<int>(i)) ++moved;
  }
  return moved;
}

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (g.has_edge(u, v)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) +
                                  "," + std::to_string(v) + ")");
    }
    g.set_edge(u, v, true);
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.set_edge(u, v, true);
  }
  return g;
}

void Graph::set_edge(std::size_t u, std::size_t v, bool present) {
  if (u == v) throw std::invalid_argument("Graph::set_edge: self-loop");
  const std::uint8_t bit = present ? 1 : 0;
  adj_[u * n_ + v] = bit;
  adj_[v * n_ + u] = bit;
}

std::int64_t Graph::edge_count() const {
  std::int64_t total = 0;
  for (std::uint8_t x : adj_) total += x;
  return total / 2;
}

std::int64_t Graph::degree(std::size_t u) const {
  const std::uint8_t* r = row(u);
  return std::accumulate(r, r + n_, std::int64_t{0});
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) g.set_edge(u, v, !has_edge(u, v));
  }
  return g;
}

Eigen::MatrixXd Graph::to_matrix() const {
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Eigen::Index v = 0; v < n; ++v) m(u, v) = adj_[u * n_ + v];
  }
  return m;
}

BipartiteGraph::BipartiteGraph(std::size_t m1, std::size_t m2)
    : m1_(m1), m2_(m2), bits_(m1 * m2, 0) {}

std::int64_t BipartiteGraph::edge_count() const {
  return std::accumulate(bits_.begin(), bits_.end(), std::int64_t{0});
}

BlockPartition::BlockPartition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (std::size_t k = 0; k < sizes_.size(); ++k) {
    if (sizes_[k] < 0) throw std::invalid_argument("BlockPartition: negative block size");
    membership_.insert(membership_.end(), sizes_[k], static_cast<int>(k));
  }
}

BlockPartition::BlockPartition(int num_blocks, std::vector<int> membership)
    : sizes_(num_blocks, 0), membership_(std::move(membership)) {
  if (num_blocks < 1) throw std::invalid_argument("BlockPartition: K must be >= 1");
  for (int b : membership_) {
    if (b < 0 || b >= num_blocks) {
      throw std::invalid_argument("BlockPartition: membership outside [0,K)");
    }
    ++sizes_[b];
  }
}

std::vector<int> BlockPartition::vertices_in(int block) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < membership_.size(); ++v) {
    if (membership_[v] == block) out.push_back(static_cast<int>(v));
  }
  return out;
}

namespace {

void require_same_size(const Graph& a, const Graph& b, const char* where) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(where) + ": graph sizes differ");
  }
}

void require_perm_size(const Graph& g, const Permutation& phi, const char* where) {
  if (phi.size() != g.size()) {
    throw std::invalid_argument(std::string(where) +
                                ": permutation length differs from vertex count");
  }
}

}  // namespace

Graph apply_permutation(const Graph& g, const Permutation& phi) {
  require_perm_size(g, phi, "apply_permutation");
  const std::size_t n = g.size();
  Graph out(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) out.set_edge(phi(u), phi(v), true);
    }
  }
  return out;
}

// (P_φ B P_φᵀ)[u][v] = B[φ⁻¹(u)][φ⁻¹(v)].
std::int64_t gm_objective(const Graph& a, const Graph& b, const Permutation& phi) {
  require_same_size(a, b, "gm_objective");
  require_perm_size(a, phi, "gm_objective");
  const Permutation inv = phi.inverse();
  const std::size_t n = a.size();
  std::int64_t pairs = 0;
  for (std::size_t u = 0; u < n; ++u) {
    const std::uint8_t* arow = a.row(u);
    const std::uint8_t* brow = b.row(inv(u));
    for (std::size_t v = u + 1; v < n; ++v) {
      pairs += arow[v] != brow[inv(v)];
    }
  }
  return 2 * pairs;
}

std::int64_t trace_objective(const Graph& a, const Graph& b, const Permutation& phi) {
  require_same_size(a, b, "trace_objective");
  require_perm_size(a, phi, "trace_objective");
  const Permutation inv = phi.inverse();
  const std::size_t n = a.size();
  std::int64_t total = 0;
  for (std::size_t u = 0; u < n; ++u) {
    const std::uint8_t* arow = a.row(u);
    const std::uint8_t* brow = b.row(inv(u));
    for (std::size_t v = 0; v < n; ++v) total += arow[v] & brow[inv(v)];
  }
  return total;
}

std::int64_t edge_disagreements(const Graph& a, const Graph& b) {
  require_same_size(a, b, "edge_disagreements");
  std::int64_t pairs = 0;
  for (std::size_t u = 0; u < a.size(); ++u) {
    const std::uint8_t* arow = a.row(u);
    const std::uint8_t* brow = b.row(u);
    for (std::size_t v = u + 1; v < a.size(); ++v) pairs += arow[v] != brow[v];
  }
  return pairs;
}

double sample_edge_correlation(const Graph& a, const Graph& b) {
  require_same_size(a, b, "sample_edge_correlation");
  const std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("sample_edge_correlation: need n >= 2");
  std::int64_t both = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) both += a.has_edge(u, v) && b.has_edge(u, v);
  }
  // Binary vectors: cov = N·s_ab − s_a·s_b, var_x = s_x (N − s_x), all exact integers.
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  const double sa = static_cast<double>(a.edge_count());
  const double sb = static_cast<double>(b.edge_count());
  const double var_a = sa * (pairs - sa);
  const double var_b = sb * (pairs - sb);
  if (var_a == 0.0 || var_b == 0.0) return 0.0;
  const double cov = pairs * static_cast<double>(both) - sa * sb;
  return cov / std::sqrt(var_a * var_b);
}

std::int64_t transposition_delta(const Graph& a, const Graph& b, int i, int j) {
  require_same_size(a, b, "transposition_delta");
  const int n = static_cast<int>(a.size());
  if (i == j) throw std::invalid_argument("transposition_delta: i == j");
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw std::invalid_argument("transposition_delta: vertex out of range");
  }
  const std::uint8_t* ai = a.row(i);
  const std::uint8_t* aj = a.row(j);
  const std::uint8_t* bi = b.row(i);
  const std::uint8_t* bj = b.row(j);
  std::int64_t sum = 0;
  for (int k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    sum += (int{ai[k]} - int{aj[k]}) * (int{bi[k]} - int{bj[k]});
  }
  return 4 * sum;
}

FixedErrorCounts fixed_error_counts(const Graph& x, const Graph& y,
                                    const Permutation& phi) {
  require_same_size(x, y, "fixed_error_counts");
  require_perm_size(x, phi, "fixed_error_counts");
  const Graph px = apply_permutation(x, phi);
  const Graph py = apply_permutation(y, phi);
  FixedErrorCounts out;
  for (std::size_t u = 0; u < x.size(); ++u) {
    for (std::size_t v = u + 1; v < x.size(); ++v) {
      const bool in_x = x.has_edge(u, v);
      const bool in_px = px.has_edge(u, v);
      const bool in_py = py.has_edge(u, v);
      if (!in_x && in_px && !in_py) ++out.additions;
      if (in_x && !in_px && in_py) ++out.occlusions;
    }
  }
  return out;
}

std::int64_t max_degree(const Graph& g) {
  std::int64_t best = 0;
  for (std::size_t u = 0; u < g.size(); ++u) best = std::max(best, g.degree(u));
  return best;
}

std::int64_t triangle_count(const Graph& g) {
  const std::size_t n = g.size();
  std::int64_t count = 0;
  for (std::size_t u = 0; u < n; ++u) {
    const std::uint8_t* ru = g.row(u);
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!ru[v]) continue;
      const std::uint8_t* rv = g.row(v);
      for (std::size_t w = v + 1; w < n; ++w) count += ru[w] & rv[w];
    }
  }
  return count;
}

namespace {

// Sums the values in ascending order so that the result depends only on
// the multiset, not on vertex labels.
double sorted_sum(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

}  // namespace

// Power iteration on A + I. For a nonnegative symmetric matrix the Perron
// root equals the spectral norm, and the shift keeps −λ_max from competing.
// Every reduction is a sorted sum, so relabeling the vertices permutes the
// iterates exactly and the result is bitwise label-invariant.
double spectral_norm(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0 || g.edge_count() == 0) return 0.0;
  std::vector<double> x(n, 1.0), next(n), scratch;
  scratch.reserve(n);
  double estimate = 0.0;
  for (int iter = 0; iter < 20000; ++iter) {
    for (std::size_t u = 0; u < n; ++u) {
      scratch.clear();
      const std::uint8_t* r = g.row(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (r[v]) scratch.push_back(x[v]);
      }
      next[u] = sorted_sum(scratch);
    }
    // Rayleigh quotient xᵀAx / xᵀx.
    scratch.assign(n, 0.0);
    for (std::size_t u = 0; u < n; ++u) scratch[u] = x[u] * next[u];
    const double num = sorted_sum(scratch);
    for (std::size_t u = 0; u < n; ++u) scratch[u] = x[u] * x[u];
    const double den = sorted_sum(scratch);
    const double rayleigh = num / den;
    double top = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      next[u] += x[u];
      top = std::max(top, next[u]);
    }
    for (std::size_t u = 0; u < n; ++u) x[u] = next[u] / top;
    if (iter > 0 && std::abs(rayleigh - estimate) <= 1e-14 * rayleigh) {
      estimate = rayleigh;
      break;
    }
    estimate = rayleigh;
  }
  return estimate;
}

}  // namespace matchinfo
