#include "matchinfo/lap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace matchinfo {

namespace {

// Augmenting-path search over tight edges, used to reroute the current
// optimal matching when forcing a lexicographically smaller column.
class TightMatcher {
 public:
  TightMatcher(const std::vector<std::vector<int>>& tight, std::vector<int>& row_to_col,
               std::vector<int>& col_to_row)
      : tight_(tight), row_to_col_(row_to_col), col_to_row_(col_to_row),
        visited_(row_to_col.size(), 0) {}

  // Tries to match `row` with some column, ending at the free column
  // `target`, without touching forbidden columns.
  bool augment(int row, int target, const std::vector<char>& forbidden) {
    std::fill(visited_.begin(), visited_.end(), 0);
    return dfs(row, target, forbidden);
  }

 private:
  bool dfs(int row, int target, const std::vector<char>& forbidden) {
    for (int c : tight_[row]) {
      if (forbidden[c] || visited_[c]) continue;
      visited_[c] = 1;
      if (c == target || dfs(col_to_row_[c], target, forbidden)) {
        row_to_col_[row] = c;
        col_to_row_[c] = row;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& tight_;
  std::vector<int>& row_to_col_;
  std::vector<int>& col_to_row_;
  std::vector<char> visited_;
};

}  // namespace

LapSolution solve_lap(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols()) throw std::invalid_argument("solve_lap: cost must be square");
  if (!cost.allFinite()) throw std::invalid_argument("solve_lap: cost must be finite");
  const int n = static_cast<int>(cost.rows());
  if (n == 0) return {Permutation::identity(0), 0.0};

  // Shortest augmenting paths (1-based rows/cols, column 0 is a sentinel).
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match_col(n + 1, 0), way(n + 1, 0);
  std::vector<double> minv(n + 1);
  std::vector<char> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    match_col[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = match_col[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match_col[j0] != 0);
    do {
      const int j1 = way[j0];
      match_col[j0] = match_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> row_to_col(n), col_to_row(n);
  for (int j = 1; j <= n; ++j) {
    row_to_col[match_col[j] - 1] = j - 1;
    col_to_row[j - 1] = match_col[j] - 1;
  }

  // Every optimal assignment uses only edges that are tight under the
  // optimal duals, so lexicographic refinement only needs the tight graph.
  const double scale = std::max(1.0, cost.cwiseAbs().maxCoeff());
  const double tol = 1e-11 * n * scale;
  std::vector<std::vector<int>> tight(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (cost(i, j) - u[i + 1] - v[j + 1] <= tol || j == row_to_col[i]) {
        tight[i].push_back(j);
      }
    }
  }

  TightMatcher matcher(tight, row_to_col, col_to_row);
  std::vector<char> forbidden(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j : tight[i]) {
      if (forbidden[j]) continue;
      if (j == row_to_col[i]) break;
      // Force i -> j, then re-home the row that held j onto i's old column.
      const int displaced = col_to_row[j];
      const int freed = row_to_col[i];
      const std::vector<int> saved_r2c = row_to_col, saved_c2r = col_to_row;
      row_to_col[i] = j;
      col_to_row[j] = i;
      col_to_row[freed] = -1;
      forbidden[j] = 1;
      const bool ok = matcher.augment(displaced, freed, forbidden);
      forbidden[j] = 0;
      if (ok) break;
      row_to_col = saved_r2c;
      col_to_row = saved_c2r;
    }
    forbidden[row_to_col[i]] = 1;
  }

  double total = 0.0;
  for (int i = 0; i < n; ++i) total += cost(i, row_to_col[i]);
  return {Permutation(std::move(row_to_col)), total};
}

}  // namespace matchinfo
