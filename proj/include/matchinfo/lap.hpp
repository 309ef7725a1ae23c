#pragma once

#include <Eigen/Dense>

#include "matchinfo/graph.hpp"

namespace matchinfo {

struct LapSolution {
  /// Row i is assigned to column assignment(i).
  Permutation assignment;
  double total_cost = 0.0;
};

/// Exact minimum-cost perfect assignment of a square cost matrix.
///
/// Shortest augmenting paths with dual potentials, O(n³). Among all optimal
/// assignments the lexicographically smallest one (compare assignment(0),
/// then assignment(1), ...) is returned, so equal inputs always give equal
/// outputs. Throws std::invalid_argument for non-square or non-finite input.
LapSolution solve_lap(const Eigen::MatrixXd& cost);

}  // namespace matchinfo
