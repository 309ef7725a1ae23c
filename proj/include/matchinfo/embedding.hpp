#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "matchinfo/graph.hpp"

namespace matchinfo {

/// n×d latent positions, one row per vertex.
struct Embedding {
  Eigen::MatrixXd points;

  int dim() const { return static_cast<int>(points.cols()); }
  std::size_t size() const { return static_cast<std::size_t>(points.rows()); }
};

/// Eigenpairs of a symmetric matrix ordered by |λ| descending (ties keep
/// the solver's ascending-λ order). Each eigenvector's largest-magnitude
/// entry is positive; on a magnitude tie the first such entry wins.
struct SpectralDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

SpectralDecomposition magnitude_ordered_eigen(const Eigen::MatrixXd& m);

/// Adjacency spectral embedding: U_d · diag(|λ_1|^½, …, |λ_d|^½).
/// Throws if m is not square and symmetric or if d is outside [1, n].
Embedding ase(const Eigen::MatrixXd& m, int d);
Embedding ase(const Graph& g, int d);

/// [[A, (A+B)/2], [(A+B)/2, B]].
Eigen::MatrixXd omnibus(const Graph& a, const Graph& b);

struct ProcrustesResult {
  Eigen::MatrixXd w;
  double residual = 0.0;
};

/// argmin over orthogonal W of ‖XW − Y‖_F, W = UVᵀ from XᵀY = UΣVᵀ. When
/// XᵀY is rank deficient W is one of several minimizers.
ProcrustesResult procrustes_align(const Embedding& x, const Embedding& y);

/// Procrustes residual between the d-dimensional ASEs of a and b.
double t1_semipar(const Graph& a, const Graph& b, int d);

/// ‖X̂_O − Ŷ_O‖_F where the rows of ase(omnibus(a, b), d) are split in half.
double t2_omni(const Graph& a, const Graph& b, int d);

/// Max-gap elbow among the first max(1, len/2) gaps, 1-based; ties go to the
/// smallest index. Magnitudes are used, sorted descending.
int scree_elbow(std::span<const double> eigenvalues);

}  // namespace matchinfo
