#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "matchinfo/graph.hpp"
#include "matchinfo/rng.hpp"

namespace matchinfo {

struct GmmModel {
  int k = 0;
  Eigen::VectorXd weights;
  /// k×d, one mean per row.
  Eigen::MatrixXd means;
  std::vector<Eigen::MatrixXd> covariances;
  /// Plain log-likelihood of the data under the returned parameters.
  double loglik = 0.0;
  /// Objective EM ascends, one value per E-step: log-likelihood minus the
  /// covariance penalty ½ Σ_j tr(Σ_j⁻¹ Ψ) with Ψ = (n/k) ε I.
  std::vector<double> objective_trace;
  int iterations = 0;
  bool converged = false;
  int restart = 0;
};

struct ClusterAssignment {
  std::vector<int> labels;
};

struct GmmOptions {
  int restarts = 5;
  int max_iters = 300;
  /// Stop once the objective changes by at most tol · max(1, |objective|).
  double tol = 1e-8;
};

struct GmmFit {
  GmmModel model;
  ClusterAssignment assignment;
};

/// Full-covariance Gaussian mixture fitted by EM from k-means++ starts.
///
/// Covariances are Σ_j = (S_j + Ψ) / N_j where S_j is the weighted scatter,
/// N_j the soft count and Ψ = (n/k) ε I with ε = 1e-6 × the mean
/// per-coordinate variance (1e-6 if the data are constant). For balanced
/// clusters this is S_j/N_j + εI. Restart r draws from rng.substream(r); the
/// best restart by objective wins, lowest index on ties. Labels maximize the
/// posterior responsibility (lowest component on ties).
GmmFit fit_gmm(const Eigen::MatrixXd& points, int k, const RngStream& rng,
               const GmmOptions& options = {});

/// Hubert–Arabie adjusted Rand index. Two trivial partitions that agree
/// (0/0) score 1.
double ari(const std::vector<int>& labels_a, const std::vector<int>& labels_b);

/// GMM on all 2n rows of ase(omnibus(a, b), d); returns the first-n and
/// last-n label slices.
std::pair<ClusterAssignment, ClusterAssignment> joint_cluster(
    const Graph& a, const Graph& b, int d, int k, const RngStream& rng,
    const GmmOptions& options = {});

/// GMM on ase(g, d).
ClusterAssignment single_cluster(const Graph& g, int d, int k, const RngStream& rng,
                                 const GmmOptions& options = {});

}  // namespace matchinfo
