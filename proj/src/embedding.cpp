#include "matchinfo/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace matchinfo {

SpectralDecomposition magnitude_ordered_eigen(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigen: matrix must be square");
  const double scale = m.size() > 0 ? std::max(1.0, m.cwiseAbs().maxCoeff()) : 1.0;
  if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("eigen: matrix must be symmetric");
  }
  const Eigen::Index n = m.rows();
  SpectralDecomposition out;
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen: solver failed");

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  const Eigen::VectorXd& vals = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return std::abs(vals(i)) > std::abs(vals(j));
  });

  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = vals(order[k]);
    Eigen::VectorXd v = solver.eigenvectors().col(order[k]);
    Eigen::Index arg = 0;
    for (Eigen::Index r = 1; r < n; ++r) {
      if (std::abs(v(r)) > std::abs(v(arg))) arg = r;
    }
    if (v(arg) < 0.0) v = -v;
    out.vectors.col(k) = v;
  }
  return out;
}

Embedding ase(const Eigen::MatrixXd& m, int d) {
  if (d < 1 || d > m.rows()) throw std::invalid_argument("ase: d must lie in [1, n]");
  const SpectralDecomposition eig = magnitude_ordered_eigen(m);
  Embedding e;
  e.points = eig.vectors.leftCols(d);
  for (int k = 0; k < d; ++k) e.points.col(k) *= std::sqrt(std::abs(eig.values(k)));
  return e;
}

Embedding ase(const Graph& g, int d) { return ase(g.to_matrix(), d); }

Eigen::MatrixXd omnibus(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) throw std::invalid_argument("omnibus: graph sizes differ");
  const auto n = static_cast<Eigen::Index>(a.size());
  const Eigen::MatrixXd am = a.to_matrix();
  const Eigen::MatrixXd bm = b.to_matrix();
  Eigen::MatrixXd o(2 * n, 2 * n);
  o.topLeftCorner(n, n) = am;
  o.bottomRightCorner(n, n) = bm;
  o.topRightCorner(n, n) = 0.5 * (am + bm);
  o.bottomLeftCorner(n, n) = 0.5 * (am + bm);
  return o;
}

ProcrustesResult procrustes_align(const Embedding& x, const Embedding& y) {
  if (x.points.rows() != y.points.rows() || x.points.cols() != y.points.cols()) {
    throw std::invalid_argument("procrustes_align: shape mismatch");
  }
  const Eigen::MatrixXd cross = x.points.transpose() * y.points;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  ProcrustesResult out;
  out.w = svd.matrixU() * svd.matrixV().transpose();
  out.residual = (x.points * out.w - y.points).norm();
  return out;
}

double t1_semipar(const Graph& a, const Graph& b, int d) {
  if (a.size() != b.size()) throw std::invalid_argument("t1_semipar: graph sizes differ");
  return procrustes_align(ase(a, d), ase(b, d)).residual;
}

double t2_omni(const Graph& a, const Graph& b, int d) {
  const Embedding e = ase(omnibus(a, b), d);
  const auto n = static_cast<Eigen::Index>(a.size());
  return (e.points.topRows(n) - e.points.bottomRows(n)).norm();
}

int scree_elbow(std::span<const double> eigenvalues) {
  if (eigenvalues.empty()) throw std::invalid_argument("scree_elbow: empty spectrum");
  std::vector<double> mag;
  for (double v : eigenvalues) mag.push_back(std::abs(v));
  std::sort(mag.begin(), mag.end(), std::greater<>());
  const std::size_t len = mag.size();
  const std::size_t candidates = std::min(std::max<std::size_t>(1, len / 2), len - 1);
  int best = 1;
  double best_gap = -1.0;
  for (std::size_t i = 0; i < candidates; ++i) {
    const double gap = mag[i] - mag[i + 1];
    if (gap > best_gap) {
      best_gap = gap;
      best = static_cast<int>(i) + 1;
    }
  }
  return best;
}

}  // namespace matchinfo
