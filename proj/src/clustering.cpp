#include "matchinfo/clustering.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "matchinfo/embedding.hpp"

namespace matchinfo {

namespace {

constexpr double kEmptyComponent = 1e-10;

struct EmState {
  Eigen::VectorXd weights;
  Eigen::MatrixXd means;
  std::vector<Eigen::MatrixXd> covs;
};

// k-means++: first center uniform, then proportional to squared distance.
Eigen::MatrixXd kmeanspp_centers(const Eigen::MatrixXd& x, int k, RngStream& rng) {
  const Eigen::Index n = x.rows();
  Eigen::MatrixXd centers(k, x.cols());
  centers.row(0) = x.row(static_cast<Eigen::Index>(rng.uniform_below(n)));
  Eigen::VectorXd dist2 = (x.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (int c = 1; c < k; ++c) {
    const double total = dist2.sum();
    Eigen::Index pick = 0;
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      pick = n - 1;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += dist2(i);
        if (acc > target && dist2(i) > 0.0) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<Eigen::Index>(rng.uniform_below(n));
    }
    centers.row(c) = x.row(pick);
    dist2 = dist2.cwiseMin((x.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }
  return centers;
}

// Log-densities log(w_j N(x_i; μ_j, Σ_j)) in an n×k matrix, plus the
// penalty term ½ Σ_j tr(Σ_j⁻¹ Ψ) for Ψ = psi·I.
double log_joint(const Eigen::MatrixXd& x, const EmState& s, double psi,
                 Eigen::MatrixXd& out) {
  const Eigen::Index n = x.rows(), d = x.cols();
  const int k = static_cast<int>(s.means.rows());
  out.resize(n, k);
  double penalty = 0.0;
  for (int j = 0; j < k; ++j) {
    Eigen::LLT<Eigen::MatrixXd> llt(s.covs[j]);
    if (llt.info() != Eigen::Success) throw std::runtime_error("fit_gmm: covariance not PD");
    const Eigen::MatrixXd l = llt.matrixL();
    const double log_det = 2.0 * l.diagonal().array().log().sum();
    const Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(d, d));
    penalty += 0.5 * psi * inv.trace();
    const Eigen::MatrixXd centered = (x.rowwise() - s.means.row(j)).transpose();
    const Eigen::MatrixXd z = llt.matrixL().solve(centered);
    const double base = std::log(s.weights(j)) - 0.5 * log_det -
                        0.5 * static_cast<double>(d) * std::log(2.0 * std::numbers::pi);
    out.col(j) = (base - 0.5 * z.colwise().squaredNorm().array()).transpose();
  }
  return penalty;
}

// Row-wise log-sum-exp; responsibilities overwrite `logp`.
double normalize_rows(Eigen::MatrixXd& logp) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < logp.rows(); ++i) {
    const double top = logp.row(i).maxCoeff();
    const double lse = top + std::log((logp.row(i).array() - top).exp().sum());
    total += lse;
    logp.row(i) = (logp.row(i).array() - lse).exp();
  }
  return total;
}

void m_step(const Eigen::MatrixXd& x, const Eigen::MatrixXd& resp, double psi,
            EmState& s) {
  const Eigen::Index n = x.rows(), d = x.cols();
  for (Eigen::Index j = 0; j < resp.cols(); ++j) {
    const double nk = resp.col(j).sum();
    s.weights(j) = nk / static_cast<double>(n);
    if (nk < kEmptyComponent) continue;
    const Eigen::RowVectorXd mu = (resp.col(j).transpose() * x) / nk;
    const Eigen::MatrixXd centered = x.rowwise() - mu;
    Eigen::MatrixXd scatter =
        centered.transpose() * resp.col(j).asDiagonal() * centered;
    scatter += psi * Eigen::MatrixXd::Identity(d, d);
    s.means.row(j) = mu;
    s.covs[j] = 0.5 * (scatter + scatter.transpose()) / nk;
  }
  // Components that lost all mass keep a vanishing weight; renormalize.
  s.weights = s.weights.cwiseMax(std::numeric_limits<double>::min());
  s.weights /= s.weights.sum();
}

GmmFit run_em(const Eigen::MatrixXd& x, int k, RngStream rng, double psi,
              const Eigen::MatrixXd& data_cov, const GmmOptions& opt) {
  EmState s;
  s.weights = Eigen::VectorXd::Constant(k, 1.0 / k);
  s.means = kmeanspp_centers(x, k, rng);
  s.covs.assign(k, data_cov);

  GmmFit fit;
  Eigen::MatrixXd resp;
  double loglik = 0.0;
  for (int iter = 0;; ++iter) {
    const double penalty = log_joint(x, s, psi, resp);
    loglik = normalize_rows(resp);
    const double objective = loglik - penalty;
    auto& trace = fit.model.objective_trace;
    if (!trace.empty() &&
        std::abs(objective - trace.back()) <= opt.tol * std::max(1.0, std::abs(objective))) {
      trace.push_back(objective);
      fit.model.converged = true;
      break;
    }
    trace.push_back(objective);
    if (iter == opt.max_iters) break;
    fit.model.iterations = iter + 1;
    m_step(x, resp, psi, s);
  }

  fit.model.k = k;
  fit.model.weights = s.weights;
  fit.model.means = s.means;
  fit.model.covariances = s.covs;
  fit.model.loglik = loglik;
  fit.assignment.labels.resize(x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    Eigen::Index best = 0;
    resp.row(i).maxCoeff(&best);
    fit.assignment.labels[i] = static_cast<int>(best);
  }
  return fit;
}

}  // namespace

GmmFit fit_gmm(const Eigen::MatrixXd& points, int k, const RngStream& rng,
               const GmmOptions& options) {
  const Eigen::Index n = points.rows(), d = points.cols();
  if (k < 1) throw std::invalid_argument("fit_gmm: k must be positive");
  if (k > n) throw std::invalid_argument("fit_gmm: k exceeds the number of points");
  if (d < 1) throw std::invalid_argument("fit_gmm: points need at least one column");
  if (options.restarts < 1) throw std::invalid_argument("fit_gmm: restarts must be positive");
  if (!points.allFinite()) throw std::invalid_argument("fit_gmm: non-finite input");

  const Eigen::RowVectorXd mean = points.colwise().mean();
  const Eigen::MatrixXd centered = points.rowwise() - mean;
  const Eigen::MatrixXd cov = centered.transpose() * centered / static_cast<double>(n);
  const double mean_var = cov.diagonal().mean();
  const double eps = mean_var > 0.0 ? 1e-6 * mean_var : 1e-6;
  const double psi = eps * static_cast<double>(n) / static_cast<double>(k);
  const Eigen::MatrixXd start_cov = cov + eps * Eigen::MatrixXd::Identity(d, d);

  GmmFit best;
  for (int r = 0; r < options.restarts; ++r) {
    GmmFit fit = run_em(points, k, rng.substream(r), psi, start_cov, options);
    fit.model.restart = r;
    if (r == 0 || fit.model.objective_trace.back() > best.model.objective_trace.back()) {
      best = std::move(fit);
    }
  }
  return best;
}

double ari(const std::vector<int>& labels_a, const std::vector<int>& labels_b) {
  if (labels_a.size() != labels_b.size()) throw std::invalid_argument("ari: length mismatch");
  const auto n = static_cast<std::int64_t>(labels_a.size());
  auto choose2 = [](std::int64_t m) { return m * (m - 1) / 2; };
  std::map<int, std::int64_t> count_a, count_b;
  std::map<std::pair<int, int>, std::int64_t> joint;
  for (std::size_t i = 0; i < labels_a.size(); ++i) {
    ++count_a[labels_a[i]];
    ++count_b[labels_b[i]];
    ++joint[{labels_a[i], labels_b[i]}];
  }
  std::int64_t index = 0, sum_a = 0, sum_b = 0;
  for (const auto& [key, c] : joint) index += choose2(c);
  for (const auto& [key, c] : count_a) sum_a += choose2(c);
  for (const auto& [key, c] : count_b) sum_b += choose2(c);
  const std::int64_t pairs = choose2(n);
  if (pairs == 0) return 1.0;
  // Numerator and denominator scaled by 2·C(n,2) so both are integers.
  const long double num = 2.0L * (static_cast<long double>(index) * pairs -
                                  static_cast<long double>(sum_a) * sum_b);
  const long double den = static_cast<long double>(sum_a + sum_b) * pairs -
                          2.0L * static_cast<long double>(sum_a) * sum_b;
  if (den == 0.0L) return 1.0;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::pair<ClusterAssignment, ClusterAssignment> joint_cluster(
    const Graph& a, const Graph& b, int d, int k, const RngStream& rng,
    const GmmOptions& options) {
  const Embedding e = ase(omnibus(a, b), d);
  const GmmFit fit = fit_gmm(e.points, k, rng, options);
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  const auto& labels = fit.assignment.labels;
  return {ClusterAssignment{{labels.begin(), labels.begin() + n}},
          ClusterAssignment{{labels.begin() + n, labels.end()}}};
}

ClusterAssignment single_cluster(const Graph& g, int d, int k, const RngStream& rng,
                                 const GmmOptions& options) {
  return fit_gmm(ase(g, d).points, k, rng, options).assignment;
}

}  // namespace matchinfo
