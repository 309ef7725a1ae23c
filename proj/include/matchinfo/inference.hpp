#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "matchinfo/graph.hpp"
#include "matchinfo/rng.hpp"

namespace matchinfo {

/// All statistics are right-tailed: reject iff statistic > critical_value.
struct TestOutcome {
  double statistic = 0.0;
  double critical_value = 0.0;
  double alpha = 0.05;
  bool reject = false;

  static TestOutcome decide(double statistic, double critical_value, double alpha) {
    return {statistic, critical_value, alpha, statistic > critical_value};
  }
};

struct PowerEstimate {
  double power = 0.0;
  int mc_reps = 0;
  double std_err = 0.0;

  static PowerEstimate from_counts(std::int64_t rejections, int mc_reps);
};

/// |T1| of the pooled two-proportion z-test on edge densities. 0 when the
/// pooled density is 0 or 1.
double pooled_z(const Graph& a, const Graph& b);

/// |p̂1 − p̂2| / √(2p̂(1−p̂)(1−ρ̂)/C(n,2)) with ρ̂ the sample edge correlation.
/// With ρ̂ = 1 the result is 0 if p̂1 = p̂2 and +∞ otherwise; degenerate
/// pooled density gives 0.
double paired_z(const Graph& a, const Graph& b);

enum class InvariantKind { kMaxDegree, kTriangles, kSpectral };

std::string to_string(InvariantKind kind);
InvariantKind parse_invariant_kind(const std::string& name);

double graph_invariant(const Graph& g, InvariantKind kind);
/// |f(a) − f(b)| for the chosen label-free invariant f.
double invariant_stat(const Graph& a, const Graph& b, InvariantKind kind);

/// The ⌈(1−α)(m+1)⌉-th smallest of m null draws. Requires m ≥ 1/α.
double critical_value_from_draws(std::vector<double> draws, double alpha);

/// Draw i of the null is null_sampler(rng.substream(i)); draws run on up to
/// `threads` workers and the result does not depend on the thread count.
double empirical_critical_value(const std::function<double(RngStream&)>& null_sampler,
                                double alpha, int n_null, const RngStream& rng,
                                int threads = 1);

/// Upper α/2 point of the standard normal.
double two_sided_normal_critical_value(double alpha);

}  // namespace matchinfo
