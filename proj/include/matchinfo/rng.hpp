#pragma once

#include <cstdint>
#include <random>

namespace matchinfo {

/// Deterministic random stream identified by (master_seed, stream_id).
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. All derived variates (uniform reals, bounded integers,
/// exponentials, normals) are computed here rather than through
/// <random> distributions, whose algorithms are implementation-defined, so
/// draws are bit-identical across standard libraries. The engine seed is
/// splitmix64(master_seed ⊕ splitmix64(stream_id)); changing this derivation
/// changes every experiment and must bump kStreamVersion.
class RngStream {
 public:
  static constexpr int kStreamVersion = 1;

  explicit RngStream(std::uint64_t master_seed, std::uint64_t stream_id = 0);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Independent child stream; identical arguments give identical children.
  RngStream substream(std::uint64_t index) const;

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }
  /// Exp(1) variate.
  double exponential();
  /// Standard normal via Box–Muller (one value per call).
  double normal();

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace matchinfo
