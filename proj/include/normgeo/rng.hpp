#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace normgeo {

/// Seeded random stream. Uniform and normal variates are produced from the
/// raw 64-bit engine output by fixed formulas, so a given seed yields the
/// same sequence with every standard library.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream number `index` of the family rooted at `seed`.
  static RngStream derive(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// exp(uniform(log lo, log hi)); requires 0 < lo <= hi.
  double log_uniform(double lo, double hi);
  double standard_normal();
  /// +1 or -1 with equal probability.
  double sign();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace normgeo
