#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "sparserips/metric.hpp"

namespace sparse_rips {

/// SplitMix64 used as a counter-based stream: value k is
/// mix(seed + (k + 1) * 0x9E3779B97F4A7C15), with the usual finalizer
/// (shifts 30, 27, 31; multipliers 0xBF58476D1CE4E5B9, 0x94D049BB133111EB).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t at(std::uint64_t k) const;
  std::uint64_t next() { return at(counter_++); }
  /// Top 53 bits scaled to [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Angles k/n (in turns) for k = 0..n-1.
std::vector<double> circle_sample(std::size_t n);

struct SolenoidParams {
  std::size_t iterations = 12;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
};

using SolenoidState = std::array<double, 3>;  ///< (phi, x, z)

/// (phi, x, z) -> (2 phi mod 1, x/3 + cos 2 pi phi, z/3 + sin 2 pi phi)
SolenoidState solenoid_step(const SolenoidState& state);

/// (cos 2 pi phi (1 + x/3), sin 2 pi phi (1 + x/3), z)
Point solenoid_embed(const SolenoidState& state);

/// Seeds phi in [0, 1), x and z in [-1.5, 1.5], drawn in that order per point,
/// then iterated and embedded. Throws InputError unless n >= 1 and iterations >= 1.
std::vector<Point> solenoid_sample(const SolenoidParams& params);

/// n points uniform in [0, 1)^dim, coordinates drawn point by point.
std::vector<Point> random_cloud(std::size_t n, std::size_t dim, std::uint64_t seed);

}  // namespace sparse_rips
