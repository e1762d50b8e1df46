#include "sparserips/generators.hpp"

#include <cmath>
#include <numbers>

#include "sparserips/errors.hpp"

namespace sparse_rips {

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::at(std::uint64_t k) const {
  return mix(seed_ + (k + 1) * 0x9E3779B97F4A7C15ULL);
}

std::vector<double> circle_sample(std::size_t n) {
  if (n == 0) throw InputError("circle sample needs at least one point");
  std::vector<double> angles(n);
  for (std::size_t k = 0; k < n; ++k) angles[k] = static_cast<double>(k) / static_cast<double>(n);
  return angles;
}

SolenoidState solenoid_step(const SolenoidState& s) {
  const double angle = 2.0 * std::numbers::pi * s[0];
  double phi = std::fmod(2.0 * s[0], 1.0);
  if (phi < 0.0) phi += 1.0;
  return {phi, s[1] / 3.0 + std::cos(angle), s[2] / 3.0 + std::sin(angle)};
}

Point solenoid_embed(const SolenoidState& s) {
  const double angle = 2.0 * std::numbers::pi * s[0];
  const double radius = 1.0 + s[1] / 3.0;
  return {std::cos(angle) * radius, std::sin(angle) * radius, s[2]};
}

std::vector<Point> solenoid_sample(const SolenoidParams& params) {
  if (params.n == 0) throw InputError("solenoid sample needs at least one point");
  if (params.iterations == 0) throw InputError("solenoid sample needs at least one iteration");
  CounterRng rng(params.seed);
  std::vector<Point> points;
  points.reserve(params.n);
  for (std::size_t k = 0; k < params.n; ++k) {
    SolenoidState s;
    s[0] = rng.uniform();
    s[1] = rng.uniform(-1.5, 1.5);
    s[2] = rng.uniform(-1.5, 1.5);
    for (std::size_t it = 0; it < params.iterations; ++it) s = solenoid_step(s);
    points.push_back(solenoid_embed(s));
  }
  return points;
}

std::vector<Point> random_cloud(std::size_t n, std::size_t dim, std::uint64_t seed) {
  if (n == 0) throw InputError("random cloud needs at least one point");
  if (dim == 0) throw InputError("random cloud needs dimension >= 1");
  CounterRng rng(seed);
  std::vector<Point> points(n, Point(dim));
  for (Point& p : points) {
    for (double& c : p) c = rng.uniform();
  }
  return points;
}

}  // namespace sparse_rips
