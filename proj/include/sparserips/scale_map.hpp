#pragma once

#include <optional>

#include "sparserips/numeric.hpp"

namespace sparse_rips {

/// Interleaving scale map psi(r) = min(R, r + max(eps0, eps1 * r)).
///
/// With a threshold T, any r whose unclamped image exceeds T maps to R.
/// psi(inf) = inf. The identity is eps0 = eps1 = 0, R = inf.
struct ScaleMap {
  double R = kInfinity;
  double eps0 = 0.0;
  double eps1 = 0.0;
  std::optional<double> threshold;

  static ScaleMap identity() { return {}; }
  static ScaleMap shift(double delta) { return {kInfinity, delta, 0.0, std::nullopt}; }
  static ScaleMap relative(double eps1) { return {kInfinity, 0.0, eps1, std::nullopt}; }

  double operator()(double r) const;

  /// inf{r >= 0 : psi(r) >= y} via the closed-form branches; the R clamp is
  /// ignored so values above R invert through the unclamped map.
  double inverse(double y) const;

  /// Same map without the R clamp and threshold.
  ScaleMap unclamped() const { return {kInfinity, eps0, eps1, std::nullopt}; }

  bool is_identity() const;
};

}  // namespace sparse_rips
