#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sparse_rips {

using Point = std::vector<double>;

/// Symmetric, finite, zero-diagonal length function on points 0..size()-1.
///
/// Implementations are immutable after construction and safe to share
/// between threads. The triangle inequality is not assumed here; the cover
/// tree's density bound and pruned parent search rely on it, though.
class DistanceOracle {
 public:
  virtual ~DistanceOracle() = default;
  virtual std::size_t size() const = 0;
  virtual double operator()(std::size_t i, std::size_t j) const = 0;
};

class EuclideanOracle final : public DistanceOracle {
 public:
  EuclideanOracle(std::vector<double> coordinates, std::size_t dimension);

  std::size_t size() const override { return size_; }
  std::size_t dimension() const { return dimension_; }
  double operator()(std::size_t i, std::size_t j) const override;

 private:
  std::vector<double> coordinates_;
  std::size_t dimension_;
  std::size_t size_;
};

/// Geodesic distance on R/Z.
class CircleOracle final : public DistanceOracle {
 public:
  explicit CircleOracle(std::vector<double> angles);

  std::size_t size() const override { return angles_.size(); }
  double operator()(std::size_t i, std::size_t j) const override;

 private:
  std::vector<double> angles_;
};

/// Explicit matrix stored as its strict lower triangle, row-major:
/// d(1,0), d(2,0), d(2,1), d(3,0), ...
class MatrixOracle final : public DistanceOracle {
 public:
  explicit MatrixOracle(std::vector<double> lower_triangle);

  std::size_t size() const override { return size_; }
  double operator()(std::size_t i, std::size_t j) const override;
  const std::vector<double>& lower_triangle() const { return lower_; }

 private:
  std::vector<double> lower_;
  std::size_t size_;
};

/// Throws InputError on an empty list or mixed dimensions.
EuclideanOracle euclidean_oracle(std::span<const Point> points);

/// Throws InputError if an angle lies outside [0, 1).
CircleOracle circle_oracle(std::span<const double> angles);

/// Throws InputError if the length is not n(n-1)/2 or an entry is negative or non-finite.
MatrixOracle matrix_oracle(std::span<const double> lower_triangle);

/// Dense copy of any oracle, e.g. to freeze an expensive metric.
MatrixOracle materialize(const DistanceOracle& oracle);

}  // namespace sparse_rips
