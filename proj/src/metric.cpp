#include "sparserips/metric.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sparserips/errors.hpp"

namespace sparse_rips {

EuclideanOracle::EuclideanOracle(std::vector<double> coordinates, std::size_t dimension)
    : coordinates_(std::move(coordinates)),
      dimension_(dimension),
      size_(dimension == 0 ? 0 : coordinates_.size() / dimension) {
  if (dimension_ == 0 || coordinates_.size() % dimension_ != 0)
    throw InputError("coordinate buffer does not hold whole points");
  for (double c : coordinates_)
    if (!std::isfinite(c)) throw InputError("non-finite coordinate");
}

double EuclideanOracle::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  if (i > j) std::swap(i, j);
  const double* a = coordinates_.data() + i * dimension_;
  const double* b = coordinates_.data() + j * dimension_;
  double sum = 0.0;
  for (std::size_t k = 0; k < dimension_; ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

CircleOracle::CircleOracle(std::vector<double> angles) : angles_(std::move(angles)) {
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    const double a = angles_[i];
    if (!(a >= 0.0 && a < 1.0))
      throw InputError("angle " + std::to_string(i) + " outside [0, 1)");
  }
}

double CircleOracle::operator()(std::size_t i, std::size_t j) const {
  const double gap = std::abs(angles_[i] - angles_[j]);
  return std::min(gap, 1.0 - gap);
}

namespace {

std::size_t triangular_side(std::size_t length) {
  // smallest n with n(n-1)/2 == length, or 0 if none
  std::size_t n = static_cast<std::size_t>(std::floor((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(length))) / 2.0));
  for (std::size_t candidate = n > 2 ? n - 2 : 1; candidate <= n + 2; ++candidate)
    if (candidate * (candidate - 1) / 2 == length) return candidate;
  return 0;
}

}  // namespace

MatrixOracle::MatrixOracle(std::vector<double> lower_triangle)
    : lower_(std::move(lower_triangle)), size_(triangular_side(lower_.size())) {
  if (size_ == 0)
    throw InputError("lower-triangle length " + std::to_string(lower_.size()) +
                     " is not of the form n(n-1)/2");
  for (std::size_t k = 0; k < lower_.size(); ++k)
    if (!(lower_[k] >= 0.0) || !std::isfinite(lower_[k]))
      throw InputError("distance entry " + std::to_string(k) + " is negative or not finite");
}

double MatrixOracle::operator()(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  if (i < j) std::swap(i, j);
  return lower_[i * (i - 1) / 2 + j];
}

EuclideanOracle euclidean_oracle(std::span<const Point> points) {
  if (points.empty()) throw InputError("no points");
  const std::size_t dim = points.front().size();
  if (dim == 0) throw InputError("points have dimension 0");
  std::vector<double> coords;
  coords.reserve(points.size() * dim);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim)
      throw InputError("point " + std::to_string(i) + " has dimension " +
                       std::to_string(points[i].size()) + ", expected " + std::to_string(dim));
    coords.insert(coords.end(), points[i].begin(), points[i].end());
  }
  return EuclideanOracle(std::move(coords), dim);
}

CircleOracle circle_oracle(std::span<const double> angles) {
  return CircleOracle(std::vector<double>(angles.begin(), angles.end()));
}

MatrixOracle matrix_oracle(std::span<const double> lower_triangle) {
  return MatrixOracle(std::vector<double>(lower_triangle.begin(), lower_triangle.end()));
}

MatrixOracle materialize(const DistanceOracle& oracle) {
  const std::size_t n = oracle.size();
  std::vector<double> lower;
  lower.reserve(n * (n - 1) / 2);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) lower.push_back(oracle(i, j));
  return MatrixOracle(std::move(lower));
}

}  // namespace sparse_rips
