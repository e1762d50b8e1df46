#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sparserips/metric.hpp"

namespace sparse_rips {

inline constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

/// Simplified cover tree over point indices, built by sequential insertion.
///
/// Node k is point k of the oracle. Every non-root node x satisfies
/// d(x, parent x) <= d(parent x, grandparent x) / 2, with the root's parent
/// distance taken as infinity. `radius` is the a-priori bound
/// r(x) = 2 d(x, parent x).
struct CoverTree {
  std::vector<std::size_t> parent;
  std::vector<double> parent_distance;
  std::vector<double> radius;
  /// Per node, children sorted by descending radius (insertion order on ties).
  std::vector<std::vector<std::size_t>> children;

  std::size_t size() const { return parent.size(); }
};

struct ParentSearchResult {
  std::size_t node = kNoParent;
  double distance = std::numeric_limits<double>::infinity();

  friend bool operator==(const ParentSearchResult&, const ParentSearchResult&) = default;
};

/// Pruned search for the parent of `point` among the nodes already in `tree`.
///
/// Valid candidates are nodes y with d(point, y) <= d(y, parent y) / 2; the
/// result is the valid candidate of minimal distance, lowest index on ties.
/// Children of a visited node are only explored while d(point, node) <= r(child).
ParentSearchResult find_parent(const CoverTree& tree, const DistanceOracle& oracle,
                               std::size_t point);

/// Appends `point` (which must equal tree.size()) and returns the parent chosen for it.
ParentSearchResult insert_point(CoverTree& tree, const DistanceOracle& oracle, std::size_t point);

/// Inserts all oracle points in index order; node 0 is the root.
CoverTree build_cover_tree(const DistanceOracle& oracle);

/// Ordered rooted tree with nonincreasing contraction times.
///
/// Position n holds point `point(n)`; `parent(n) < n` for n >= 1 and
/// time(0) is infinite. For every position x and every time t,
/// d(x, project(x, n_of_t(t))) <= t.
class ContractionTree {
 public:
  ContractionTree(std::vector<std::size_t> order, std::vector<std::size_t> parent,
                  std::vector<double> times);

  std::size_t size() const { return order_.size(); }
  std::size_t point(std::size_t position) const { return order_[position]; }
  std::size_t parent(std::size_t position) const { return parent_[position]; }
  double time(std::size_t position) const { return times_[position]; }

  const std::vector<std::size_t>& order() const { return order_; }
  const std::vector<std::size_t>& parents() const { return parent_; }
  const std::vector<double>& times() const { return times_; }
  /// Children of a position, ascending.
  std::span<const std::size_t> children(std::size_t position) const { return children_[position]; }
  std::size_t position_of(std::size_t point) const { return position_[point]; }

  /// First ancestor of `position` (or itself) whose position is <= level.
  std::size_t project(std::size_t position, std::size_t level) const;

  /// max{k : time(k) >= t}.
  std::size_t n_of_t(double t) const;

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> parent_;
  std::vector<double> times_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> position_;
};

/// A-posteriori radii of a cover tree, indexed by point.
///
/// R0(x) = max{d(y, parent x) : y descendant of x}, rad(x) = max{R0(y) : y
/// descendant of x}, rad(root) = infinity.
std::vector<double> posterior_radii(const CoverTree& tree, const DistanceOracle& oracle);

/// Replaces a-priori radii by a-posteriori ones and reorders nodes by
/// descending rad (ties: lower insertion index first) into a contraction tree
/// whose times are the rad values.
ContractionTree tighten(const CoverTree& tree, const DistanceOracle& oracle);

/// First pair of positions i < j with d(x_i, x_j) < t_j / rho, if any.
/// Only guaranteed absent (rho = 4) when the oracle satisfies the triangle inequality.
std::optional<std::pair<std::size_t, std::size_t>> find_density_violation(
    const ContractionTree& tree, const DistanceOracle& oracle, double rho = 4.0);

}  // namespace sparse_rips
