#include "sparserips/covertree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "sparserips/errors.hpp"
#include "sparserips/numeric.hpp"

namespace sparse_rips {

ParentSearchResult find_parent(const CoverTree& tree, const DistanceOracle& oracle,
                               std::size_t point) {
  if (tree.size() == 0) throw std::logic_error("find_parent on an empty tree");
  ParentSearchResult best;
  std::vector<std::size_t> candidates{0};
  while (!candidates.empty()) {
    const std::size_t y = candidates.back();
    candidates.pop_back();
    const double d = oracle(point, y);
    const bool valid = d <= tree.parent_distance[y] / 2;
    if (valid && (d < best.distance || (d == best.distance && y < best.node))) best = {y, d};
    for (std::size_t c : tree.children[y]) {
      if (d > tree.radius[c]) break;
      candidates.push_back(c);
    }
  }
  return best;
}

ParentSearchResult insert_point(CoverTree& tree, const DistanceOracle& oracle, std::size_t point) {
  if (point != tree.size()) throw std::logic_error("points must be inserted in index order");
  if (point == 0) {
    tree.parent.push_back(kNoParent);
    tree.parent_distance.push_back(kInfinity);
    tree.radius.push_back(kInfinity);
    tree.children.emplace_back();
    return {};
  }
  const ParentSearchResult found = find_parent(tree, oracle, point);
  const double r = 2 * found.distance;
  tree.parent.push_back(found.node);
  tree.parent_distance.push_back(found.distance);
  tree.radius.push_back(r);
  tree.children.emplace_back();
  auto& siblings = tree.children[found.node];
  auto pos = std::find_if(siblings.begin(), siblings.end(),
                          [&](std::size_t c) { return tree.radius[c] < r; });
  siblings.insert(pos, point);
  return found;
}

CoverTree build_cover_tree(const DistanceOracle& oracle) {
  if (oracle.size() == 0) throw InputError("no points");
  CoverTree tree;
  const std::size_t n = oracle.size();
  tree.parent.reserve(n);
  tree.parent_distance.reserve(n);
  tree.radius.reserve(n);
  tree.children.reserve(n);
  for (std::size_t x = 0; x < n; ++x) insert_point(tree, oracle, x);
  return tree;
}

ContractionTree::ContractionTree(std::vector<std::size_t> order, std::vector<std::size_t> parent,
                                 std::vector<double> times)
    : order_(std::move(order)), parent_(std::move(parent)), times_(std::move(times)) {
  const std::size_t n = order_.size();
  if (n == 0) throw InputError("contraction tree has no nodes");
  if (parent_.size() != n || times_.size() != n)
    throw InputError("contraction tree arrays differ in length");
  position_.assign(n, kNoParent);
  for (std::size_t k = 0; k < n; ++k) {
    if (order_[k] >= n || position_[order_[k]] != kNoParent)
      throw InputError("contraction tree order is not a permutation");
    position_[order_[k]] = k;
  }
  if (parent_[0] != kNoParent) throw InputError("root of contraction tree has a parent");
  if (!(std::isinf(times_[0]) && times_[0] > 0)) throw InputError("root time must be inf");
  children_.resize(n);
  for (std::size_t k = 1; k < n; ++k) {
    if (parent_[k] >= k)
      throw InputError("parent of node " + std::to_string(k) + " does not precede it");
    if (!(times_[k] >= 0.0) || times_[k] > times_[k - 1])
      throw InputError("contraction times are not nonincreasing at node " + std::to_string(k));
    children_[parent_[k]].push_back(k);
  }
}

std::size_t ContractionTree::project(std::size_t position, std::size_t level) const {
  while (position > level) position = parent_[position];
  return position;
}

std::size_t ContractionTree::n_of_t(double t) const {
  auto first_below = std::partition_point(times_.begin(), times_.end(),
                                          [t](double time) { return time >= t; });
  return static_cast<std::size_t>(first_below - times_.begin()) - 1;
}

std::vector<double> posterior_radii(const CoverTree& tree, const DistanceOracle& oracle) {
  const std::size_t n = tree.size();
  std::vector<double> rad(n, 0.0);
  std::vector<std::size_t> stack;
  for (std::size_t x = 1; x < n; ++x) {
    const std::size_t up = tree.parent[x];
    double r0 = 0.0;
    stack.assign(1, x);
    while (!stack.empty()) {
      const std::size_t y = stack.back();
      stack.pop_back();
      r0 = std::max(r0, oracle(y, up));
      stack.insert(stack.end(), tree.children[y].begin(), tree.children[y].end());
    }
    rad[x] = r0;
  }
  // children carry larger indices than their parents
  for (std::size_t x = n; x-- > 1;) {
    const std::size_t up = tree.parent[x];
    if (up != 0) rad[up] = std::max(rad[up], rad[x]);
  }
  if (n > 0) rad[0] = kInfinity;
  return rad;
}

ContractionTree tighten(const CoverTree& tree, const DistanceOracle& oracle) {
  const std::size_t n = tree.size();
  const std::vector<double> rad = posterior_radii(tree, oracle);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // rad never increases from parent to child and parents carry the lower
  // insertion index, so this key already extends the ancestor order.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rad[a] > rad[b]; });

  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;

  std::vector<std::size_t> parent(n, kNoParent);
  std::vector<double> times(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t x = order[k];
    times[k] = rad[x];
    if (k > 0) {
      parent[k] = position[tree.parent[x]];
      if (parent[k] >= k) throw std::logic_error("rad order does not extend the tree order");
    }
  }
  return ContractionTree(std::move(order), std::move(parent), std::move(times));
}

}  // namespace sparse_rips

namespace sparse_rips {

std::optional<std::pair<std::size_t, std::size_t>> find_density_violation(
    const ContractionTree& tree, const DistanceOracle& oracle, double rho) {
  for (std::size_t j = 1; j < tree.size(); ++j) {
    const double bound = tree.time(j) / rho;
    for (std::size_t i = 0; i < j; ++i) {
      if (oracle(tree.point(i), tree.point(j)) < bound) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace sparse_rips
