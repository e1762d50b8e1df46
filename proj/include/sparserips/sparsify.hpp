#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sparserips/covertree.hpp"
#include "sparserips/metric.hpp"
#include "sparserips/scale_map.hpp"

namespace sparse_rips {

/// Error budget of a sparsified complex.
///
/// The retained points are positions 0..N-1 of the contraction tree. eps0 is
/// twice the time of the first discarded position (0 when nothing is
/// discarded), R is the time of position 1, and eps1 the relative error.
struct PrecisionProfile {
  std::size_t n = 1;
  std::size_t N = 1;
  double R = kInfinity;
  double eps0 = 0.0;
  double eps1 = 0.0;
  std::optional<double> threshold;

  /// The profile of an unsparsified, untruncated matrix: psi is the identity.
  static PrecisionProfile exact(std::size_t n);

  ScaleMap psi() const { return {R, eps0, eps1, threshold}; }

  /// Relabelling factor 2 + 2/eps1; infinite for eps1 = 0.
  double q_factor() const;

  /// Q^{-1}: piecewise bound on d(x, pi_{n(r)} x) for the relabelled tree.
  double metric_precision_inverse(double r) const;

  friend bool operator==(const PrecisionProfile&, const PrecisionProfile&) = default;
};

struct ProfiledTimes {
  PrecisionProfile profile;
  /// Contraction times after relabelling: Q(r_n) for retained positions, r_n otherwise.
  std::vector<double> times;
};

/// Throws InputError unless 1 <= keep <= tree.size() and eps1 >= 0 is finite.
ProfiledTimes make_profile(const ContractionTree& tree, std::size_t keep, double eps1);

std::vector<double> relabelled_times(const ContractionTree& tree, const PrecisionProfile& profile);

struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  double length = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Non-missing entries of a length function, stored once with i < j and
/// sorted by (i, j). Missing pairs are implicitly infinite.
struct SparseLengthMatrix {
  std::size_t size = 0;
  std::vector<Edge> edges;
  PrecisionProfile profile;
};

/// Outcome of assigning a length to the pair (x_i, x_j), i < j, from its dual-tree parent.
enum class EdgeCase {
  InheritedMissing,  ///< (a) the parent pair is missing
  ParentTooFar,      ///< (b) t_j <= d(x_i, parent x_j)
  BeyondTime,        ///< (c) d(x_i, parent x_j) < t_j < d(x_i, x_j)
  Kept,              ///< (d) t_j >= max(d(x_i, x_j), d(x_i, parent x_j))
};

/// Dispatch for a pair whose dual-tree parent is non-missing.
EdgeCase classify_pair(double time, double parent_distance, double distance);

/// Depth-first dual-tree traversal emitting the sparsified length matrix on
/// the retained positions. Pairs (parent x, x) are always kept.
SparseLengthMatrix sparsify(const ContractionTree& tree, const DistanceOracle& oracle,
                            const PrecisionProfile& profile);

/// Every pair of oracle points, with the exact profile.
SparseLengthMatrix full_length_matrix(const DistanceOracle& oracle);

/// Dense sparsified and implied lengths over all tree positions (quadratic memory).
struct ImpliedLengths {
  std::size_t size = 0;
  std::vector<double> sparse;   ///< l, infinite where missing
  std::vector<double> implied;  ///< implied length
  std::vector<EdgeCase> cases;

  double sparse_at(std::size_t i, std::size_t j) const { return sparse[i * size + j]; }
  double implied_at(std::size_t i, std::size_t j) const { return implied[i * size + j]; }
  EdgeCase case_at(std::size_t i, std::size_t j) const { return cases[i * size + j]; }
};

/// Full recursion without pruning. Test oracle only.
ImpliedLengths implied_lengths(const ContractionTree& tree, const DistanceOracle& oracle,
                               const PrecisionProfile& profile);

/// Number of cliques with k+1 vertices for k = 0..dim_cap. Counting stops
/// early once the running total exceeds `stop_after`.
std::vector<std::uint64_t> count_simplices(std::size_t size, const std::vector<Edge>& edges,
                                           std::size_t dim_cap,
                                           std::uint64_t stop_after = UINT64_MAX);
std::vector<std::uint64_t> count_simplices(const SparseLengthMatrix& matrix, std::size_t dim_cap);

}  // namespace sparse_rips
