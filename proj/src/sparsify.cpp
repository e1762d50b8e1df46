#include "sparserips/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "sparserips/errors.hpp"

namespace sparse_rips {

PrecisionProfile PrecisionProfile::exact(std::size_t n) {
  PrecisionProfile profile;
  profile.n = n;
  profile.N = n;
  return profile;
}

double PrecisionProfile::q_factor() const {
  return eps1 == 0.0 ? kInfinity : 2.0 + 2.0 / eps1;
}

double PrecisionProfile::metric_precision_inverse(double r) const {
  const double q = q_factor();
  const double cut = eps0 / 2;
  if (N >= n || cut == 0.0) return std::isinf(q) ? 0.0 : r / q;
  if (r <= cut) return r;
  if (std::isinf(q) || r <= q * cut) return cut;
  return r / q;
}

ProfiledTimes make_profile(const ContractionTree& tree, std::size_t keep, double eps1) {
  const std::size_t n = tree.size();
  if (keep < 1 || keep > n)
    throw InputError("keep count " + std::to_string(keep) + " outside [1, " + std::to_string(n) + "]");
  if (!(eps1 >= 0.0) || std::isinf(eps1)) throw InputError("eps1 must be a finite value >= 0");
  ProfiledTimes result;
  PrecisionProfile& p = result.profile;
  p.n = n;
  p.N = keep;
  p.eps1 = eps1;
  p.R = n > 1 ? tree.time(1) : 0.0;
  p.eps0 = keep < n ? 2 * tree.time(keep) : 0.0;
  result.times = relabelled_times(tree, p);
  return result;
}

std::vector<double> relabelled_times(const ContractionTree& tree, const PrecisionProfile& profile) {
  const double q = profile.q_factor();
  std::vector<double> times(tree.times());
  for (std::size_t k = 1; k < std::min(profile.N, times.size()); ++k)
    times[k] = std::isinf(q) ? kInfinity : q * times[k];
  return times;
}

EdgeCase classify_pair(double time, double parent_distance, double distance) {
  if (time <= parent_distance) return EdgeCase::ParentTooFar;
  if (time < distance) return EdgeCase::BeyondTime;
  return EdgeCase::Kept;
}

SparseLengthMatrix sparsify(const ContractionTree& tree, const DistanceOracle& oracle,
                            const PrecisionProfile& profile) {
  const std::size_t N = std::min(profile.N, tree.size());
  const std::vector<double> times = relabelled_times(tree, profile);

  SparseLengthMatrix out;
  out.size = N;
  out.profile = profile;

  struct Pair {
    std::size_t a, b;
    double length;
  };
  std::vector<Pair> stack{{0, 0, 0.0}};

  auto visit = [&](std::size_t i, std::size_t j, double parent_distance) {
    const double d = oracle(tree.point(i), tree.point(j));
    // (parent x, x) is never missing; the diagonal parent pair has no time test
    const bool kept = tree.parent(j) == i ||
                      classify_pair(times[j], parent_distance, d) == EdgeCase::Kept;
    if (!kept) return;
    out.edges.push_back({i, j, d});
    stack.push_back({i, j, d});
  };
  auto visit_lazy = [&](std::size_t i, std::size_t j, double parent_distance) {
    // case (b) needs no new distance evaluation
    if (tree.parent(j) != i && times[j] <= parent_distance) return;
    visit(i, j, parent_distance);
  };

  while (!stack.empty()) {
    const Pair pair = stack.back();
    stack.pop_back();
    if (pair.a == pair.b) {
      for (std::size_t c : tree.children(pair.a))
        if (c < N) visit_lazy(pair.a, c, 0.0);
      continue;
    }
    for (std::size_t c : tree.children(pair.b))
      if (c < N) visit_lazy(pair.a, c, pair.length);
    for (std::size_t c : tree.children(pair.a)) {
      if (c < pair.b || c >= N) continue;
      if (c == pair.b)
        stack.push_back({c, c, 0.0});
      else
        visit_lazy(pair.b, c, pair.length);
    }
  }

  if (profile.threshold) {
    const double cap = *profile.threshold;
    std::erase_if(out.edges, [cap](const Edge& e) { return e.length > cap; });
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.i, x.j) < std::tie(y.i, y.j); });
  return out;
}

SparseLengthMatrix full_length_matrix(const DistanceOracle& oracle) {
  SparseLengthMatrix out;
  out.size = oracle.size();
  out.profile = PrecisionProfile::exact(oracle.size());
  out.edges.reserve(out.size * (out.size - 1) / 2);
  for (std::size_t i = 0; i < out.size; ++i)
    for (std::size_t j = i + 1; j < out.size; ++j) out.edges.push_back({i, j, oracle(i, j)});
  return out;
}

ImpliedLengths implied_lengths(const ContractionTree& tree, const DistanceOracle& oracle,
                               const PrecisionProfile& profile) {
  const std::size_t n = tree.size();
  const std::vector<double> times = relabelled_times(tree, profile);
  ImpliedLengths out;
  out.size = n;
  out.sparse.assign(n * n, 0.0);
  out.implied.assign(n * n, 0.0);
  out.cases.assign(n * n, EdgeCase::Kept);

  auto set = [&](std::size_t i, std::size_t j, double l, double lbar, EdgeCase c) {
    out.sparse[i * n + j] = out.sparse[j * n + i] = l;
    out.implied[i * n + j] = out.implied[j * n + i] = lbar;
    out.cases[i * n + j] = out.cases[j * n + i] = c;
  };

  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t up = tree.parent(j);
    for (std::size_t i = 0; i < j; ++i) {
      const double d = oracle(tree.point(i), tree.point(j));
      if (i == up) {
        set(i, j, d, d, EdgeCase::Kept);
        continue;
      }
      const double parent_length = out.sparse_at(i, up);
      if (std::isinf(parent_length)) {
        set(i, j, kInfinity, out.implied_at(i, up), EdgeCase::InheritedMissing);
        continue;
      }
      switch (classify_pair(times[j], parent_length, d)) {
        case EdgeCase::ParentTooFar:
          set(i, j, kInfinity, parent_length, EdgeCase::ParentTooFar);
          break;
        case EdgeCase::BeyondTime:
          set(i, j, kInfinity, times[j], EdgeCase::BeyondTime);
          break;
        default:
          set(i, j, d, d, EdgeCase::Kept);
      }
    }
  }
  return out;
}

namespace {

std::uint64_t count_extensions(const std::vector<std::vector<std::size_t>>& upper,
                               const std::vector<std::size_t>& candidates, std::size_t depth,
                               std::size_t dim_cap, std::vector<std::uint64_t>& counts,
                               std::uint64_t& total, std::uint64_t stop_after) {
  // candidates: common upper neighbours of the current clique (of dimension depth)
  if (depth == dim_cap) return 0;
  for (std::size_t v : candidates) {
    ++counts[depth + 1];
    if (++total > stop_after) return total;
    if (depth + 1 == dim_cap) continue;
    std::vector<std::size_t> next;
    std::set_intersection(candidates.begin(), candidates.end(), upper[v].begin(), upper[v].end(),
                          std::back_inserter(next));
    if (!next.empty() && count_extensions(upper, next, depth + 1, dim_cap, counts, total, stop_after) > stop_after)
      return total;
  }
  return total;
}

}  // namespace

std::vector<std::uint64_t> count_simplices(std::size_t size, const std::vector<Edge>& edges,
                                           std::size_t dim_cap, std::uint64_t stop_after) {
  std::vector<std::uint64_t> counts(dim_cap + 1, 0);
  counts[0] = size;
  std::uint64_t total = size;
  if (dim_cap == 0 || total > stop_after) return counts;
  std::vector<std::vector<std::size_t>> upper(size);
  for (const Edge& e : edges) upper[std::min(e.i, e.j)].push_back(std::max(e.i, e.j));
  for (auto& list : upper) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  for (std::size_t v = 0; v < size; ++v) {
    if (count_extensions(upper, upper[v], 0, dim_cap, counts, total, stop_after) > stop_after) break;
  }
  return counts;
}

std::vector<std::uint64_t> count_simplices(const SparseLengthMatrix& matrix, std::size_t dim_cap) {
  return count_simplices(matrix.size, matrix.edges, dim_cap);
}

}  // namespace sparse_rips
