#include <doctest.h>

#include <cmath>
#include <set>

#include "sparserips/covertree.hpp"
#include "sparserips/errors.hpp"
#include "sparserips/generators.hpp"
#include "sparserips/sparsify.hpp"

using namespace sparse_rips;

namespace {

struct Instance {
  EuclideanOracle oracle;
  ContractionTree tree;
};

Instance cloud(std::size_t n, std::size_t dim, std::uint64_t seed) {
  EuclideanOracle d = euclidean_oracle(random_cloud(n, dim, seed));
  ContractionTree t = tighten(build_cover_tree(d), d);
  return {std::move(d), std::move(t)};
}

double dist(const Instance& in, std::size_t i, std::size_t j) {
  return in.oracle(in.tree.point(i), in.tree.point(j));
}

}  // namespace

TEST_CASE("profile from a fixed tree") {
  const ContractionTree tree({0, 1, 2, 3}, {kNoParent, 0, 0, 0}, {kInfinity, 5, 3, 1});
  const ProfiledTimes full = make_profile(tree, 4, 0.25);
  CHECK(full.profile.q_factor() == 10.0);
  CHECK(full.times == std::vector<double>{kInfinity, 50, 30, 10});
  CHECK(full.profile.eps0 == 0.0);
  CHECK(full.profile.R == 5.0);
  const ProfiledTimes cut = make_profile(tree, 3, 0.25);
  CHECK(cut.profile.eps0 == 2.0);
  CHECK(cut.times == std::vector<double>{kInfinity, 50, 30, 1});
  CHECK_THROWS_AS(make_profile(tree, 0, 0.25), InputError);
  CHECK_THROWS_AS(make_profile(tree, 5, 0.25), InputError);
  CHECK_THROWS_AS(make_profile(tree, 2, -1.0), InputError);
  const ProfiledTimes naive = make_profile(tree, 3, 0.0);
  CHECK(std::isinf(naive.times[2]));
}

TEST_CASE("scale map evaluation and inverse") {
  const ScaleMap psi{10.0, 0.1, 0.25, std::nullopt};
  CHECK(psi(0.2) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(psi(1.0) == 1.25);
  CHECK(psi(100.0) == 10.0);
  CHECK(std::isinf(psi(kInfinity)));
  CHECK(psi.inverse(1.0) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(psi.inverse(2.0) == doctest::Approx(1.6).epsilon(1e-15));
  CHECK(psi.inverse(0.05) == 0.0);

  for (double x = 0.1; x <= 10.0; x += 0.0137) {
    CHECK(psi(psi.inverse(x)) == doctest::Approx(x).epsilon(1e-12));
  }
  double prev = 0.0;
  for (double r = 0.0; r <= 12.0; r += 0.01) {
    CHECK(psi(r) >= prev);
    if (r <= 10.0) CHECK(psi(r) >= r);
    prev = psi(r);
  }
  CHECK(ScaleMap::identity().is_identity());
  CHECK(ScaleMap::identity()(3.5) == 3.5);
}

TEST_CASE("threshold clamps psi to R") {
  const ScaleMap psi{5.0, 0.0, 0.5, 2.0};
  CHECK(psi(1.0) == 1.5);
  CHECK(psi(1.5) == 5.0);
}

TEST_CASE("edge case dispatch") {
  CHECK(classify_pair(3, 5, 1) == EdgeCase::ParentTooFar);
  CHECK(classify_pair(3, 3, 1) == EdgeCase::ParentTooFar);
  CHECK(classify_pair(3, 2, 4) == EdgeCase::BeyondTime);
  CHECK(classify_pair(5, 2, 4) == EdgeCase::Kept);
  CHECK(classify_pair(4, 2, 4) == EdgeCase::Kept);
}

TEST_CASE("metric precision inverse") {
  PrecisionProfile p;
  p.n = 10;
  p.N = 10;
  p.eps1 = 0.5;
  CHECK(p.metric_precision_inverse(6.0) == 1.0);
  p.N = 5;
  p.eps0 = 2.0;  // cut 1, q = 6
  CHECK(p.metric_precision_inverse(0.5) == 0.5);
  CHECK(p.metric_precision_inverse(3.0) == 1.0);
  CHECK(p.metric_precision_inverse(12.0) == 2.0);
  p.eps1 = 0.0;
  CHECK(p.metric_precision_inverse(100.0) == 1.0);
}

TEST_CASE("implied lengths follow the four cases") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Instance in = cloud(40, 2, seed);
    for (double eps1 : {0.25, 1.0}) {
      const PrecisionProfile p = make_profile(in.tree, 40, eps1).profile;
      const std::vector<double> t = relabelled_times(in.tree, p);
      const ImpliedLengths L = implied_lengths(in.tree, in.oracle, p);
      std::set<EdgeCase> seen;
      for (std::size_t j = 1; j < 40; ++j) {
        const std::size_t up = in.tree.parent(j);
        for (std::size_t i = 0; i < j; ++i) {
          const EdgeCase c = L.case_at(i, j);
          seen.insert(c);
          const double d = dist(in, i, j);
          if (i == up) {
            CHECK(L.sparse_at(i, j) == d);
            continue;
          }
          switch (c) {
            case EdgeCase::InheritedMissing:
              CHECK(std::isinf(L.sparse_at(i, up)));
              CHECK(L.implied_at(i, j) == L.implied_at(i, up));
              break;
            case EdgeCase::ParentTooFar:
              CHECK(L.implied_at(i, j) == dist(in, i, up));
              CHECK(t[j] <= dist(in, i, up));
              break;
            case EdgeCase::BeyondTime:
              CHECK(L.implied_at(i, j) == t[j]);
              break;
            case EdgeCase::Kept:
              CHECK(L.sparse_at(i, j) == d);
              CHECK(L.implied_at(i, j) == d);
              break;
          }
          CHECK(L.implied_at(i, j) <= L.sparse_at(i, j));
        }
      }
      for (std::size_t x = 1; x < 40; ++x) CHECK(L.implied_at(0, x) <= p.R);
      CHECK(seen.size() >= 2);
    }
  }
}

TEST_CASE("pruned traversal matches the full recursion") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Instance in = cloud(60, 2 + seed % 2, seed);
    for (double eps1 : {0.0, 0.25, 1.0}) {
      for (std::size_t keep : {std::size_t{60}, std::size_t{25}}) {
        const PrecisionProfile p = make_profile(in.tree, keep, eps1).profile;
        const SparseLengthMatrix m = sparsify(in.tree, in.oracle, p);
        const ImpliedLengths L = implied_lengths(in.tree, in.oracle, p);
        std::vector<Edge> expected;
        for (std::size_t i = 0; i < keep; ++i) {
          for (std::size_t j = i + 1; j < keep; ++j) {
            if (std::isfinite(L.sparse_at(i, j))) expected.push_back({i, j, L.sparse_at(i, j)});
          }
        }
        CHECK(m.size == keep);
        CHECK(m.edges == expected);
      }
    }
  }
}

TEST_CASE("sparse matrix invariants") {
  const Instance in = cloud(150, 2, 11);
  const PrecisionProfile p = make_profile(in.tree, 150, 0.5).profile;
  const std::vector<double> t = relabelled_times(in.tree, p);
  const SparseLengthMatrix m = sparsify(in.tree, in.oracle, p);
  std::set<std::pair<std::size_t, std::size_t>> present;
  for (const Edge& e : m.edges) {
    CHECK(e.i < e.j);
    CHECK(e.length == dist(in, e.i, e.j));
    CHECK(e.length <= t[e.j]);
    present.insert({e.i, e.j});
  }
  for (std::size_t x = 1; x < 150; ++x) CHECK(present.count({in.tree.parent(x), x}) == 1);
  CHECK(m.edges.size() < 150 * 149 / 2);
}

TEST_CASE("eps1 = 0 without truncation keeps every pair") {
  const Instance in = cloud(50, 3, 2);
  const SparseLengthMatrix m = sparsify(in.tree, in.oracle, make_profile(in.tree, 50, 0.0).profile);
  CHECK(m.edges.size() == 50 * 49 / 2);
}

TEST_CASE("threshold drops long edges after the traversal") {
  const Instance in = cloud(50, 2, 5);
  PrecisionProfile p = make_profile(in.tree, 50, 0.0).profile;
  p.threshold = 0.3;
  const SparseLengthMatrix m = sparsify(in.tree, in.oracle, p);
  std::size_t expected = 0;
  for (std::size_t i = 0; i < 50; ++i)
    for (std::size_t j = i + 1; j < 50; ++j) expected += dist(in, i, j) <= 0.3;
  CHECK(m.edges.size() == expected);
  for (const Edge& e : m.edges) CHECK(e.length <= 0.3);
}

TEST_CASE("sparse and implied complexes coincide below the time scale") {
  // for r among the edge lengths: pairs among positions <= n(r) with length < r agree
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Instance in = cloud(35, 2, seed + 20);
    for (double eps1 : {0.25, 1.0}) {
      const PrecisionProfile p = make_profile(in.tree, 35, eps1).profile;
      const std::vector<double> t = relabelled_times(in.tree, p);
      const ContractionTree relabelled(in.tree.order(), in.tree.parents(), t);
      const ImpliedLengths L = implied_lengths(in.tree, in.oracle, p);
      std::vector<double> rs;
      for (std::size_t i = 0; i < 35; ++i)
        for (std::size_t j = i + 1; j < 35; ++j) rs.push_back(dist(in, i, j));
      for (double r : rs) {
        const std::size_t top = relabelled.n_of_t(r);
        for (std::size_t i = 0; i <= top; ++i) {
          for (std::size_t j = i + 1; j <= top; ++j) {
            CHECK((L.sparse_at(i, j) < r) == (L.implied_at(i, j) < r));
          }
        }
      }
    }
  }
}

TEST_CASE("simplex counts") {
  CHECK(count_simplices(5, {}, 2) == std::vector<std::uint64_t>{5, 0, 0});
  const std::vector<Edge> k3{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
  CHECK(count_simplices(3, k3, 2) == std::vector<std::uint64_t>{3, 3, 1});
  const Instance in = cloud(9, 2, 1);
  const SparseLengthMatrix full = full_length_matrix(in.oracle);
  CHECK(count_simplices(full, 3) == std::vector<std::uint64_t>{9, 36, 84, 126});
}
