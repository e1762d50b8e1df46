#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "oracles.hpp"
#include "printers.hpp"
#include "sparserips/errors.hpp"
#include "sparserips/generators.hpp"
#include "sparserips/persistence.hpp"

using namespace sparse_rips;

namespace {

const std::vector<Point> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

bool face_order_ok(const Filtration& f) {
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < f.simplices.size(); ++k) index[f.simplices[k].vertices] = k;
  for (std::size_t k = 0; k < f.simplices.size(); ++k) {
    const Simplex& s = f.simplices[k];
    if (s.vertices.size() < 2) continue;
    double diam = 0.0;
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      std::vector<std::size_t> face = s.vertices;
      face.erase(face.begin() + static_cast<long>(drop));
      const auto it = index.find(face);
      if (it == index.end() || it->second >= k) return false;
      diam = std::max(diam, f.simplices[it->second].diameter);
    }
    if (s.vertices.size() == 2) continue;
    if (diam != s.diameter) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("filtration of a triangle") {
  const std::vector<Edge> k3{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}};
  const Filtration f = build_filtration(3, k3, 2);
  REQUIRE(f.simplices.size() == 7);
  CHECK(f.simplices[0].diameter == 0.0);
  CHECK(f.simplices[3].vertices == std::vector<std::size_t>{0, 1});
  CHECK(f.simplices[6].vertices == std::vector<std::size_t>{0, 1, 2});
  CHECK(f.simplices[6].diameter == 1.0);

  const std::vector<Edge> open{{0, 2, 1}, {1, 2, 1}};
  const Filtration g = build_filtration(3, open, 2);
  CHECK(g.simplices.size() == 5);
}

TEST_CASE("filtration of the unit square") {
  const Filtration f = build_filtration(euclidean_oracle(kSquare), 1);
  REQUIRE(f.simplices.size() == 10);
  std::vector<double> diam;
  for (const Simplex& s : f.simplices)
    if (s.dimension() == 1) diam.push_back(s.diameter);
  CHECK(diam.size() == 6);
  CHECK(std::count(diam.begin(), diam.end(), 1.0) == 4);
  CHECK(std::count(diam.begin(), diam.end(), std::sqrt(2.0)) == 2);
  CHECK(face_order_ok(f));
}

TEST_CASE("filtration honours threshold and simplex cap") {
  const auto d = euclidean_oracle(kSquare);
  CHECK(build_filtration(d, 2, 1.0).simplices.size() == 8);
  CHECK_THROWS_AS(build_filtration(d, 2, std::nullopt, 10), ResourceLimitError);
  CHECK_NOTHROW(build_filtration(d, 2, std::nullopt, 15));
}

TEST_CASE("square diagram") {
  for (std::uint32_t p : {2u, 3u}) {
    const PersistenceDiagram dg = reduce(build_filtration(euclidean_oracle(kSquare), 2), p);
    const auto h0 = dg.in_dimension(0);
    REQUIRE(h0.size() == 4);
    for (int k = 0; k < 3; ++k) CHECK(h0[k] == DiagramEntry{0, 0.0, 1.0});
    CHECK(h0[3] == DiagramEntry{0, 0.0, kInfinity});
    const auto h1 = dg.in_dimension(1);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0] == DiagramEntry{1, 1.0, std::sqrt(2.0)});
    CHECK(dg.in_dimension(2).empty());
  }
}

TEST_CASE("circle of 32 points") {
  const auto d = circle_oracle(circle_sample(32));
  const PersistenceDiagram p2 = reduce(build_filtration(d, 2), 2);
  const PersistenceDiagram p3 = reduce(build_filtration(d, 2), 3);
  CHECK(p2.entries == p3.entries);
  const auto h1 = p2.in_dimension(1);
  REQUIRE(h1.size() == 1);
  CHECK(h1[0].birth == doctest::Approx(1.0 / 32).epsilon(1e-12));
  CHECK(h1[0].death == doctest::Approx(11.0 / 32).epsilon(1e-12));
  CHECK(p2.in_dimension(0).size() == 32);
}

TEST_CASE("single point and bad fields") {
  const auto d = matrix_oracle(std::vector<double>{});
  const PersistenceDiagram dg = reduce(build_filtration(d, 1), 2);
  CHECK(dg.entries == std::vector<DiagramEntry>{{0, 0.0, kInfinity}});
  CHECK_THROWS_AS(reduce(build_filtration(d, 1), 4), InputError);
  CHECK_THROWS_AS(reduce(build_filtration(d, 1), 1), InputError);
}

TEST_CASE("reduction agrees with the brute-force rank oracle") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 4 + seed % 6;
    const auto d = euclidean_oracle(random_cloud(n, 2 + seed % 2, seed + 300));
    const std::size_t top = n <= 7 ? 2 : 1;
    for (std::uint32_t p : {2u, 3u}) {
      const Filtration f = build_filtration(d, top + 1);
      CHECK(face_order_ok(f));
      const PersistenceDiagram dg = reduce(f, p);
      CHECK(dg.entries == oracle::rips_diagram(d, top, p));
    }
  }
}

TEST_CASE("reduction on a graph metric with ties") {
  // cycle graph C6 with hop distance
  std::vector<double> lower;
  for (std::size_t i = 1; i < 6; ++i)
    for (std::size_t j = 0; j < i; ++j) lower.push_back(static_cast<double>(std::min(i - j, 6 - (i - j))));
  const auto d = matrix_oracle(lower);
  const PersistenceDiagram dg = reduce(build_filtration(d, 2), 2);
  CHECK(dg.entries == oracle::rips_diagram(d, 1, 2));
  REQUIRE(dg.in_dimension(1).size() == 1);
  CHECK(dg.in_dimension(1)[0] == DiagramEntry{1, 1.0, 2.0});
}
