#include <doctest.h>

#include <cmath>
#include <map>

#include "sparserips/errors.hpp"
#include "sparserips/generators.hpp"
#include "sparserips/metric.hpp"

using namespace sparse_rips;

TEST_CASE("counter rng reference values") {
  // SplitMix64 reference stream for seed 0
  CounterRng rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
  CounterRng again(0);
  CHECK(again.at(2) == 0x06C45D188009454FULL);
  for (int k = 0; k < 1000; ++k) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("circle samples") {
  CHECK(circle_sample(4) == std::vector<double>{0, 0.25, 0.5, 0.75});
  CHECK(circle_sample(1) == std::vector<double>{0});
  CHECK_THROWS_AS(circle_sample(0), InputError);

  const auto d = circle_oracle(circle_sample(32));
  double smallest = 1.0;
  for (std::size_t i = 0; i < 32; ++i)
    for (std::size_t j = i + 1; j < 32; ++j) smallest = std::min(smallest, d(i, j));
  CHECK(smallest == 1.0 / 32);

  // rotational symmetry of the distance multiset
  for (std::size_t shift = 1; shift < 32; shift += 5) {
    std::map<double, int> a, b;
    for (std::size_t j = 0; j < 32; ++j) {
      ++a[d(0, j)];
      ++b[d(shift, (shift + j) % 32)];
    }
    CHECK(a == b);
  }
}

TEST_CASE("solenoid map and embedding") {
  const SolenoidState s = solenoid_step({0, 0, 0});
  CHECK(s[0] == 0.0);
  CHECK(s[1] == 1.0);
  CHECK(s[2] == 0.0);
  const Point p = solenoid_embed(s);
  CHECK(p[0] == doctest::Approx(4.0 / 3).epsilon(1e-15));
  CHECK(p[1] == 0.0);
  CHECK(p[2] == 0.0);

  const SolenoidState h = solenoid_step({0.5, 0, 0});
  CHECK(h[0] == 0.0);
  CHECK(h[1] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(h[2]) < 1e-15);
}

TEST_CASE("solenoid samples stay in the solid torus") {
  const auto pts = solenoid_sample({12, 500, 4});
  CHECK(pts.size() == 500);
  for (const Point& p : pts) {
    CHECK(p[0] * p[0] + p[1] * p[1] <= 1.5 * 1.5 + 1e-12);
    CHECK(std::abs(p[2]) <= 1.5);
  }
  CHECK(solenoid_sample({12, 50, 4}) == solenoid_sample({12, 50, 4}));
  CHECK(solenoid_sample({12, 50, 4}) != solenoid_sample({12, 50, 5}));
  CHECK_THROWS_AS(solenoid_sample({0, 10, 1}), InputError);
  CHECK_THROWS_AS(solenoid_sample({3, 0, 1}), InputError);
}

TEST_CASE("random clouds") {
  const auto a = random_cloud(3, 2, 17);
  CHECK(a == random_cloud(3, 2, 17));
  CHECK(a.size() == 3);
  for (const Point& p : random_cloud(200, 4, 1))
    for (double c : p) {
      CHECK(c >= 0.0);
      CHECK(c < 1.0);
    }
  CHECK(random_cloud(1, 3, 0).size() == 1);
  CHECK_THROWS_AS(random_cloud(0, 3, 0), InputError);
  CHECK_THROWS_AS(random_cloud(3, 0, 0), InputError);
}
