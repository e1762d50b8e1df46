#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "printers.hpp"
#include "sparserips/covertree.hpp"
#include "sparserips/diagram.hpp"
#include "sparserips/errors.hpp"
#include "sparserips/generators.hpp"
#include "sparserips/persistence.hpp"
#include "sparserips/sparsify.hpp"

using namespace sparse_rips;

namespace {

PrecisionProfile profile_of(double R, double eps0, double eps1) {
  PrecisionProfile p;
  p.n = 10;
  p.N = 5;
  p.R = R;
  p.eps0 = eps0;
  p.eps1 = eps1;
  return p;
}

ScaleMap scale(double factor) { return ScaleMap::relative(factor - 1.0); }

bool matching_valid(const MatchResult& m, std::span<const DiagramEntry> v,
                    std::span<const DiagramEntry> w, const ScaleMap& psi1, const ScaleMap& psi2) {
  std::vector<bool> used_v(v.size()), used_w(w.size());
  for (auto [i, j] : m.matching.pairs) {
    if (used_v[i] || used_w[j]) return false;
    used_v[i] = used_w[j] = true;
    if (!related(v[i], w[j], psi1, psi2)) return false;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (alive(v[i], psi1, psi2) && !used_v[i]) return false;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (alive(w[j], psi2, psi1) && !used_w[j]) return false;
  return true;
}

struct Pipeline {
  PersistenceDiagram full;
  PersistenceDiagram sparse;
  PrecisionProfile profile;
};

Pipeline run(std::size_t n, std::size_t dim, std::uint64_t seed, double eps1, std::size_t keep) {
  const auto d = euclidean_oracle(random_cloud(n, dim, seed));
  const ContractionTree tree = tighten(build_cover_tree(d), d);
  const PrecisionProfile p = make_profile(tree, keep, eps1).profile;
  const SparseLengthMatrix m = sparsify(tree, d, p);
  return {reduce(build_filtration(d, 2), 2), reduce(build_filtration(m, 2), 2), p};
}

}  // namespace

TEST_CASE("identity profile gives point rectangles") {
  const PersistenceDiagram dg{2, {{0, 0.0, 1.0}, {0, 0.0, kInfinity}, {1, 1.0, 1.5}}};
  const ApproxDiagram a = approximate(dg, PrecisionProfile::exact(4));
  REQUIRE(a.entries.size() == 3);
  CHECK(a.entries[0].rect.birth_lo == 0.0);
  CHECK(a.entries[0].rect.death_lo == 1.0);
  CHECK(a.entries[0].cls == EntryClass::Definite);
  CHECK(a.entries[1].open_death);
  CHECK(a.entries[2].rect.birth_lo == 1.0);
  CHECK(a.entries[2].rect.death_lo == 1.5);
  CHECK(a.entries[2].cls == EntryClass::Definite);
}

TEST_CASE("rectangles and classification under a relative-plus-absolute profile") {
  const PrecisionProfile p = profile_of(10, 0.1, 0.25);
  const PersistenceDiagram dg{2, {{1, 1.0, 1.2}, {1, 1.0, 2.0}}};
  const ApproxDiagram a = approximate(dg, p);
  CHECK(a.entries[0].cls == EntryClass::Possible);
  CHECK(a.entries[1].cls == EntryClass::Definite);
  const ErrorRect& r = a.entries[1].rect;
  CHECK(r.birth_lo == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(r.birth_hi == 1.0);
  CHECK(r.death_lo == doctest::Approx(1.6).epsilon(1e-15));
  CHECK(r.death_hi == 2.0);
  const ScaleMap psi = p.psi();
  CHECK(psi(r.birth_lo) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(psi(r.death_lo) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("related and alive") {
  const ScaleMap id = ScaleMap::identity();
  const DiagramEntry v{1, 1.0, 3.0};
  CHECK(related(v, v, id, id));
  CHECK_FALSE(related(v, {1, 1.0, 3.1}, id, id));
  CHECK_FALSE(related(v, {1, 0.9, 3.0}, id, id));
  const ScaleMap s = scale(1.25);
  CHECK(related(v, {1, 1.1, 3.2}, s, s));
  CHECK_FALSE(related(v, {1, 1.1, 4.5}, s, s));
  CHECK(alive(v, id, id));
  CHECK(alive({1, 1.0, 2.0}, s, s));
  CHECK_FALSE(alive({1, 1.0, 1.5}, s, s));
  CHECK(related({0, 0.0, kInfinity}, {0, 0.0, kInfinity}, s, id));
}

TEST_CASE("rank_at") {
  const std::vector<DiagramEntry> one{{1, 1.0, 3.0}};
  CHECK(rank_at(one, 2, 2.5) == 1);
  CHECK(rank_at(one, 1, 3) == 0);
  CHECK(rank_at(one, 2, 3) == 1);
  CHECK(rank_at({}, 0, 5) == 0);
  CHECK_THROWS_AS(rank_at(one, 3, 2), InputError);
}

TEST_CASE("matching identical diagrams") {
  const std::vector<DiagramEntry> p{{1, 0.5, 2.0}, {1, 1.0, 3.0}, {1, 1.0, 3.0}, {1, 2.0, kInfinity}};
  const ScaleMap id = ScaleMap::identity();
  const MatchResult m = match_diagrams(p, p, id, id);
  CHECK(m.ok);
  CHECK(m.matching.pairs.size() == 4);
  CHECK(matching_valid(m, p, p, id, id));
}

TEST_CASE("short entries below psi may stay unmatched") {
  const ScaleMap s = scale(2.0);
  const std::vector<DiagramEntry> v{{1, 1.0, 5.0}, {1, 2.0, 2.5}};
  const std::vector<DiagramEntry> w{{1, 1.2, 5.5}};
  const MatchResult m = match_diagrams(v, w, s, s);
  CHECK(m.ok);
  CHECK(m.matching.unmatched_v == std::vector<std::size_t>{1});
  CHECK(matching_valid(m, v, w, s, s));
}

TEST_CASE("matcher reports uncovered alive entries") {
  const ScaleMap id = ScaleMap::identity();
  const std::vector<DiagramEntry> v{{1, 1.0, 3.0}};
  const std::vector<DiagramEntry> w{{1, 1.0, 4.0}};
  const MatchResult m = match_diagrams(v, w, id, id);
  CHECK_FALSE(m.ok);
  CHECK(m.uncovered_v == std::vector<std::size_t>{0});
  CHECK(m.uncovered_w == std::vector<std::size_t>{0});
}

TEST_CASE("matcher needs augmenting paths and merges both sides") {
  // greedy pairing v0-w0 would strand v1; w1 is only reachable from v0
  const ScaleMap s = scale(1.5);
  const ScaleMap id = ScaleMap::identity();
  const std::vector<DiagramEntry> v{{1, 1.0, 10.0}, {1, 1.0, 8.0}, {1, 4.0, 4.5}};
  const std::vector<DiagramEntry> w{{1, 1.2, 10.0}, {1, 1.4, 12.0}, {1, 4.5, 5.0}};
  const MatchResult m = match_diagrams(v, w, s, id);
  CHECK(matching_valid(m, v, w, s, id) == m.ok);
  CounterRng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<DiagramEntry> a, b;
    for (std::size_t k = rng.next() % 7; k > 0; --k) {
      const double birth = rng.uniform(0, 2);
      a.push_back({1, birth, birth + rng.uniform(0, 3)});
    }
    for (std::size_t k = rng.next() % 7; k > 0; --k) {
      const double birth = rng.uniform(0, 2);
      b.push_back({1, birth, birth + rng.uniform(0, 3)});
    }
    const MatchResult r = match_diagrams(a, b, s, s);
    if (r.ok) CHECK(matching_valid(r, a, b, s, s));
  }
}

TEST_CASE("verification of a diagram against itself") {
  const PersistenceDiagram p{2, {{0, 0.0, 1.0}, {0, 0.0, kInfinity}, {1, 1.0, 1.5}, {1, 1.2, 4.0}}};
  const InterleavingReport r = verify_interleaving(p, p, ScaleMap::identity());
  CHECK(r.passed());
  CHECK(r.dimensions.size() == 2);
}

TEST_CASE("shifted births: absorbed by the shift, rejected at twice the shift") {
  const double delta = 0.1;
  const PersistenceDiagram v{2, {{1, 1.0, 3.0}, {1, 2.0, 5.0}}};
  const PersistenceDiagram w1{2, {{1, 1.0 + delta, 3.0}, {1, 2.0 + delta, 5.0}}};
  CHECK(verify_interleaving(v, w1, ScaleMap::shift(delta)).passed());
  const PersistenceDiagram w2{2, {{1, 1.0 + 2 * delta, 3.0}, {1, 2.0 + 2 * delta, 5.0}}};
  const InterleavingReport bad = verify_interleaving(v, w2, ScaleMap::shift(delta));
  CHECK_FALSE(bad.passed());
  REQUIRE_FALSE(bad.dimensions[1].violations.empty());
  const RankViolation& witness = bad.dimensions[1].violations.front();
  CHECK(witness.inequality == 2);
  // the witness really violates rank_V(t, s) <= rank_W(t, psi(s))
  CHECK(rank_at(v.entries, witness.s, witness.t) >
        rank_at(w2.entries, witness.s + delta, witness.t));
}

TEST_CASE("inflated death is caught") {
  const Pipeline p = run(25, 2, 1, 0.5, 25);
  REQUIRE(verify_interleaving(p.full, p.sparse, p.profile.psi()).passed());
  PersistenceDiagram broken = p.sparse;
  for (DiagramEntry& e : broken.entries) {
    if (e.dim == 0 && std::isfinite(e.death)) {
      e.death = 2 * p.profile.psi()(e.death) + 1.0;
      break;
    }
  }
  std::sort(broken.entries.begin(), broken.entries.end());
  CHECK_FALSE(verify_interleaving(p.full, broken, p.profile.psi()).passed());
}

TEST_CASE("sparse vs full on random clouds") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    for (double eps1 : {0.25, 0.5, 1.0}) {
      const Pipeline p = run(30, 2, seed + 50, eps1, seed % 2 ? 30 : 20);
      const InterleavingReport r = verify_interleaving(p.full, p.sparse, p.profile.psi());
      INFO(r.summary());
      CHECK(r.passed());

      // definite rectangles never outnumber true ranks
      const ApproxDiagram a = approximate(p.sparse, p.profile);
      for (const DiagramEntry& e : p.full.entries) {
        for (double t : {e.death, e.death * 1.01}) {
          const double s = e.birth + 1e-9;
          if (s > t || !std::isfinite(t)) continue;
          const auto dims = p.full.in_dimension(e.dim);
          CHECK(definite_rank_at(a, e.dim, s, t) <= rank_at(dims, s, t));
        }
      }
    }
  }
}

TEST_CASE("subsampling interleaving between circles") {
  // circle(32) inside circle(64): every point of the larger sample lies within 1/64
  std::vector<double> angles = circle_sample(64);
  const auto big = circle_oracle(angles);
  std::vector<double> even;
  for (std::size_t k = 0; k < 64; k += 2) even.push_back(angles[k]);
  const auto small = circle_oracle(even);
  const PersistenceDiagram v = reduce(build_filtration(big, 2), 2);
  const PersistenceDiagram w = reduce(build_filtration(small, 2), 2);
  CHECK(verify_interleaving(v, w, ScaleMap::shift(2.0 / 64)).passed());
  CHECK_FALSE(verify_interleaving(v, w, ScaleMap::identity()).passed());
}
