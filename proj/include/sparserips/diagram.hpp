#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sparserips/persistence.hpp"
#include "sparserips/scale_map.hpp"
#include "sparserips/sparsify.hpp"

namespace sparse_rips {

enum class EntryClass { Definite, Possible };

/// [birth_lo, birth_hi] x [death_lo, death_hi]; the diagram entry is the upper-right corner.
struct ErrorRect {
  double birth_lo = 0.0;
  double birth_hi = 0.0;
  double death_lo = 0.0;
  double death_hi = 0.0;
};

struct ApproxEntry {
  DiagramEntry entry;
  ErrorRect rect;
  EntryClass cls = EntryClass::Possible;
  bool open_death = false;  ///< infinite death; the rectangle is unbounded above
};

/// Diagram of a complex interleaved with the truth through `psi`, each entry
/// widened to the box in which the corresponding true entry must lie.
struct ApproxDiagram {
  PersistenceDiagram base;
  PrecisionProfile profile;
  std::vector<ApproxEntry> entries;  ///< parallel to base.entries
};

/// Rectangle [psi^-1(b), b] x [psi^-1(d), d] per entry; Definite iff d > psi(b).
ApproxDiagram approximate(const PersistenceDiagram& diagram, const PrecisionProfile& profile);

/// Definite entries whose rectangle lies inside {birth < s, death >= t}.
std::size_t definite_rank_at(const ApproxDiagram& diagram, std::size_t dim, double s, double t);

/// Related entries for modules interleaved by V(t) -> W(psi1(t)) and
/// W(t) -> V(psi2(t)), on real scales:
/// w.birth <= psi1(v.birth), v.birth <= psi2(w.birth),
/// psi2(w.death) >= v.death and w.death <= psi1(v.death).
bool related(const DiagramEntry& v, const DiagramEntry& w, const ScaleMap& psi1,
             const ScaleMap& psi2);

/// psi1(psi2(birth)) <= death. For an entry of W pass the maps swapped.
bool alive(const DiagramEntry& entry, const ScaleMap& psi1, const ScaleMap& psi2);

struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  ///< (index in V, index in W)
  std::vector<std::size_t> unmatched_v;
  std::vector<std::size_t> unmatched_w;
};

struct MatchResult {
  bool ok = false;
  Matching matching;
  /// Alive entries no related-only matching can cover (empty when ok).
  std::vector<std::size_t> uncovered_v;
  std::vector<std::size_t> uncovered_w;
};

/// Searches for a matching of related entries covering every alive entry of
/// both sides. Entries are assumed to share one homological dimension.
MatchResult match_diagrams(std::span<const DiagramEntry> v, std::span<const DiagramEntry> w,
                           const ScaleMap& psi1, const ScaleMap& psi2);

/// Number of entries with birth < s and death >= t. Throws InputError if s > t.
std::size_t rank_at(std::span<const DiagramEntry> entries, double s, double t);

struct RankViolation {
  std::size_t dim = 0;
  /// 1: rank_W(psi(t), s) <= rank_V(t, s); 2: rank_V(t, s) <= rank_W(t, psi(s)).
  int inequality = 1;
  double s = 0.0;
  double t = 0.0;
  std::size_t lhs = 0;
  std::size_t rhs = 0;

  std::string describe() const;
};

struct DimensionReport {
  std::size_t dim = 0;
  std::vector<RankViolation> violations;
  MatchResult matching;
  bool passed() const { return violations.empty() && matching.ok; }
};

struct InterleavingReport {
  std::vector<DimensionReport> dimensions;
  bool passed() const;
  std::string summary() const;
};

/// Checks that W is psi-interleaved into V (W(r) -> V(r) -> W(psi(r))):
/// both rank inequalities on every pair of scales separating the critical
/// values, plus the alive-covering matching with psi1 = psi, psi2 = id.
InterleavingReport verify_interleaving(const PersistenceDiagram& v, const PersistenceDiagram& w,
                                       const ScaleMap& psi);

}  // namespace sparse_rips
