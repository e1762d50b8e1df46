#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "sparserips/modp.hpp"

namespace sparse_rips {

/// Finite persistence module V(0) -> V(1) -> ... -> V(L) over Z_p, given by
/// its structure maps; maps[c] : V(c) -> V(c+1) has dims[c+1] rows and
/// dims[c] columns. Spaces outside 0..L are zero.
struct ExplicitModule {
  std::uint32_t p = 2;
  std::vector<std::size_t> dims;
  std::vector<ModpMatrix> maps;

  std::size_t length() const { return dims.size(); }
  /// Throws InputError on mismatched shapes or a non-prime field.
  void validate() const;
  /// Composite map V(s) -> V(t) for s <= t (identity when s == t).
  ModpMatrix composite(std::size_t t, std::size_t s) const;
};

/// Index interval (birth, death]: the class lives in V(birth+1), ..., V(death).
/// birth = -1 means present from V(0).
struct IndexInterval {
  int birth = -1;
  int death = 0;

  friend auto operator<=>(const IndexInterval&, const IndexInterval&) = default;
};

/// Interval multiset: interval -> multiplicity (never zero).
using IndexBarcode = std::map<IndexInterval, std::size_t>;

struct NormalFormClass {
  IndexInterval interval;
  /// vectors[k] lives in V(interval.birth + 1 + k), k = 0..death-birth-1.
  std::vector<ModVector> vectors;
};

struct NormalForm {
  std::vector<NormalFormClass> classes;
  IndexBarcode barcode() const;
};

/// Interval basis built by sweeping births ascending and, for each birth,
/// deaths ascending: at (b, d) every vector of ker(V(b+1) -> V(d+1)) that is
/// independent of the collection so far starts a class whose forward images
/// fill V(b+1), ..., V(d).
NormalForm normal_form(const ExplicitModule& module);

/// r(t, s) = rank of V(s) -> V(t) for 0 <= s <= t < space_count.
class RankTable {
 public:
  explicit RankTable(std::size_t space_count)
      : count_(space_count), ranks_(space_count * space_count, 0) {}

  std::size_t space_count() const { return count_; }
  /// Zero whenever s or t falls outside 0..space_count-1 or s > t.
  long long at(long long t, long long s) const;
  void set(std::size_t t, std::size_t s, long long value) { ranks_[t * count_ + s] = value; }

  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  std::size_t count_;
  std::vector<long long> ranks_;
};

/// r(t, s) = sum of multiplicities of intervals with birth < s <= t <= death.
RankTable ranks_from_barcode(const IndexBarcode& barcode, std::size_t space_count);

/// Inclusion-exclusion N(b, d) = r(d, b+1) - r(d+1, b+1) - r(d, b) + r(d+1, b).
/// Throws InputError if some multiplicity comes out negative.
IndexBarcode barcode_from_ranks(const RankTable& ranks);

}  // namespace sparse_rips
