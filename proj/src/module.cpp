#include "sparserips/module.hpp"

#include <string>

#include "sparserips/errors.hpp"

namespace sparse_rips {

void ExplicitModule::validate() const {
  if (!is_prime(p)) throw InputError("module field characteristic is not prime");
  if (dims.empty()) {
    if (!maps.empty()) throw InputError("module without spaces has maps");
    return;
  }
  if (maps.size() + 1 != dims.size())
    throw InputError("module needs exactly one map between consecutive spaces");
  for (std::size_t c = 0; c < maps.size(); ++c)
    if (maps[c].cols() != dims[c] || maps[c].rows() != dims[c + 1])
      throw InputError("map " + std::to_string(c) + " has the wrong shape");
}

ModpMatrix ExplicitModule::composite(std::size_t t, std::size_t s) const {
  ModpMatrix result = ModpMatrix::identity(dims[s]);
  for (std::size_t c = s; c < t; ++c) result = multiply(maps[c], result, p);
  return result;
}

IndexBarcode NormalForm::barcode() const {
  IndexBarcode out;
  for (const auto& cls : classes) ++out[cls.interval];
  return out;
}

NormalForm normal_form(const ExplicitModule& module) {
  module.validate();
  const std::size_t L = module.length();
  const std::uint32_t p = module.p;
  NormalForm result;
  // span of the collection inside each space
  std::vector<EchelonBasis> spans;
  spans.reserve(L);
  for (std::size_t c = 0; c < L; ++c) spans.emplace_back(module.dims[c], p);

  for (int b = -1; b + 1 < static_cast<int>(L); ++b) {
    const auto start = static_cast<std::size_t>(b + 1);
    for (std::size_t d = start; d < L; ++d) {
      // ker(V(b+1) -> V(d+1)); beyond the last space everything dies
      const ModpMatrix to_death = d + 1 < L ? module.composite(d + 1, start)
                                            : ModpMatrix(0, module.dims[start]);
      for (ModVector& xi : kernel_basis(to_death, p)) {
        if (spans[start].contains(xi)) continue;
        NormalFormClass cls{{b, static_cast<int>(d)}, {}};
        ModVector image = std::move(xi);
        for (std::size_t c = start; c <= d; ++c) {
          if (c > start) image = module.maps[c - 1].apply(image, p);
          spans[c].insert(image);
          cls.vectors.push_back(image);
        }
        result.classes.push_back(std::move(cls));
      }
    }
  }
  return result;
}

long long RankTable::at(long long t, long long s) const {
  const auto n = static_cast<long long>(count_);
  if (s < 0 || t < 0 || s >= n || t >= n || s > t) return 0;
  return ranks_[static_cast<std::size_t>(t) * count_ + static_cast<std::size_t>(s)];
}

RankTable ranks_from_barcode(const IndexBarcode& barcode, std::size_t space_count) {
  RankTable table(space_count);
  for (std::size_t s = 0; s < space_count; ++s)
    for (std::size_t t = s; t < space_count; ++t) {
      long long r = 0;
      for (const auto& [interval, mult] : barcode)
        if (interval.birth < static_cast<int>(s) && static_cast<int>(t) <= interval.death)
          r += static_cast<long long>(mult);
      table.set(t, s, r);
    }
  return table;
}

IndexBarcode barcode_from_ranks(const RankTable& ranks) {
  IndexBarcode out;
  const auto L = static_cast<long long>(ranks.space_count());
  for (long long b = -1; b + 1 < L; ++b)
    for (long long d = b + 1; d < L; ++d) {
      const long long n = ranks.at(d, b + 1) - ranks.at(d + 1, b + 1) - ranks.at(d, b) + ranks.at(d + 1, b);
      if (n < 0)
        throw InputError("rank table is inconsistent at interval (" + std::to_string(b) + ", " +
                         std::to_string(d) + "]");
      if (n > 0) out[{static_cast<int>(b), static_cast<int>(d)}] = static_cast<std::size_t>(n);
    }
  return out;
}

}  // namespace sparse_rips
