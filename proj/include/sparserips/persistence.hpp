#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sparserips/metric.hpp"
#include "sparserips/sparsify.hpp"

namespace sparse_rips {

inline constexpr std::uint64_t kDefaultMaxSimplices = 20'000'000;

struct Simplex {
  std::vector<std::size_t> vertices;  ///< strictly increasing
  double diameter = 0.0;

  std::size_t dimension() const { return vertices.size() - 1; }
};

/// Flag filtration ordered by (diameter, dimension, vertices). A simplex of
/// diameter w belongs to V(r) = {diam < r} exactly for r > w.
struct Filtration {
  std::size_t vertex_count = 0;
  std::size_t dim_cap = 0;  ///< largest simplex dimension enumerated
  std::vector<Simplex> simplices;
};

/// Enumerates every clique of the edge graph with at most dim_cap + 1
/// vertices, dropping edges longer than `threshold`. Missing pairs block
/// cliques. Throws ResourceLimitError if more than `max_simplices` simplices
/// would be produced.
Filtration build_filtration(std::size_t vertex_count, const std::vector<Edge>& edges,
                            std::size_t dim_cap, std::optional<double> threshold = std::nullopt,
                            std::uint64_t max_simplices = kDefaultMaxSimplices);
Filtration build_filtration(const SparseLengthMatrix& matrix, std::size_t dim_cap,
                            std::optional<double> threshold = std::nullopt,
                            std::uint64_t max_simplices = kDefaultMaxSimplices);
Filtration build_filtration(const DistanceOracle& oracle, std::size_t dim_cap,
                            std::optional<double> threshold = std::nullopt,
                            std::uint64_t max_simplices = kDefaultMaxSimplices);

/// One interval (birth, death] of a homology class in dimension `dim`.
struct DiagramEntry {
  std::size_t dim = 0;
  double birth = 0.0;
  double death = 0.0;  ///< +inf for essential classes

  friend auto operator<=>(const DiagramEntry&, const DiagramEntry&) = default;
};

struct PersistenceDiagram {
  std::uint32_t field = 2;
  std::vector<DiagramEntry> entries;  ///< sorted by (dim, birth, death)

  std::vector<DiagramEntry> in_dimension(std::size_t dim) const;
  /// Largest dimension with an entry; 0 for an empty diagram.
  std::size_t top_dimension() const;

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
};

/// Standard column reduction of the boundary matrix over Z_p.
///
/// Reports dimensions below the filtration's dim_cap (dimension 0 at least);
/// zero-length pairs are dropped and unpaired classes die at infinity.
/// Throws InputError if p is not prime.
PersistenceDiagram reduce(const Filtration& filtration, std::uint32_t p);

}  // namespace sparse_rips
