#include "sparserips/persistence.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "sparserips/errors.hpp"
#include "sparserips/modp.hpp"
#include "sparserips/numeric.hpp"

namespace sparse_rips {

namespace {

struct Neighbor {
  std::size_t vertex;
  double length;
};

void extend_cliques(const std::vector<std::vector<Neighbor>>& upper, std::vector<std::size_t>& clique,
                    const std::vector<Neighbor>& candidates, double diameter, std::size_t dim_cap,
                    std::vector<Simplex>& out) {
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const Neighbor& v = candidates[k];
    // v's length field holds the longest edge from v into the current clique
    const double d = std::max(diameter, v.length);
    clique.push_back(v.vertex);
    out.push_back({clique, d});
    if (clique.size() <= dim_cap) {
      std::vector<Neighbor> next;
      const auto& nbrs = upper[v.vertex];
      auto it = nbrs.begin();
      for (std::size_t m = k + 1; m < candidates.size(); ++m) {
        it = std::lower_bound(it, nbrs.end(), candidates[m].vertex,
                              [](const Neighbor& a, std::size_t b) { return a.vertex < b; });
        if (it == nbrs.end()) break;
        if (it->vertex == candidates[m].vertex)
          next.push_back({it->vertex, std::max(it->length, candidates[m].length)});
      }
      if (!next.empty()) extend_cliques(upper, clique, next, d, dim_cap, out);
    }
    clique.pop_back();
  }
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

Filtration build_filtration(std::size_t vertex_count, const std::vector<Edge>& edges,
                            std::size_t dim_cap, std::optional<double> threshold,
                            std::uint64_t max_simplices) {
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.i == e.j || e.i >= vertex_count || e.j >= vertex_count)
      throw InputError("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ") is invalid");
    if (threshold && e.length > *threshold) continue;
    kept.push_back(e);
  }

  const auto counts = count_simplices(vertex_count, kept, dim_cap, max_simplices);
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total > max_simplices)
    throw ResourceLimitError("filtration would contain more than " +
                             std::to_string(max_simplices) + " simplices");

  std::vector<std::vector<Neighbor>> upper(vertex_count);
  for (const Edge& e : kept) upper[std::min(e.i, e.j)].push_back({std::max(e.i, e.j), e.length});
  for (auto& list : upper) {
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) {
      return a.vertex < b.vertex || (a.vertex == b.vertex && a.length < b.length);
    });
    list.erase(std::unique(list.begin(), list.end(),
                           [](const Neighbor& a, const Neighbor& b) { return a.vertex == b.vertex; }),
               list.end());
  }

  Filtration f;
  f.vertex_count = vertex_count;
  f.dim_cap = dim_cap;
  f.simplices.reserve(total);
  std::vector<std::size_t> clique;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    clique.assign(1, v);
    f.simplices.push_back({clique, 0.0});
    if (dim_cap > 0) extend_cliques(upper, clique, upper[v], 0.0, dim_cap, f.simplices);
  }
  std::sort(f.simplices.begin(), f.simplices.end(), [](const Simplex& a, const Simplex& b) {
    if (a.diameter != b.diameter) return a.diameter < b.diameter;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return f;
}

Filtration build_filtration(const SparseLengthMatrix& matrix, std::size_t dim_cap,
                            std::optional<double> threshold, std::uint64_t max_simplices) {
  return build_filtration(matrix.size, matrix.edges, dim_cap, threshold, max_simplices);
}

Filtration build_filtration(const DistanceOracle& oracle, std::size_t dim_cap,
                            std::optional<double> threshold, std::uint64_t max_simplices) {
  return build_filtration(full_length_matrix(oracle), dim_cap, threshold, max_simplices);
}

std::vector<DiagramEntry> PersistenceDiagram::in_dimension(std::size_t dim) const {
  std::vector<DiagramEntry> out;
  for (const auto& e : entries)
    if (e.dim == dim) out.push_back(e);
  return out;
}

std::size_t PersistenceDiagram::top_dimension() const {
  std::size_t top = 0;
  for (const auto& e : entries) top = std::max(top, e.dim);
  return top;
}

PersistenceDiagram reduce(const Filtration& filtration, std::uint32_t p) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  const auto& simplices = filtration.simplices;
  const std::size_t count = simplices.size();
  const std::size_t reported = std::max<std::size_t>(filtration.dim_cap, 1);

  std::unordered_map<std::vector<std::size_t>, std::size_t, VectorHash> index;
  index.reserve(count);
  for (std::size_t k = 0; k < count; ++k) index.emplace(simplices[k].vertices, k);

  using Column = std::vector<std::pair<std::size_t, std::uint32_t>>;  // (row, coefficient), ascending
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Column> columns(count);
  std::vector<std::size_t> pivot_owner(count, kNone);
  std::vector<bool> paired(count, false);

  PersistenceDiagram diagram;
  diagram.field = p;

  std::vector<std::size_t> face;
  for (std::size_t j = 0; j < count; ++j) {
    const auto& vertices = simplices[j].vertices;
    if (vertices.size() < 2) continue;
    Column& col = columns[j];
    for (std::size_t drop = 0; drop < vertices.size(); ++drop) {
      face.clear();
      for (std::size_t m = 0; m < vertices.size(); ++m)
        if (m != drop) face.push_back(vertices[m]);
      auto it = index.find(face);
      if (it == index.end()) throw std::logic_error("filtration is missing a face");
      col.emplace_back(it->second, drop % 2 == 0 ? 1u : p - 1);
    }
    std::sort(col.begin(), col.end());

    while (!col.empty() && pivot_owner[col.back().first] != kNone) {
      const Column& other = columns[pivot_owner[col.back().first]];
      const std::uint64_t factor =
          static_cast<std::uint64_t>(col.back().second) * inverse_mod(other.back().second, p) % p;
      Column merged;
      merged.reserve(col.size() + other.size());
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < other.size()) {
        if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
          merged.push_back(col[a++]);
        } else if (a == col.size() || other[b].first < col[a].first) {
          merged.emplace_back(other[b].first, static_cast<std::uint32_t>((p - factor) * other[b].second % p));
          ++b;
        } else {
          const auto value = static_cast<std::uint32_t>((col[a].second + (p - factor) * other[b].second) % p);
          if (value != 0) merged.emplace_back(col[a].first, value);
          ++a;
          ++b;
        }
      }
      col = std::move(merged);
    }

    if (col.empty()) continue;
    const std::size_t low = col.back().first;
    pivot_owner[low] = j;
    paired[low] = paired[j] = true;
    const std::size_t dim = simplices[low].dimension();
    const double birth = simplices[low].diameter, death = simplices[j].diameter;
    if (dim < reported && birth < death) diagram.entries.push_back({dim, birth, death});
  }

  for (std::size_t k = 0; k < count; ++k) {
    if (paired[k]) continue;
    const std::size_t dim = simplices[k].dimension();
    if (dim < reported) diagram.entries.push_back({dim, simplices[k].diameter, kInfinity});
  }
  std::sort(diagram.entries.begin(), diagram.entries.end());
  return diagram;
}

}  // namespace sparse_rips
