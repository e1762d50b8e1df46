#include "sparserips/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "sparserips/errors.hpp"
#include "sparserips/numeric.hpp"

namespace sparse_rips {

ApproxDiagram approximate(const PersistenceDiagram& diagram, const PrecisionProfile& profile) {
  ApproxDiagram out{diagram, profile, {}};
  const ScaleMap psi = profile.psi();
  out.entries.reserve(diagram.entries.size());
  for (const DiagramEntry& e : diagram.entries) {
    ApproxEntry a;
    a.entry = e;
    a.rect.birth_lo = std::min(psi.inverse(e.birth), e.birth);
    a.rect.birth_hi = e.birth;
    a.rect.death_hi = e.death;
    a.open_death = std::isinf(e.death);
    a.rect.death_lo = a.open_death ? e.death : std::min(psi.inverse(e.death), e.death);
    a.cls = e.death > psi(e.birth) ? EntryClass::Definite : EntryClass::Possible;
    out.entries.push_back(a);
  }
  return out;
}

std::size_t definite_rank_at(const ApproxDiagram& diagram, std::size_t dim, double s, double t) {
  std::size_t count = 0;
  for (const ApproxEntry& a : diagram.entries) {
    if (a.entry.dim != dim || a.cls != EntryClass::Definite) continue;
    if (a.rect.birth_hi < s && a.rect.death_lo >= t) ++count;
  }
  return count;
}

bool related(const DiagramEntry& v, const DiagramEntry& w, const ScaleMap& psi1,
             const ScaleMap& psi2) {
  return w.birth <= psi1(v.birth) && v.birth <= psi2(w.birth) && psi2(w.death) >= v.death &&
         w.death <= psi1(v.death);
}

bool alive(const DiagramEntry& entry, const ScaleMap& psi1, const ScaleMap& psi2) {
  return psi1(psi2(entry.birth)) <= entry.death;
}

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Kuhn's augmenting paths from every alive left vertex. Returns match_left
/// (right partner or npos) and records the alive left vertices left uncovered.
std::vector<std::size_t> kuhn(const Adjacency& adj, std::size_t right_count,
                              const std::vector<bool>& left_alive,
                              std::vector<std::size_t>& uncovered) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_left(adj.size(), npos);
  std::vector<std::size_t> match_right(right_count, npos);
  std::vector<std::size_t> seen(right_count, npos);

  std::function<bool(std::size_t, std::size_t)> augment = [&](std::size_t u, std::size_t stamp) {
    for (std::size_t r : adj[u]) {
      if (seen[r] == stamp) continue;
      seen[r] = stamp;
      if (match_right[r] == npos || augment(match_right[r], stamp)) {
        match_left[u] = r;
        match_right[r] = u;
        return true;
      }
    }
    return false;
  };

  for (std::size_t u = 0; u < adj.size(); ++u) {
    if (!left_alive[u]) continue;
    if (!augment(u, u)) uncovered.push_back(u);
  }
  return match_left;
}

}  // namespace

MatchResult match_diagrams(std::span<const DiagramEntry> v, std::span<const DiagramEntry> w,
                           const ScaleMap& psi1, const ScaleMap& psi2) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  Adjacency v_adj(v.size());
  Adjacency w_adj(w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (related(v[i], w[j], psi1, psi2)) {
        v_adj[i].push_back(j);
        w_adj[j].push_back(i);
      }
    }
  }
  std::vector<bool> v_alive(v.size());
  std::vector<bool> w_alive(w.size());
  for (std::size_t i = 0; i < v.size(); ++i) v_alive[i] = alive(v[i], psi1, psi2);
  for (std::size_t j = 0; j < w.size(); ++j) w_alive[j] = alive(w[j], psi2, psi1);

  MatchResult result;
  const std::vector<std::size_t> v_to_w = kuhn(v_adj, w.size(), v_alive, result.uncovered_v);
  const std::vector<std::size_t> w_to_v = kuhn(w_adj, v.size(), w_alive, result.uncovered_w);
  result.ok = result.uncovered_v.empty() && result.uncovered_w.empty();

  // Union of both matchings as a directed graph on V + W (V vertex k is k,
  // W vertex k is v.size() + k). Every vertex has in- and out-degree <= 1.
  const std::size_t total = v.size() + w.size();
  std::vector<std::size_t> next(total, npos);
  std::vector<bool> has_in(total, false);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v_to_w[i] == npos) continue;
    next[i] = v.size() + v_to_w[i];
    has_in[next[i]] = true;
  }
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w_to_v[j] == npos) continue;
    next[v.size() + j] = w_to_v[j];
    has_in[w_to_v[j]] = true;
  }

  std::vector<bool> visited(total, false);
  std::vector<std::size_t> v_partner(v.size(), npos);
  auto take = [&](std::size_t a, std::size_t b) {
    if (a < v.size()) {
      v_partner[a] = b - v.size();
    } else {
      v_partner[b] = a - v.size();
    }
  };
  auto walk = [&](std::size_t start) {
    bool pick = true;
    std::size_t cur = start;
    while (!visited[cur]) {
      visited[cur] = true;
      const std::size_t nxt = next[cur];
      if (nxt == npos) break;
      if (pick) take(cur, nxt);
      pick = !pick;
      cur = nxt;
    }
  };
  for (std::size_t x = 0; x < total; ++x) {
    if (!has_in[x] && !visited[x]) walk(x);
  }
  for (std::size_t x = 0; x < total; ++x) {
    if (!visited[x]) walk(x);  // remaining components are cycles of even length
  }

  std::vector<bool> w_used(w.size(), false);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v_partner[i] == npos) {
      result.matching.unmatched_v.push_back(i);
    } else {
      result.matching.pairs.emplace_back(i, v_partner[i]);
      w_used[v_partner[i]] = true;
    }
  }
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!w_used[j]) result.matching.unmatched_w.push_back(j);
  }
  return result;
}

std::size_t rank_at(std::span<const DiagramEntry> entries, double s, double t) {
  if (s > t) throw InputError("rank_at: s must not exceed t");
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [&](const DiagramEntry& e) { return e.birth < s && e.death >= t; }));
}

std::string RankViolation::describe() const {
  std::ostringstream os;
  os << "H" << dim << " inequality " << inequality << " fails at s=" << format_real(s)
     << ", t=" << format_real(t) << ": " << lhs << " > " << rhs;
  return os.str();
}

bool InterleavingReport::passed() const {
  return std::all_of(dimensions.begin(), dimensions.end(),
                     [](const DimensionReport& d) { return d.passed(); });
}

std::string InterleavingReport::summary() const {
  std::ostringstream os;
  for (const DimensionReport& d : dimensions) {
    os << "H" << d.dim << ": " << (d.passed() ? "ok" : "FAILED") << " ("
       << d.violations.size() << " rank violations, "
       << d.matching.uncovered_v.size() + d.matching.uncovered_w.size()
       << " uncovered alive entries)\n";
    for (std::size_t k = 0; k < d.violations.size() && k < 5; ++k) {
      os << "  " << d.violations[k].describe() << "\n";
    }
  }
  return os.str();
}

namespace {

/// Sorted deaths of the entries born strictly before s, for repeated rank queries.
class RankIndex {
 public:
  explicit RankIndex(std::vector<DiagramEntry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const DiagramEntry& a, const DiagramEntry& b) { return a.birth < b.birth; });
  }

  void prepare(double s) {
    if (s == prepared_) return;
    prepared_ = s;
    deaths_.clear();
    for (const DiagramEntry& e : entries_) {
      if (!(e.birth < s)) break;
      deaths_.push_back(e.death);
    }
    std::sort(deaths_.begin(), deaths_.end());
  }

  std::size_t count_from(double t) const {
    return static_cast<std::size_t>(deaths_.end() -
                                    std::lower_bound(deaths_.begin(), deaths_.end(), t));
  }

 private:
  std::vector<DiagramEntry> entries_;
  std::vector<double> deaths_;
  double prepared_ = std::nan("");
};

std::vector<double> candidate_scales(std::span<const DiagramEntry> v,
                                     std::span<const DiagramEntry> w, const ScaleMap& psi) {
  std::vector<double> base{0.0};
  auto add = [&](double x) {
    if (!std::isfinite(x)) return;
    base.push_back(x);
    base.push_back(psi(x));
    base.push_back(psi.inverse(x));
  };
  for (const DiagramEntry& e : v) {
    add(e.birth);
    add(e.death);
  }
  for (const DiagramEntry& e : w) {
    add(e.birth);
    add(e.death);
  }
  if (std::isfinite(psi.R)) add(psi.R);
  if (psi.threshold) add(*psi.threshold);
  std::vector<double> finite;
  for (double x : base) {
    if (std::isfinite(x) && x >= 0.0) finite.push_back(x);
  }
  std::sort(finite.begin(), finite.end());
  finite.erase(std::unique(finite.begin(), finite.end()), finite.end());

  std::vector<double> out;
  out.reserve(2 * finite.size() + 2);
  for (std::size_t k = 0; k < finite.size(); ++k) {
    out.push_back(finite[k]);
    if (k + 1 < finite.size()) out.push_back(finite[k] + (finite[k + 1] - finite[k]) / 2);
  }
  out.push_back(finite.back() + 1.0 + std::abs(finite.back()));
  out.push_back(kInfinity);
  return out;
}

}  // namespace

InterleavingReport verify_interleaving(const PersistenceDiagram& v, const PersistenceDiagram& w,
                                       const ScaleMap& psi) {
  InterleavingReport report;
  const std::size_t top = std::max(v.top_dimension(), w.top_dimension());
  for (std::size_t dim = 0; dim <= top; ++dim) {
    const std::vector<DiagramEntry> ve = v.in_dimension(dim);
    const std::vector<DiagramEntry> we = w.in_dimension(dim);
    DimensionReport d;
    d.dim = dim;
    const std::vector<double> scales = candidate_scales(ve, we, psi);
    RankIndex v_rank(ve);
    RankIndex w_rank(we);
    RankIndex w_rank_shifted(we);
    for (double s : scales) {
      v_rank.prepare(s);
      w_rank.prepare(s);
      w_rank_shifted.prepare(psi(s));
      for (double t : scales) {
        if (t < s) continue;
        const std::size_t rv = v_rank.count_from(t);
        const std::size_t lhs1 = w_rank.count_from(psi(t));
        if (lhs1 > rv) d.violations.push_back({dim, 1, s, t, lhs1, rv});
        if (psi(s) <= t) {
          const std::size_t rhs2 = w_rank_shifted.count_from(t);
          if (rv > rhs2) d.violations.push_back({dim, 2, s, t, rv, rhs2});
        }
      }
    }
    d.matching = match_diagrams(ve, we, psi, ScaleMap::identity());
    report.dimensions.push_back(std::move(d));
  }
  return report;
}

}  // namespace sparse_rips
