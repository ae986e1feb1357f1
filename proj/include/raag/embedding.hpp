#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

using VertexMap = std::vector<Vertex>;

inline constexpr std::uint64_t kDefaultSolverBudget = 10'000'000;

/// An injective vertex map exhibiting `source` as a full subgraph of `target`.
struct EmbeddingWitness {
  Graph source;
  Graph target;
  VertexMap map;

  friend bool operator==(const EmbeddingWitness&, const EmbeddingWitness&) = default;
};

/// Returns a reason when `map` is not a full embedding of source into target.
inline std::optional<std::string> full_embedding_defect(const Graph& source, const Graph& target,
                                                        const VertexMap& map) {
  if (map.size() != source.order())
    return "map has " + std::to_string(map.size()) + " entries for a source of order " +
           std::to_string(source.order());
  std::vector<bool> used(target.order(), false);
  for (Vertex x = 0; x < map.size(); ++x) {
    if (map[x] >= target.order())
      return "image of " + std::to_string(x) + " is outside the target";
    if (used[map[x]]) return "map is not injective at " + std::to_string(x);
    used[map[x]] = true;
  }
  for (Vertex x = 0; x < map.size(); ++x)
    for (Vertex y = x + 1; y < map.size(); ++y)
      if (source.adjacent(x, y) != target.adjacent(map[x], map[y]))
        return "adjacency of " + std::to_string(x) + "," + std::to_string(y) + " is not preserved";
  return std::nullopt;
}

inline bool is_full_embedding(const Graph& source, const Graph& target, const VertexMap& map) {
  return !full_embedding_defect(source, target, map);
}

inline std::optional<std::string> defect(const EmbeddingWitness& w) {
  return full_embedding_defect(w.source, w.target, w.map);
}

/// Lowers map entries until none can be replaced by a smaller unused target
/// vertex while staying a full embedding. The result is a fixed point: every
/// other full embedding reachable by changing one entry has a larger entry at
/// that position.
inline VertexMap normalize_embedding(const Graph& source, const Graph& target, VertexMap map) {
  std::vector<bool> used(target.order(), false);
  for (Vertex h : map) used[h] = true;
  auto fits = [&](Vertex x, Vertex h) {
    for (Vertex y = 0; y < map.size(); ++y)
      if (y != x && source.adjacent(x, y) != target.adjacent(h, map[y])) return false;
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex x = 0; x < map.size(); ++x) {
      for (Vertex h = 0; h < map[x]; ++h) {
        if (used[h] || !fits(x, h)) continue;
        used[map[x]] = false;
        used[h] = true;
        map[x] = h;
        changed = true;
        break;
      }
    }
  }
  return map;
}

/// First position whose entry could be lowered, if any.
inline std::optional<std::pair<Vertex, Vertex>> normal_form_violation(const Graph& source,
                                                                      const Graph& target,
                                                                      const VertexMap& map) {
  std::vector<bool> used(target.order(), false);
  for (Vertex h : map) used[h] = true;
  for (Vertex x = 0; x < map.size(); ++x) {
    for (Vertex h = 0; h < map[x]; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (Vertex y = 0; y < map.size() && ok; ++y)
        if (y != x && source.adjacent(x, y) != target.adjacent(h, map[y])) ok = false;
      if (ok) return std::pair{x, h};
    }
  }
  return std::nullopt;
}

enum class SearchStatus { found, absent, exhausted };

struct EmbeddingSearch {
  SearchStatus status = SearchStatus::absent;
  std::optional<EmbeddingWitness> witness;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return status == SearchStatus::found; }
  bool absent() const noexcept { return status == SearchStatus::absent; }
  bool exhausted() const noexcept { return status == SearchStatus::exhausted; }
};

namespace detail {

// Pattern vertices in search order: each next vertex is the one most
// constrained by those already placed, measured on the sparser of the pattern
// and its complement, ties broken by degree then index.
inline std::vector<Vertex> search_order(const Graph& p) {
  const std::size_t n = p.order();
  const bool dense = 4 * p.edge_count() > n * (n ? n - 1 : 0);
  auto rel = [&](Vertex a, Vertex b) { return p.adjacent(a, b) != dense; };
  std::vector<std::size_t> deg(n, 0);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      if (a != b && rel(a, b)) ++deg[a];
  std::vector<Vertex> order;
  std::vector<std::size_t> placed_links(n, 0);
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex a = 0; a < n; ++a) {
      if (placed[a]) continue;
      if (best == n || placed_links[a] > placed_links[best] ||
          (placed_links[a] == placed_links[best] && deg[a] > deg[best]))
        best = a;
    }
    placed[best] = true;
    order.push_back(best);
    for (Vertex a = 0; a < n; ++a)
      if (!placed[a] && rel(a, best)) ++placed_links[a];
  }
  return order;
}

}  // namespace detail

/// Exact search for a full (induced) embedding of `pattern` into `host`.
///
/// Backtracking over injective maps, pruned by degree and co-degree
/// compatibility and by adjacency consistency with the vertices already
/// mapped. `budget` bounds the number of candidate assignments tried; running
/// out yields `exhausted`, never `absent`. Output is deterministic.
inline EmbeddingSearch find_full_embedding(const Graph& pattern, const Graph& host,
                                           std::uint64_t budget = kDefaultSolverBudget) {
  EmbeddingSearch result;
  const std::size_t np = pattern.order();
  const std::size_t nh = host.order();
  if (np > nh) return result;
  if (np == 0) {
    result.status = SearchStatus::found;
    result.witness = EmbeddingWitness{pattern, host, {}};
    return result;
  }

  const auto order = detail::search_order(pattern);
  std::vector<std::vector<Vertex>> candidates(np);
  for (std::size_t i = 0; i < np; ++i) {
    Vertex p = order[i];
    std::size_t pd = pattern.degree(p), pc = np - 1 - pd;
    for (Vertex h = 0; h < nh; ++h) {
      std::size_t hd = host.degree(h), hc = nh - 1 - hd;
      if (hd >= pd && hc >= pc) candidates[i].push_back(h);
    }
    if (candidates[i].empty()) return result;
  }

  VertexMap map(np, nh);
  std::vector<bool> used(nh, false);
  std::vector<std::size_t> cursor(np, 0);
  std::size_t depth = 0;
  while (true) {
    Vertex p = order[depth];
    bool advanced = false;
    while (cursor[depth] < candidates[depth].size()) {
      Vertex h = candidates[depth][cursor[depth]++];
      if (used[h]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        Vertex q = order[j];
        if (pattern.adjacent(p, q) != host.adjacent(h, map[q])) ok = false;
      }
      if (!ok) continue;
      if (++result.nodes > budget) {
        result.status = SearchStatus::exhausted;
        return result;
      }
      map[p] = h;
      used[h] = true;
      advanced = true;
      break;
    }
    if (advanced) {
      if (depth + 1 == np) {
        result.status = SearchStatus::found;
        result.witness = EmbeddingWitness{pattern, host, map};
        return result;
      }
      ++depth;
      cursor[depth] = 0;
      continue;
    }
    if (depth == 0) return result;
    --depth;
    used[map[order[depth]]] = false;
  }
}

/// Isomorphism test as a full embedding between graphs of equal order.
inline EmbeddingSearch find_isomorphism(const Graph& a, const Graph& b,
                                        std::uint64_t budget = kDefaultSolverBudget) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return {};
  return find_full_embedding(a, b, budget);
}

inline bool is_isomorphic(const Graph& a, const Graph& b, std::uint64_t budget = kDefaultSolverBudget) {
  return find_isomorphism(a, b, budget).found();
}

}  // namespace raag
