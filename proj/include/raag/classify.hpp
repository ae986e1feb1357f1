#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// Orders of the path components of a linear forest, ascending.
struct LinearForestDecomposition {
  std::vector<std::size_t> path_lengths;

  friend bool operator==(const LinearForestDecomposition&, const LinearForestDecomposition&) = default;
};

/// Why a graph is not a linear forest.
struct ForestRefusal {
  enum class Kind { high_degree_vertex, cycle };
  Kind kind = Kind::high_degree_vertex;
  /// The vertex of degree >= 3, or the cycle's vertices in cyclic order.
  VertexSet witness;
};

using LinearForestResult = std::variant<LinearForestDecomposition, ForestRefusal>;

inline LinearForestResult linear_forest(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 3) return ForestRefusal{ForestRefusal::Kind::high_degree_vertex, {v}};

  LinearForestDecomposition out;
  for (const auto& comp : connected_components(g)) {
    std::size_t edges = 0;
    for (Vertex v : comp) edges += g.degree(v);
    edges /= 2;
    if (edges + 1 == comp.size()) {
      out.path_lengths.push_back(comp.size());
      continue;
    }
    // Max degree two and connected with as many edges as vertices: a cycle.
    // Walk it from its smallest vertex towards the smaller neighbour.
    VertexSet cycle{comp.front()};
    Vertex prev = comp.front();
    Vertex cur = g.neighbors(prev).front();
    while (cur != comp.front()) {
      cycle.push_back(cur);
      auto nb = g.neighbors(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    return ForestRefusal{ForestRefusal::Kind::cycle, std::move(cycle)};
  }
  std::sort(out.path_lengths.begin(), out.path_lengths.end());
  return out;
}

inline bool is_linear_forest(const Graph& g) {
  return std::holds_alternative<LinearForestDecomposition>(linear_forest(g));
}

/// Checks that a refusal witness really refutes the linear-forest property.
inline bool refusal_holds(const Graph& g, const ForestRefusal& r) {
  if (r.kind == ForestRefusal::Kind::high_degree_vertex)
    return r.witness.size() == 1 && r.witness[0] < g.order() && g.degree(r.witness[0]) >= 3;
  if (r.witness.size() < 3) return false;
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    Vertex a = r.witness[i], b = r.witness[(i + 1) % r.witness.size()];
    if (a >= g.order() || b >= g.order() || !g.adjacent(a, b)) return false;
  }
  VertexSet sorted = r.witness;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

/// Order of g when g is the path P_n (n >= 1).
inline std::optional<std::size_t> path_order(const Graph& g) {
  if (g.order() == 0 || !is_connected(g) || g.edge_count() + 1 != g.order()) return std::nullopt;
  if (g.max_degree() > 2) return std::nullopt;
  return g.order();
}

/// Order of g when g is the cycle C_n (n >= 3).
inline std::optional<std::size_t> cycle_order(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return std::nullopt;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return std::nullopt;
  return g.order();
}

// ---------------------------------------------------------------------------
// Degree classes

struct DegreeClasses {
  /// by_degree[n] lists the vertices of degree n.
  std::vector<VertexSet> by_degree;
  /// Degree-3 vertices whose link has no edge.
  VertexSet v3_edgeless;
  /// Degree-3 vertices whose link is a triangle.
  VertexSet v3_complete;
  /// Degree-3 vertices whose link has at least one edge.
  VertexSet v3_star;

  const VertexSet& degree(std::size_t n) const {
    static const VertexSet empty;
    return n < by_degree.size() ? by_degree[n] : empty;
  }
};

inline std::size_t link_edge_count(const Graph& g, Vertex v) {
  auto link = g.neighbors(v);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < link.size(); ++i)
    for (std::size_t j = i + 1; j < link.size(); ++j)
      if (g.adjacent(link[i], link[j])) ++edges;
  return edges;
}

inline DegreeClasses degree_classes(const Graph& g) {
  DegreeClasses out;
  out.by_degree.resize(g.order() == 0 ? 1 : g.max_degree() + 1);
  for (Vertex v = 0; v < g.order(); ++v) {
    out.by_degree[g.degree(v)].push_back(v);
    if (g.degree(v) != 3) continue;
    std::size_t e = link_edge_count(g, v);
    if (e == 0) {
      out.v3_edgeless.push_back(v);
    } else {
      out.v3_star.push_back(v);
      if (e == 3) out.v3_complete.push_back(v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tree measures

struct TreeMeasures {
  bool is_tree = false;
  /// Sum over vertices of max(deg - 3, 0).
  std::size_t excess = 0;
  /// Every degree-3 vertex has only degree-2 neighbours (vacuous without any).
  bool condition_c = true;
  std::size_t max_degree = 0;
};

inline std::size_t tree_excess(const Graph& g) {
  std::size_t m = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 3) m += g.degree(v) - 3;
  return m;
}

inline bool is_tree(const Graph& g) {
  return g.order() > 0 && g.edge_count() + 1 == g.order() && is_connected(g);
}

inline TreeMeasures tree_measures(const Graph& g) {
  TreeMeasures out;
  out.is_tree = is_tree(g);
  out.excess = tree_excess(g);
  out.max_degree = g.max_degree();
  for (Vertex u = 0; u < g.order() && out.condition_c; ++u) {
    if (g.degree(u) != 3) continue;
    for (Vertex w : g.neighbors(u))
      if (g.degree(w) != 2) out.condition_c = false;
  }
  return out;
}

}  // namespace raag
