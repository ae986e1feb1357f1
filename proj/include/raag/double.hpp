#pragma once

#include <vector>

#include "raag/embedding.hpp"
#include "raag/graph.hpp"

namespace raag {

/// The double of a graph along the star of one of its vertices.
///
/// Numbering: the base copy keeps 0..n-1; every vertex off the star gets a
/// duplicate, numbered n, n+1, ... in ascending order of the original.
struct DoubleResult {
  Graph graph;
  Vertex vertex = 0;
  VertexSet star;
  VertexMap base_injection;
  VertexMap copy_injection;

  friend bool operator==(const DoubleResult&, const DoubleResult&) = default;
};

inline DoubleResult double_along_star(const Graph& g, Vertex v) {
  DoubleResult out;
  out.vertex = v;
  out.star = local_structure(g, v).star;
  const std::size_t n = g.order();

  std::vector<bool> in_star(n, false);
  for (Vertex s : out.star) in_star[s] = true;
  out.base_injection.resize(n);
  out.copy_injection.resize(n);
  Vertex next = n;
  for (Vertex x = 0; x < n; ++x) {
    out.base_injection[x] = x;
    out.copy_injection[x] = in_star[x] ? x : next++;
  }

  out.graph = Graph(next);
  for (auto [a, b] : g.edges()) {
    out.graph.add_edge(a, b);
    out.graph.add_edge(out.copy_injection[a], out.copy_injection[b]);
  }
  return out;
}

/// Smallest vertex whose double is the same labelled graph as the double
/// along v. Vertices with equal stars always qualify.
inline Vertex canonical_double_vertex(const Graph& g, Vertex v) {
  const auto star = local_structure(g, v).star;
  Graph dv;
  bool built = false;
  for (Vertex w = 0; w < v; ++w) {
    auto sw = local_structure(g, w).star;
    if (sw == star) return w;
    if (sw.size() != star.size()) continue;
    if (!built) {
      dv = double_along_star(g, v).graph;
      built = true;
    }
    if (double_along_star(g, w).graph == dv) return w;
  }
  return v;
}

}  // namespace raag
