#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace raag {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertices of some graph.
using VertexSet = std::vector<Vertex>;

/// Finite simplicial graph on the vertices 0..order-1.
///
/// Adjacency is stored as a dense symmetric matrix; the graphs this library
/// works with stay below a few hundred vertices. Per-vertex labels are display
/// metadata and do not take part in equality.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t order) : order_(order), adj_(order * order, 0), degree_(order, 0) {}

  Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t order() const noexcept { return order_; }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u * order_ + v] != 0;
  }

  /// Unchecked adjacency lookup for inner loops.
  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u * order_ + v] != 0; }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return;
    adj_[u * order_ + v] = adj_[v * order_ + u] = 1;
    ++degree_[u];
    ++degree_[v];
    ++edge_count_;
  }

  void remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adjacent(u, v)) return;
    adj_[u * order_ + v] = adj_[v * order_ + u] = 0;
    --degree_[u];
    --degree_[v];
    --edge_count_;
  }

  void toggle_edge(Vertex u, Vertex v) {
    if (has_edge(u, v)) {
      remove_edge(u, v);
    } else {
      add_edge(u, v);
    }
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return degree_[v];
  }

  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t max_degree() const noexcept {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
  }

  VertexSet neighbors(Vertex v) const {
    check_vertex(v);
    VertexSet out;
    out.reserve(degree_[v]);
    for (Vertex w = 0; w < order_; ++w)
      if (adjacent(v, w)) out.push_back(w);
    return out;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order_; ++u)
      for (Vertex v = u + 1; v < order_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != order_)
      throw std::invalid_argument("label count does not match graph order");
    labels_ = std::move(labels);
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v >= order_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(order_));
  }

  std::size_t order_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::size_t> degree_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Named families

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// ---------------------------------------------------------------------------
// Graph algebra

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

/// Disjoint union; the vertices of b are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

inline Graph join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
  return out;
}

/// K_r(2): the complete r-partite graph with parts {2i, 2i+1}.
inline Graph kr2_graph(std::size_t r) {
  Graph g = complete_graph(2 * r);
  for (Vertex i = 0; i < r; ++i) g.remove_edge(2 * i, 2 * i + 1);
  return g;
}

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the ambient graph that became vertex i.
  VertexSet original;
};

/// Full subgraph on `vs`, relabelled by ascending original index.
inline InducedSubgraph induced(const Graph& g, VertexSet vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (Vertex v : vs)
    if (v >= g.order())
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(g.order()));
  Graph sub(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) sub.add_edge(i, j);
  return {std::move(sub), std::move(vs)};
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      Vertex x = comp[head];
      for (Vertex y = 0; y < g.order(); ++y) {
        if (!seen[y] && g.adjacent(x, y)) {
          seen[y] = true;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

struct JoinComponent {
  VertexSet vertices;
  Graph graph;
};

/// Splits g into its join-components: the connected components of the
/// complement, each with the full subgraph of g it induces.
inline std::vector<JoinComponent> join_decomposition(const Graph& g) {
  std::vector<JoinComponent> out;
  for (auto& comp : connected_components(complement(g))) {
    auto sub = induced(g, comp);
    out.push_back({std::move(sub.original), std::move(sub.graph)});
  }
  return out;
}

struct LocalStructure {
  std::size_t degree = 0;
  VertexSet link;
  VertexSet star;
};

inline LocalStructure local_structure(const Graph& g, Vertex v) {
  LocalStructure out;
  out.link = g.neighbors(v);
  out.degree = out.link.size();
  out.star = out.link;
  out.star.insert(std::lower_bound(out.star.begin(), out.star.end(), v), v);
  return out;
}

}  // namespace raag
