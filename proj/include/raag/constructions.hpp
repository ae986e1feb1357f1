#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "raag/certificate.hpp"
#include "raag/classify.hpp"
#include "raag/double.hpp"
#include "raag/embedding.hpp"
#include "raag/graph.hpp"

namespace raag {

// ---------------------------------------------------------------------------
// Subdivision

struct Subdivision {
  Graph graph;
  Edge edge;
  /// Always the previous order: the new vertex is appended.
  Vertex new_vertex = 0;
};

inline Subdivision subdivide(const Graph& g, Edge e) {
  auto [a, b] = e;
  if (a >= g.order() || b >= g.order() || !g.adjacent(a, b))
    throw std::invalid_argument("subdivide: (" + std::to_string(a) + "," + std::to_string(b) +
                                ") is not an edge");
  Subdivision out{Graph(g.order() + 1), e, g.order()};
  for (auto [x, y] : g.edges())
    if (!((x == a && y == b) || (x == b && y == a))) out.graph.add_edge(x, y);
  out.graph.add_edge(a, out.new_vertex);
  out.graph.add_edge(out.new_vertex, b);
  return out;
}

/// Extends a G-convention chain whose current graph is complement(g) to
/// complement(subdivide(g, e)), through the double of the latter along the
/// star of the new vertex. Returns the subdivision.
inline Subdivision append_subdivision(ChainBuilder& chain, const Graph& g, Edge e) {
  auto sub = subdivide(g, e);
  Graph target = complement(sub.graph);
  auto dbl = double_along_star(target, sub.new_vertex);
  // The off-star vertices of the new vertex are exactly the endpoints of e;
  // sending the second endpoint to its copy realises complement(g).
  VertexMap map(g.order());
  for (Vertex x = 0; x < g.order(); ++x) map[x] = x;
  map[e.second] = dbl.copy_injection[e.second];
  chain.through_double(target, sub.new_vertex, std::move(map));
  return sub;
}

// ---------------------------------------------------------------------------
// (+/-) constructions

enum class Sign { plus, minus };

inline const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

struct PMMove {
  Sign sign = Sign::minus;
  Vertex u = 0;
  Vertex w1 = 0;
  Vertex w2 = 0;
  Vertex new_vertex = 0;

  friend bool operator==(const PMMove&, const PMMove&) = default;
};

struct PMResult {
  Graph graph;
  PMMove move;
};

/// Reroutes the edges [u,w1], [u,w2] through a new vertex v adjacent to u,
/// w1 and w2; the plus variant keeps [u,w2].
inline PMResult pm_construction(const Graph& g, Vertex u, Vertex w1, Vertex w2, Sign sign) {
  if (u >= g.order() || w1 >= g.order() || w2 >= g.order())
    throw std::invalid_argument("pm_construction: vertex out of range");
  if (w1 == w2) throw std::invalid_argument("pm_construction: w1 and w2 must differ");
  if (g.degree(u) < 2) throw std::invalid_argument("pm_construction: deg(u) must be at least 2");
  if (!g.adjacent(u, w1) || !g.adjacent(u, w2))
    throw std::invalid_argument("pm_construction: w1 and w2 must be neighbours of u");
  const Vertex v = g.order();
  PMResult out{Graph(g.order() + 1), {sign, u, w1, w2, v}};
  for (auto [x, y] : g.edges()) out.graph.add_edge(x, y);
  out.graph.remove_edge(u, w1);
  if (sign == Sign::minus) out.graph.remove_edge(u, w2);
  out.graph.add_edge(v, w1);
  out.graph.add_edge(v, u);
  out.graph.add_edge(v, w2);
  return out;
}

/// Extends a G-convention chain at complement(g) to complement(g_u^sign),
/// through the double along the star of the new vertex.
inline PMResult append_pm(ChainBuilder& chain, const Graph& g, Vertex u, Vertex w1, Vertex w2, Sign sign) {
  auto pm = pm_construction(g, u, w1, w2, sign);
  Graph target = complement(pm.graph);
  auto dbl = double_along_star(target, pm.move.new_vertex);
  VertexMap map(g.order());
  for (Vertex x = 0; x < g.order(); ++x) map[x] = x;
  map[u] = dbl.copy_injection[u];
  chain.through_double(target, pm.move.new_vertex, std::move(map));
  return pm;
}

// ---------------------------------------------------------------------------
// Tree flattening

/// Order of a universal-cover tree T with G(g) <= A(T) known to exist for a
/// connected g with k vertices: k * 2^(k-1). Returned as a constant only; the
/// tree itself is not constructed here.
inline std::uint64_t cover_tree_order_bound(std::size_t k) {
  if (k == 0 || k > 58) throw std::invalid_argument("cover_tree_order_bound: k out of range");
  return static_cast<std::uint64_t>(k) << (k - 1);
}

/// Upper bound on the order of a tree T of maximum degree <= 3 with
/// G(g) <= G(T), for g on k vertices: 2k - 4 when g is a tree of maximum
/// degree > 3 (realised by flatten_tree), k * 2^k - 4 otherwise.
inline std::uint64_t flat_tree_order_bound(const Graph& g) {
  const std::size_t k = g.order();
  if (is_tree(g) && g.max_degree() > 3) return 2 * k - 4;
  if (k == 0 || k > 57) throw std::invalid_argument("flat_tree_order_bound: order out of range");
  return (static_cast<std::uint64_t>(k) << k) - 4;
}

struct FlattenResult {
  Graph tree;
  /// G-convention certificate for the input tree into `tree`.
  Certificate certificate;
  std::vector<PMMove> moves;
};

/// Applies minus moves at vertices of degree >= 4 until the maximum degree is
/// at most three. Each move lowers the tree excess by exactly one.
inline FlattenResult flatten_tree(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("flatten_tree: input is not a tree");
  ChainBuilder chain(Convention::G, t);
  Graph cur = t;
  std::vector<PMMove> moves;
  while (cur.max_degree() >= 4) {
    Vertex u = 0;
    while (cur.degree(u) < 4) ++u;
    auto nb = cur.neighbors(u);
    auto pm = append_pm(chain, cur, u, nb[0], nb[1], Sign::minus);
    moves.push_back(pm.move);
    cur = std::move(pm.graph);
  }
  return {cur, std::move(chain).finish(), std::move(moves)};
}

// ---------------------------------------------------------------------------
// Counterexamples to the full-subgraph property

enum class CounterexampleRule {
  /// Maximum degree <= 2: disjoint cycles one longer than every component.
  disjoint_cycles,
  /// Minus move at a vertex of maximum degree >= 4.
  minus_at_high_degree,
  /// Maximum degree 3, every degree-3 link edgeless: plus move.
  plus_with_edgeless_links,
  /// Maximum degree 3, some degree-3 link has an edge: minus move there.
  minus_with_link_edge,
};

inline const char* to_string(CounterexampleRule r) {
  switch (r) {
    case CounterexampleRule::disjoint_cycles: return "disjoint-cycles";
    case CounterexampleRule::minus_at_high_degree: return "minus-at-high-degree";
    case CounterexampleRule::plus_with_edgeless_links: return "plus-with-edgeless-links";
    case CounterexampleRule::minus_with_link_edge: return "minus-with-link-edge";
  }
  return "?";
}

struct Counterexample {
  Graph gamma;
  /// G-convention certificate for the input into gamma.
  Certificate certificate;
  /// Exact search for the input as a full subgraph of gamma.
  NonEmbedReport non_embedding;
  CounterexampleRule rule = CounterexampleRule::disjoint_cycles;
  std::optional<PMMove> move;
};

namespace detail {

// Component vertices in path or cycle order, starting at an end (path) or at
// the smallest vertex (cycle). Assumes max degree <= 2.
inline VertexSet walk_component(const Graph& g, const VertexSet& comp) {
  Vertex start = comp.front();
  for (Vertex x : comp)
    if (g.degree(x) <= 1) {
      start = x;
      break;
    }
  VertexSet seq{start};
  std::vector<bool> seen(g.order(), false);
  seen[start] = true;
  for (Vertex cur = start;;) {
    Vertex next = g.order();
    for (Vertex y : g.neighbors(cur))
      if (!seen[y]) {
        next = y;
        break;
      }
    if (next == g.order()) break;
    seen[next] = true;
    seq.push_back(next);
    cur = next;
  }
  return seq;
}

inline Counterexample disjoint_cycles_counterexample(const Graph& g) {
  const auto comps = connected_components(g);
  std::size_t l = 0;
  for (const auto& c : comps) l = std::max(l, c.size());
  l += 1;

  // Stage graph: every path component becomes C_l, every cycle stays as is;
  // the cycles are then lengthened to C_l by subdivision.
  Graph stage;
  VertexMap map(g.order());
  std::vector<std::pair<Edge, std::size_t>> lengthen;  // (edge to subdivide, times)
  for (const auto& comp : comps) {
    auto seq = walk_component(g, comp);
    const bool cycle =
        std::all_of(comp.begin(), comp.end(), [&](Vertex x) { return g.degree(x) == 2; });
    std::size_t len = cycle ? comp.size() : l;
    Vertex base = stage.order();
    stage = disjoint_union(stage, cycle_graph(len));
    for (std::size_t i = 0; i < seq.size(); ++i) map[seq[i]] = base + i;
    if (cycle && len < l) lengthen.push_back({{base, base + 1}, l - len});
  }

  ChainBuilder chain(Convention::G, g);
  if (lengthen.empty())
    chain.full(complement(stage), map);
  else
    chain.full_unless_identity(complement(stage), map);
  for (auto [edge, times] : lengthen) {
    Edge e = edge;
    for (std::size_t k = 0; k < times; ++k) {
      auto sub = append_subdivision(chain, stage, e);
      stage = std::move(sub.graph);
      e = {e.first, sub.new_vertex};
    }
  }
  Counterexample out;
  out.gamma = stage;
  out.certificate = std::move(chain).finish();
  out.rule = CounterexampleRule::disjoint_cycles;
  return out;
}

}  // namespace detail

/// For g not a linear forest, builds gamma with G(g) <= G(gamma) certified and
/// g not a full subgraph of gamma. The non-embedding is re-checked by exact
/// search with the given budget; an inconclusive search is reported through
/// `non_embedding.exhaustive == false`, never hidden.
inline Counterexample counterexample(const Graph& g, std::uint64_t budget = kDefaultSolverBudget) {
  if (is_linear_forest(g)) throw std::invalid_argument("counterexample: input is a linear forest");

  Counterexample out;
  const std::size_t dmax = g.max_degree();
  if (dmax <= 2) {
    out = detail::disjoint_cycles_counterexample(g);
  } else {
    Vertex u = 0, w1 = 0, w2 = 0;
    Sign sign = Sign::minus;
    auto classes = degree_classes(g);
    if (dmax >= 4) {
      while (g.degree(u) != dmax) ++u;
      auto nb = g.neighbors(u);
      w1 = nb[0];
      w2 = nb[1];
      out.rule = CounterexampleRule::minus_at_high_degree;
    } else if (classes.v3_star.empty()) {
      // Prefer a degree-3 vertex with a neighbour of degree <= 2 as w2.
      sign = Sign::plus;
      out.rule = CounterexampleRule::plus_with_edgeless_links;
      bool chosen = false;
      for (Vertex x : classes.degree(3)) {
        auto nb = g.neighbors(x);
        for (Vertex y : nb) {
          if (g.degree(y) > 2) continue;
          u = x;
          w2 = y;
          w1 = nb[0] == y ? nb[1] : nb[0];
          chosen = true;
          break;
        }
        if (chosen) break;
      }
      if (!chosen) {
        u = classes.degree(3).front();
        auto nb = g.neighbors(u);
        w1 = nb[0];
        w2 = nb[1];
      }
    } else {
      // A complete link takes an adjacent pair; otherwise a non-adjacent one.
      out.rule = CounterexampleRule::minus_with_link_edge;
      u = classes.v3_star.front();
      auto nb = g.neighbors(u);
      const bool complete = link_edge_count(g, u) == 3;
      bool chosen = false;
      for (std::size_t i = 0; i < nb.size() && !chosen; ++i)
        for (std::size_t j = i + 1; j < nb.size() && !chosen; ++j)
          if (g.adjacent(nb[i], nb[j]) == complete) {
            w1 = nb[i];
            w2 = nb[j];
            chosen = true;
          }
    }
    ChainBuilder chain(Convention::G, g);
    auto pm = append_pm(chain, g, u, w1, w2, sign);
    out.gamma = pm.graph;
    out.move = pm.move;
    out.certificate = std::move(chain).finish();
  }

  auto search = find_full_embedding(g, out.gamma, budget);
  if (search.found())
    throw std::logic_error("counterexample: input embeds in the constructed graph");
  out.non_embedding = non_embed_report(g, out.gamma, search);
  return out;
}

// ---------------------------------------------------------------------------
// Retraction of full embeddings out of a double

/// Given a full embedding phi of the complement of a linear forest into the
/// double of gamma along the star of v, returns a full embedding of the same
/// graph into gamma.
inline EmbeddingWitness retract_full_embedding(const Graph& gamma, Vertex v, const DoubleResult& dbl,
                                               const EmbeddingWitness& phi) {
  const Graph& lambda = phi.source;
  const Graph lambda_c = complement(lambda);
  if (!is_linear_forest(lambda_c))
    throw std::invalid_argument("retract: source is not the complement of a linear forest");
  if (v >= gamma.order()) throw std::invalid_argument("retract: vertex out of range");
  if (!(double_along_star(gamma, v) == dbl))
    throw std::invalid_argument("retract: double is inconsistent with (gamma, v)");
  if (!(phi.target == dbl.graph)) throw std::invalid_argument("retract: phi does not target the double");
  if (auto d = defect(phi)) throw std::invalid_argument("retract: phi is invalid: " + *d);

  const std::size_t n = gamma.order();
  enum class Side { star, base, copy };
  std::vector<bool> in_star(n, false);
  for (Vertex s : dbl.star) in_star[s] = true;
  VertexMap original(dbl.graph.order());
  for (Vertex x = 0; x < n; ++x) {
    original[dbl.base_injection[x]] = x;
    original[dbl.copy_injection[x]] = x;
  }
  auto side = [&](Vertex d) { return d >= n ? Side::copy : in_star[d] ? Side::star : Side::base; };

  auto finish = [&](VertexMap map) {
    EmbeddingWitness w{lambda, gamma, std::move(map)};
    if (auto d = defect(w)) throw std::logic_error("retract produced an invalid witness: " + *d);
    return w;
  };
  auto project = [&] {
    VertexMap map(lambda.order());
    for (Vertex x = 0; x < map.size(); ++x) map[x] = original[phi.map[x]];
    return map;
  };

  bool any_base = false, any_copy = false;
  for (Vertex d : phi.map) {
    any_base |= side(d) == Side::base;
    any_copy |= side(d) == Side::copy;
  }
  if (!any_base || !any_copy) return finish(project());

  // All off-star vertices of the image lie in one join-component of lambda,
  // i.e. one path component of its complement.
  const auto comps = connected_components(lambda_c);
  std::vector<std::size_t> comp_of(lambda.order());
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (Vertex x : comps[i]) comp_of[x] = i;
  VertexSet off;  // lambda vertices with off-star images
  for (Vertex x = 0; x < lambda.order(); ++x)
    if (side(phi.map[x]) != Side::star) off.push_back(x);
  const std::size_t c1 = comp_of[off.front()];
  for (Vertex x : off)
    if (comp_of[x] != c1) throw std::logic_error("retract: off-star vertices span two join-components");
  if (off.size() != 2 && off.size() != 3) throw std::logic_error("retract: unexpected off-star count");
  for (Vertex d : phi.map)
    if (d == v) throw std::logic_error("retract: image contains the doubled vertex");

  VertexMap map = project();

  if (off.size() == 3) {
    // Two adjacent off-star vertices on one side, the third alone on the
    // other; the lone one is replaced by v.
    Vertex lone = off[0];
    for (Vertex x : off) {
      std::size_t same = 0;
      for (Vertex y : off) same += side(phi.map[y]) == side(phi.map[x]);
      if (same == 1) lone = x;
    }
    map[lone] = v;
    return finish(std::move(map));
  }

  // One off-star vertex on each side: moved is on the copy side, kept on the
  // base side.
  const Vertex moved = side(phi.map[off[0]]) == Side::copy ? off[0] : off[1];
  const Vertex kept = moved == off[0] ? off[1] : off[0];
  if (lambda_c.degree(moved) == 1) {
    map[moved] = v;
    return finish(std::move(map));
  }

  const Vertex moved_orig = original[phi.map[moved]];
  const Vertex kept_img = phi.map[kept];
  if (!gamma.adjacent(moved_orig, kept_img)) {
    map[moved] = moved_orig;
    return finish(std::move(map));
  }

  // The substitution {moved} -> {moved_orig, v} lengthens the complement path
  // of this join-component by one vertex; re-embed the path along the first
  // |component| vertices of the lengthened one.
  const VertexSet seq = detail::walk_component(lambda_c, comps[c1]);
  VertexSet images;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] != moved) {
      images.push_back(map[seq[i]]);
      continue;
    }
    const bool kept_next = i + 1 < seq.size() && seq[i + 1] == kept;
    if (kept_next) {
      images.push_back(moved_orig);
      images.push_back(v);
    } else {
      images.push_back(v);
      images.push_back(moved_orig);
    }
  }
  for (std::size_t i = 0; i < seq.size(); ++i) map[seq[i]] = images[i];
  return finish(std::move(map));
}

}  // namespace raag
