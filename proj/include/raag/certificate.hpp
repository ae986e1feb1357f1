#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "raag/double.hpp"
#include "raag/embedding.hpp"
#include "raag/graph.hpp"

namespace raag {

/// A(G): edges are commutations. G(G) = A(complement of G).
enum class Convention { A, G };

/// Step witnessing A(source) <= A(target) through a full subgraph.
///
/// The map must be in normal form (see normalize_embedding) so that a
/// certificate admits exactly one encoding of each embedding it uses.
struct FullStep {
  EmbeddingWitness witness;

  const Graph& source() const noexcept { return witness.source; }
  const Graph& target() const noexcept { return witness.target; }

  friend bool operator==(const FullStep&, const FullStep&) = default;
};

/// Step witnessing A(source) <= A(target) where source is identified, by the
/// bijection `iso`, with the double of target along the star of `vertex`.
///
/// `iso.target` holds the reconstructed double; `vertex` is the smallest
/// vertex of target whose double is that graph.
struct DoubleCollapseStep {
  Graph target;
  Vertex vertex = 0;
  EmbeddingWitness iso;

  const Graph& source() const noexcept { return iso.source; }

  friend bool operator==(const DoubleCollapseStep&, const DoubleCollapseStep&) = default;
};

using Step = std::variant<FullStep, DoubleCollapseStep>;

inline const Graph& step_source(const Step& s) {
  return std::visit([](const auto& x) -> const Graph& { return x.source(); }, s);
}

inline const Graph& step_target(const Step& s) {
  return std::visit(
      [](const auto& x) -> const Graph& {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, FullStep>)
          return x.target();
        else
          return x.target;
      },
      s);
}

/// Claim that the group on `lhs` embeds in the group on `rhs`, together with a
/// chain of steps in the A convention. For a G-convention claim the chain runs
/// from complement(lhs) to complement(rhs).
struct Certificate {
  Convention convention = Convention::G;
  Graph lhs;
  Graph rhs;
  std::vector<Step> steps;

  Graph chain_source() const { return convention == Convention::G ? complement(lhs) : lhs; }
  Graph chain_target() const { return convention == Convention::G ? complement(rhs) : rhs; }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Outcome of an exact non-embedding search.
struct NonEmbedReport {
  Graph pattern;
  Graph host;
  std::uint64_t search_nodes = 0;
  /// The search covered its whole tree and found nothing.
  bool exhaustive = false;
};

inline NonEmbedReport non_embed_report(const Graph& pattern, const Graph& host,
                                       const EmbeddingSearch& search) {
  return {pattern, host, search.nodes, search.absent()};
}

struct ValidationReport {
  bool ok = true;
  /// 1-based index of the earliest bad step; nullopt for a claim-level fault.
  std::optional<std::size_t> step;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

inline std::optional<std::string> step_defect(const Step& s) {
  if (const auto* full = std::get_if<FullStep>(&s)) {
    if (auto d = defect(full->witness)) return "witness is not a full embedding: " + *d;
    if (auto v = normal_form_violation(full->source(), full->target(), full->witness.map))
      return "map is not in normal form: entry " + std::to_string(v->first) + " can be lowered to " +
             std::to_string(v->second);
    return std::nullopt;
  }
  const auto& dc = std::get<DoubleCollapseStep>(s);
  if (dc.vertex >= dc.target.order()) return "double vertex is outside the target";
  if (canonical_double_vertex(dc.target, dc.vertex) != dc.vertex)
    return "double vertex is not the smallest vertex giving this double";
  auto dbl = double_along_star(dc.target, dc.vertex);
  if (!(dc.iso.target == dbl.graph)) return "stored double differs from the reconstructed double";
  if (dc.iso.source.order() != dbl.graph.order())
    return "iso is not a full embedding onto the reconstructed double: orders differ";
  if (auto d = full_embedding_defect(dc.iso.source, dbl.graph, dc.iso.map))
    return "iso is not a full embedding onto the reconstructed double: " + *d;
  return std::nullopt;
}

/// Mechanical check of every step and of the chain's composition.
///
/// This checks the graph-level hypotheses only. That a full subgraph induces
/// an embedding of groups, and that the group on a double embeds in the group
/// on the graph it doubles, are taken as known results.
inline ValidationReport validate(const Certificate& c) {
  const Graph first = c.chain_source();
  const Graph last = c.chain_target();
  const Graph* prev = &first;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const Step& s = c.steps[i];
    if (!(step_source(s) == *prev))
      return {false, i + 1,
              i == 0 ? "source does not match the claim" : "source does not match the previous target"};
    if (auto d = step_defect(s)) return {false, i + 1, *d};
    prev = &step_target(s);
  }
  if (!(*prev == last)) {
    if (c.steps.empty()) return {false, std::nullopt, "empty chain but the claim graphs differ"};
    return {false, c.steps.size(), "final target does not match the claim"};
  }
  return {};
}

/// Builds a certificate step by step, tracking the current graph of the chain.
class ChainBuilder {
 public:
  ChainBuilder(Convention convention, Graph lhs)
      : cert_{convention, std::move(lhs), Graph{}, {}}, current_(cert_.chain_source()) {}

  const Graph& current() const noexcept { return current_; }

  /// Appends a full-subgraph step along `map` (normalized here).
  void full(const Graph& target, VertexMap map) {
    if (auto d = full_embedding_defect(current_, target, map))
      throw std::logic_error("full step construction failed: " + *d);
    map = normalize_embedding(current_, target, std::move(map));
    cert_.steps.push_back(FullStep{EmbeddingWitness{current_, target, std::move(map)}});
    current_ = target;
  }

  /// As full(), but appends nothing for the identity map onto the current
  /// graph. Only for chains that go on with further steps.
  void full_unless_identity(const Graph& target, VertexMap map) {
    bool identity = target == current_ && map.size() == current_.order();
    for (Vertex x = 0; x < map.size() && identity; ++x) identity = map[x] == x;
    if (!identity) full(target, std::move(map));
  }

  /// Appends the pair of steps current <= D_v(target) -> target, where
  /// `into_double` maps the current graph into double_along_star(target, v).
  void through_double(const Graph& target, Vertex v, VertexMap into_double) {
    v = canonical_double_vertex(target, v);
    auto dbl = double_along_star(target, v);
    full(dbl.graph, std::move(into_double));
    VertexMap identity(dbl.graph.order());
    for (Vertex x = 0; x < identity.size(); ++x) identity[x] = x;
    cert_.steps.push_back(DoubleCollapseStep{target, v, EmbeddingWitness{dbl.graph, dbl.graph, identity}});
    current_ = target;
  }

  /// Appends a single collapse step from the double of `target` whose graph is
  /// the current graph.
  void collapse(const Graph& target, Vertex v) {
    v = canonical_double_vertex(target, v);
    auto dbl = double_along_star(target, v);
    if (!(dbl.graph == current_)) throw std::logic_error("collapse from a graph that is not the double");
    VertexMap identity(dbl.graph.order());
    for (Vertex x = 0; x < identity.size(); ++x) identity[x] = x;
    cert_.steps.push_back(DoubleCollapseStep{target, v, EmbeddingWitness{current_, dbl.graph, identity}});
    current_ = target;
  }

  /// Closes the chain; the claim's right-hand side is read off the current graph.
  Certificate finish() && {
    cert_.rhs = cert_.convention == Convention::G ? complement(current_) : current_;
    if (auto r = validate(cert_); !r)
      throw std::logic_error("constructed certificate does not validate: " + r.reason);
    return std::move(cert_);
  }

 private:
  Certificate cert_;
  Graph current_;
};

/// Certificate with a single full step, from a full embedding lhs <= rhs.
/// In the G convention the same map embeds the complements.
inline Certificate full_embedding_certificate(const EmbeddingWitness& w, Convention convention = Convention::G) {
  ChainBuilder b(convention, w.source);
  b.full(convention == Convention::G ? complement(w.target) : w.target, w.map);
  return std::move(b).finish();
}

/// Rewrites a G-convention certificate as the equivalent A-convention claim
/// on the complements; the chain is unchanged.
inline Certificate to_a_convention(Certificate c) {
  if (c.convention == Convention::G) {
    c.lhs = complement(c.lhs);
    c.rhs = complement(c.rhs);
    c.convention = Convention::A;
  }
  return c;
}

}  // namespace raag
