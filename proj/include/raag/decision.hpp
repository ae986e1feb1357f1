#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "raag/certificate.hpp"
#include "raag/classify.hpp"
#include "raag/constructions.hpp"
#include "raag/double.hpp"
#include "raag/embedding.hpp"
#include "raag/graph.hpp"

namespace raag {

enum class Verdict { yes, no, unknown };

enum class Provenance {
  linear_forest_criterion,
  path_cycle_table,
  obstruction,
  double_sequence,
  subdivision,
  budget_exhausted,
  open_region,
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::linear_forest_criterion: return "linear-forest-criterion";
    case Provenance::path_cycle_table: return "path-cycle-table";
    case Provenance::obstruction: return "obstruction";
    case Provenance::double_sequence: return "double-sequence";
    case Provenance::subdivision: return "subdivision";
    case Provenance::budget_exhausted: return "budget-exhausted";
    case Provenance::open_region: return "open-region";
  }
  return "?";
}

enum class Family { path, cycle };

inline const char* to_string(Family f) { return f == Family::path ? "path" : "cycle"; }

struct Budgets {
  std::uint64_t solver = kDefaultSolverBudget;
  /// Largest induced forest tried by the obstruction search; 0 means min(|lhs|, 8).
  std::size_t forest_cap = 0;
  std::size_t double_depth = 4;
  std::size_t vertex_cap = 64;
};

/// A closed-form answer for paths and cycles, with the fact it rests on.
struct TableEntry {
  Family lhs_family = Family::path;
  std::size_t m = 0;
  Family rhs_family = Family::path;
  std::size_t n = 0;
  std::string clause;
};

/// An induced linear forest of the left-hand side that is not a full subgraph
/// of the right-hand side. Since linear forests have the full-subgraph
/// property, this refutes the embedding.
struct ForestObstruction {
  Graph forest;
  EmbeddingWitness witness_in_lhs;
  NonEmbedReport nonembed_in_rhs;
};

using Obstruction = std::variant<ForestObstruction, TableEntry>;

struct BudgetReport {
  Budgets budgets;
  bool solver_exhausted = false;
  std::vector<std::string> notes;
};

using Evidence = std::variant<std::monostate, Certificate, Obstruction, BudgetReport, TableEntry>;

struct Decision {
  Verdict verdict = Verdict::unknown;
  Provenance provenance = Provenance::budget_exhausted;
  std::string citation;
  Evidence evidence;
  /// Doubling depth of the certificate, when it came from the double-sequence search.
  std::optional<std::size_t> depth;
};

// ---------------------------------------------------------------------------
// Paths and cycles

/// Embeddability of G(lhs) in G(rhs) for lhs, rhs each a path P_k (k >= 1)
/// or a cycle C_k (k >= 3), as far as it is known in closed form.
inline Decision decide_path_cycle(Family lf, std::size_t m, Family rf, std::size_t n) {
  auto check = [](Family f, std::size_t k) {
    if (f == Family::path ? k < 1 : k < 3)
      throw std::invalid_argument(std::string("invalid ") + to_string(f) + " order " + std::to_string(k));
  };
  check(lf, m);
  check(rf, n);

  Decision d;
  d.provenance = Provenance::path_cycle_table;
  auto answer = [&](bool yes, std::string clause) {
    d.verdict = yes ? Verdict::yes : Verdict::no;
    d.citation = std::move(clause);
  };
  if (lf == Family::path && rf == Family::path) {
    answer(m <= n, "paths: P_m <= P_n iff m <= n (linear-forest criterion)");
  } else if (lf == Family::cycle && rf == Family::cycle) {
    answer(m <= n, "cycles: yes iff m <= n (subdivision; P_{m-1} obstruction)");
  } else if (lf == Family::path) {
    answer(m + 1 <= n, "path into cycle: P_m <= C_n iff m+1 <= n (linear-forest criterion)");
  } else if (m == 3) {
    answer(n >= 2, "C_3 into paths: G(C_3) = F_3 embeds in F_2 = G(P_2)");
  } else if (m == 4) {
    answer(n >= 3, "C_4 into paths: double of P_3^c along its isolated vertex; G(P_2) = F_2 has no Z^2");
  } else if (n + 1 < m) {
    answer(false, "cycle into path: P_{m-1} <= C_m forces m-1 <= n");
  } else if (m == 5 && n == 4) {
    answer(false, "Droms: G(C_5) does not embed in G(P_4)");
  } else if (n >= 2 * m - 2) {
    answer(true, "Lee-Lee: G(C_m) embeds in G(P_n) when 2m-2 <= n");
  } else {
    d.verdict = Verdict::unknown;
    d.provenance = Provenance::open_region;
    d.citation = "open: m-1 <= n < 2m-2 for cycles into paths is not settled";
  }
  TableEntry entry{lf, m, rf, n, d.citation};
  if (d.verdict == Verdict::no)
    d.evidence = Obstruction{entry};
  else
    d.evidence = entry;
  return d;
}

/// Path or cycle family and order of g, if g is one.
inline std::optional<std::pair<Family, std::size_t>> path_cycle_kind(const Graph& g) {
  if (auto k = path_order(g)) return std::pair{Family::path, *k};
  if (auto k = cycle_order(g)) return std::pair{Family::cycle, *k};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Obstruction search

struct ObstructionSearch {
  std::optional<ForestObstruction> obstruction;
  /// Some solver call ran out of budget, so absence of a result is weaker.
  bool exhausted = false;
  std::size_t forests_tested = 0;
};

/// Looks for an induced linear forest of lhs with at most `size_cap` vertices
/// that is not a full subgraph of rhs. Larger forests are tried first; forests
/// are deduplicated by their multiset of path orders.
inline ObstructionSearch obstruction_search(const Graph& lhs, const Graph& rhs, std::size_t size_cap,
                                            std::uint64_t solver_budget = kDefaultSolverBudget) {
  ObstructionSearch out;
  std::vector<std::vector<std::size_t>> seen;
  const std::size_t n = lhs.order();
  for (std::size_t k = std::min(size_cap, n); k >= 1; --k) {
    // Combinations of k vertices in lexicographic order.
    std::vector<Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      auto sub = induced(lhs, pick);
      auto lf = linear_forest(sub.graph);
      if (auto* dec = std::get_if<LinearForestDecomposition>(&lf);
          dec && std::find(seen.begin(), seen.end(), dec->path_lengths) == seen.end()) {
        seen.push_back(dec->path_lengths);
        ++out.forests_tested;
        auto s = find_full_embedding(sub.graph, rhs, solver_budget);
        if (s.absent()) {
          out.obstruction = ForestObstruction{sub.graph, EmbeddingWitness{sub.graph, lhs, sub.original},
                                              non_embed_report(sub.graph, rhs, s)};
          return out;
        }
        out.exhausted |= s.exhausted();
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

/// Re-checks an obstruction: the forest is a linear forest, sits in lhs as a
/// full subgraph, and an exact search confirms it is absent from rhs.
inline bool verify_obstruction(const ForestObstruction& o, const Graph& lhs, const Graph& rhs,
                               std::uint64_t solver_budget = kDefaultSolverBudget) {
  if (!is_linear_forest(o.forest)) return false;
  if (!(o.witness_in_lhs.source == o.forest) || !(o.witness_in_lhs.target == lhs)) return false;
  if (defect(o.witness_in_lhs)) return false;
  if (!o.nonembed_in_rhs.exhaustive || !(o.nonembed_in_rhs.host == rhs)) return false;
  return find_full_embedding(o.forest, rhs, solver_budget).absent();
}

// ---------------------------------------------------------------------------
// Double-sequence search

struct DoubleSearch {
  std::optional<Certificate> certificate;
  std::size_t depth = 0;
  std::size_t graphs_explored = 0;
  bool exhausted = false;
};

/// Breadth-first search over iterated doubles of complement(rhs), looking for
/// one that contains complement(lhs) as a full subgraph. Doubling vertices are
/// tried in ascending order; graphs isomorphic to one already queued are
/// dropped. Sound but not complete at a fixed depth.
inline DoubleSearch double_sequence_search(const Graph& lhs, const Graph& rhs, std::size_t depth,
                                           std::size_t vertex_cap,
                                           std::uint64_t solver_budget = kDefaultSolverBudget) {
  struct Node {
    Graph graph;
    std::size_t parent;
    Vertex vertex;
    std::size_t depth;
  };
  DoubleSearch out;
  const Graph pattern = complement(lhs);
  std::vector<Node> nodes{{complement(rhs), 0, 0, 0}};

  using Key = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;
  auto key_of = [](const Graph& g) {
    std::vector<std::size_t> degs(g.order());
    for (Vertex v = 0; v < g.order(); ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    return Key{g.order(), g.edge_count(), std::move(degs)};
  };
  std::map<Key, std::vector<std::size_t>> buckets;
  buckets[key_of(nodes[0].graph)].push_back(0);

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ++out.graphs_explored;
    auto s = find_full_embedding(pattern, nodes[i].graph, solver_budget);
    if (s.found()) {
      std::vector<std::size_t> chain_nodes;
      for (std::size_t j = i; j != 0; j = nodes[j].parent) chain_nodes.push_back(j);
      ChainBuilder chain(Convention::G, lhs);
      if (chain_nodes.empty())
        chain.full(nodes[i].graph, s.witness->map);
      else
        chain.full_unless_identity(nodes[i].graph, s.witness->map);
      for (std::size_t j : chain_nodes) chain.collapse(nodes[nodes[j].parent].graph, nodes[j].vertex);
      out.certificate = std::move(chain).finish();
      out.depth = nodes[i].depth;
      return out;
    }
    out.exhausted |= s.exhausted();
    if (nodes[i].depth >= depth) continue;
    const Graph g = nodes[i].graph;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (canonical_double_vertex(g, v) != v) continue;
      auto dbl = double_along_star(g, v);
      if (dbl.graph.order() == g.order() || dbl.graph.order() > vertex_cap) continue;
      auto& bucket = buckets[key_of(dbl.graph)];
      bool duplicate = false;
      for (std::size_t j : bucket) {
        auto iso = find_isomorphism(dbl.graph, nodes[j].graph, solver_budget);
        out.exhausted |= iso.exhausted();
        if (iso.found()) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      bucket.push_back(nodes.size());
      nodes.push_back({std::move(dbl.graph), i, v, nodes[i].depth + 1});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subdivision route for cycles

/// G-convention certificate for C_m into C_n (m <= n) by repeated subdivision,
/// relabelled onto the given rhs.
inline Certificate cycle_subdivision_certificate(const Graph& lhs, const Graph& rhs) {
  auto lm = cycle_order(lhs), rn = cycle_order(rhs);
  if (!lm || !rn || *lm > *rn) throw std::invalid_argument("cycle_subdivision_certificate: need C_m, C_n, m <= n");
  ChainBuilder chain(Convention::G, lhs);
  Graph stage = lhs;
  Vertex a = 0, b = lhs.neighbors(0).front();
  for (std::size_t k = *lm; k < *rn; ++k) {
    auto sub = append_subdivision(chain, stage, {a, b});
    stage = std::move(sub.graph);
    b = sub.new_vertex;
  }
  auto iso = find_isomorphism(stage, rhs);
  if (!iso.found()) throw std::logic_error("subdivided cycle is not isomorphic to the target");
  chain.full(complement(rhs), iso.witness->map);
  return std::move(chain).finish();
}

// ---------------------------------------------------------------------------
// The decision pipeline

/// Decides G(lhs) <= G(rhs) as far as the available rules reach.
///
/// Order: linear-forest criterion, path/cycle table, direct full embedding,
/// obstruction search, double-sequence search. A yes always carries a
/// certificate that validates, a no an obstruction that verifies; anything
/// else is unknown together with the budgets used.
inline Decision decide(const Graph& lhs, const Graph& rhs, const Budgets& budgets = {}) {
  if (budgets.solver == 0 || budgets.vertex_cap == 0)
    throw std::invalid_argument("decide: budgets must be positive");
  const std::size_t forest_cap = budgets.forest_cap ? budgets.forest_cap : std::min<std::size_t>(lhs.order(), 8);
  BudgetReport report{budgets, false, {}};
  auto unknown = [&](std::string why) {
    report.notes.push_back(std::move(why));
    Decision d;
    d.verdict = Verdict::unknown;
    d.provenance = Provenance::budget_exhausted;
    d.citation = "no rule settled the question within the budgets";
    d.evidence = report;
    return d;
  };

  if (is_linear_forest(lhs)) {
    auto s = find_full_embedding(lhs, rhs, budgets.solver);
    Decision d;
    d.provenance = Provenance::linear_forest_criterion;
    d.citation = "linear forests have the full-subgraph property";
    if (s.found()) {
      d.verdict = Verdict::yes;
      d.evidence = full_embedding_certificate(*s.witness);
      return d;
    }
    if (s.absent()) {
      VertexMap id(lhs.order());
      for (Vertex x = 0; x < id.size(); ++x) id[x] = x;
      d.verdict = Verdict::no;
      d.evidence = Obstruction{ForestObstruction{lhs, {lhs, lhs, id}, non_embed_report(lhs, rhs, s)}};
      return d;
    }
    report.solver_exhausted = true;
    return unknown("full-subgraph search for the linear forest ran out of budget");
  }

  auto lk = path_cycle_kind(lhs), rk = path_cycle_kind(rhs);
  if (lk && rk) {
    auto t = decide_path_cycle(lk->first, lk->second, rk->first, rk->second);
    if (t.verdict != Verdict::yes) return t;
    if (lk->first == Family::cycle && rk->first == Family::cycle) {
      t.provenance = Provenance::subdivision;
      t.evidence = cycle_subdivision_certificate(lhs, rhs);
      return t;
    }
    auto ds = double_sequence_search(lhs, rhs, budgets.double_depth, budgets.vertex_cap, budgets.solver);
    if (ds.certificate) {
      t.provenance = Provenance::double_sequence;
      t.evidence = std::move(*ds.certificate);
      t.depth = ds.depth;
      return t;
    }
    report.solver_exhausted |= ds.exhausted;
    return unknown("known embedding (" + t.citation + ") but no certificate found within the doubling budgets");
  }

  auto direct = find_full_embedding(lhs, rhs, budgets.solver);
  if (direct.found()) {
    Decision d;
    d.verdict = Verdict::yes;
    d.provenance = Provenance::double_sequence;
    d.citation = "full subgraph (doubling depth 0)";
    d.evidence = full_embedding_certificate(*direct.witness);
    d.depth = 0;
    return d;
  }
  report.solver_exhausted |= direct.exhausted();

  auto obs = obstruction_search(lhs, rhs, forest_cap, budgets.solver);
  if (obs.obstruction) {
    Decision d;
    d.verdict = Verdict::no;
    d.provenance = Provenance::obstruction;
    d.citation = "an induced linear forest of the source is not a full subgraph of the target";
    d.evidence = Obstruction{std::move(*obs.obstruction)};
    return d;
  }
  report.solver_exhausted |= obs.exhausted;

  auto ds = double_sequence_search(lhs, rhs, budgets.double_depth, budgets.vertex_cap, budgets.solver);
  if (ds.certificate) {
    Decision d;
    d.verdict = Verdict::yes;
    d.provenance = Provenance::double_sequence;
    d.citation = "full subgraph of an iterated double along stars";
    d.evidence = std::move(*ds.certificate);
    d.depth = ds.depth;
    return d;
  }
  report.solver_exhausted |= ds.exhausted;
  return unknown("no obstruction up to " + std::to_string(forest_cap) + " vertices and no certificate up to depth " +
                 std::to_string(budgets.double_depth));
}

/// Checks the evidence a decision carries against its inputs.
inline bool evidence_holds(const Decision& d, const Graph& lhs, const Graph& rhs,
                           std::uint64_t solver_budget = kDefaultSolverBudget) {
  switch (d.verdict) {
    case Verdict::yes: {
      const auto* c = std::get_if<Certificate>(&d.evidence);
      return c && c->convention == Convention::G && c->lhs == lhs && c->rhs == rhs && validate(*c).ok;
    }
    case Verdict::no: {
      const auto* o = std::get_if<Obstruction>(&d.evidence);
      if (!o) return false;
      if (const auto* f = std::get_if<ForestObstruction>(o)) return verify_obstruction(*f, lhs, rhs, solver_budget);
      const auto& t = std::get<TableEntry>(*o);
      auto lk = path_cycle_kind(lhs), rk = path_cycle_kind(rhs);
      return lk && rk && lk->first == t.lhs_family && lk->second == t.m && rk->first == t.rhs_family &&
             rk->second == t.n && decide_path_cycle(t.lhs_family, t.m, t.rhs_family, t.n).verdict == Verdict::no;
    }
    case Verdict::unknown: return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// K_r(2) and mapping class groups

struct McgCriterion {
  bool embeds = false;
  /// g + floor((g+n)/2) - 1: the largest r for which A(K_r(2)) embeds.
  long long bound = 0;
  Graph kr2;
  /// Proper colouring of kr2 with r colours: vertex 2i and 2i+1 get colour i.
  std::vector<std::size_t> colouring;
  std::size_t chromatic_number = 0;
};

/// Whether A(K_r(2)) embeds in the mapping class group of the genus-g surface
/// with n punctures (requires negative Euler characteristic 2 - 2g - n).
inline McgCriterion kr2_mcg_embeds(long long genus, long long punctures, long long r) {
  if (genus < 0 || punctures < 0 || r < 0) throw std::invalid_argument("mcg: arguments must be non-negative");
  if (2 - 2 * genus - punctures >= 0)
    throw std::invalid_argument("mcg: requires 2 - 2g - n < 0");
  McgCriterion out;
  out.bound = genus + (genus + punctures) / 2 - 1;
  out.embeds = r <= out.bound;
  out.kr2 = kr2_graph(static_cast<std::size_t>(r));
  out.colouring.resize(out.kr2.order());
  for (Vertex v = 0; v < out.kr2.order(); ++v) out.colouring[v] = v / 2;
  out.chromatic_number = static_cast<std::size_t>(r);
  return out;
}

}  // namespace raag
