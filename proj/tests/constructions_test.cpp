#include <gtest/gtest.h>

#include "raag/constructions.hpp"
#include "support/enumerate.hpp"

using namespace raag;
using raag::testing::canonical_form;

TEST(Subdivide, TriangleBecomesSquare) {
  auto s = subdivide(cycle_graph(3), {0, 1});
  EXPECT_EQ(s.new_vertex, 3u);
  EXPECT_EQ(canonical_form(s.graph), canonical_form(cycle_graph(4)));
  EXPECT_FALSE(s.graph.has_edge(0, 1));
}

TEST(Subdivide, EdgeBecomesPath) {
  auto s = subdivide(path_graph(2), {0, 1});
  EXPECT_EQ(canonical_form(s.graph), canonical_form(path_graph(3)));
}

TEST(Subdivide, RejectsNonEdges) { EXPECT_THROW(subdivide(path_graph(3), {0, 2}), std::invalid_argument); }

TEST(Subdivide, CycleChainsCertify) {
  for (std::size_t m = 3; m <= 6; ++m)
    for (std::size_t n = m; n <= 9; ++n) {
      ChainBuilder chain(Convention::G, cycle_graph(m));
      Graph g = cycle_graph(m);
      Edge e{0, 1};
      for (std::size_t k = m; k < n; ++k) {
        auto s = append_subdivision(chain, g, e);
        g = s.graph;
        e = {0, s.new_vertex};
      }
      auto c = std::move(chain).finish();
      EXPECT_TRUE(validate(c).ok);
      EXPECT_EQ(canonical_form(g), canonical_form(cycle_graph(n)));
      EXPECT_EQ(c.rhs, g);
    }
}

TEST(Subdivide, CertifiesOnEveryEdgeOfSmallGraphs) {
  auto graphs = raag::testing::graphs_up_to_iso(5);
  for (const auto& level : graphs)
    for (const auto& g : level)
      for (auto e : g.edges()) {
        ChainBuilder chain(Convention::G, g);
        auto s = append_subdivision(chain, g, e);
        auto c = std::move(chain).finish();
        EXPECT_TRUE(validate(c).ok);
        EXPECT_EQ(c.rhs, s.graph);
      }
}

TEST(PM, MinusOnK14) {
  auto r = pm_construction(star_graph(4), 0, 1, 2, Sign::minus);
  EXPECT_EQ(r.graph.order(), 6u);
  EXPECT_TRUE(is_tree(r.graph));
  EXPECT_EQ(r.graph.degree(0), 3u);
  EXPECT_EQ(r.graph.degree(r.move.new_vertex), 3u);
  EXPECT_EQ(r.graph.degree(1), 1u);
  EXPECT_EQ(r.graph.degree(2), 1u);
}

TEST(PM, PlusOnK4) {
  auto r = pm_construction(complete_graph(4), 0, 1, 2, Sign::plus);
  EXPECT_EQ(r.graph.order(), 5u);
  EXPECT_EQ(r.graph.degree(2), 4u);
  EXPECT_EQ(r.graph.degree(4), 3u);
  EXPECT_EQ(r.graph.degree(0), 3u);
}

TEST(PM, Preconditions) {
  EXPECT_THROW(pm_construction(path_graph(3), 0, 1, 2, Sign::minus), std::invalid_argument);
  EXPECT_THROW(pm_construction(star_graph(3), 0, 1, 1, Sign::minus), std::invalid_argument);
  EXPECT_THROW(pm_construction(star_graph(3), 0, 1, 9, Sign::plus), std::invalid_argument);
}

TEST(PM, ChainsCertifyOnSmallGraphs) {
  auto graphs = raag::testing::graphs_up_to_iso(5);
  for (const auto& level : graphs)
    for (const auto& g : level)
      for (Vertex u = 0; u < g.order(); ++u) {
        auto lk = g.neighbors(u);
        for (Vertex w1 : lk)
          for (Vertex w2 : lk) {
            if (w1 == w2) continue;
            for (Sign s : {Sign::minus, Sign::plus}) {
              ChainBuilder chain(Convention::G, g);
              auto r = append_pm(chain, g, u, w1, w2, s);
              auto c = std::move(chain).finish();
              EXPECT_TRUE(validate(c).ok);
              EXPECT_EQ(c.rhs, r.graph);
            }
          }
      }
}

TEST(Flatten, K14IsTight) {
  auto r = flatten_tree(star_graph(4));
  EXPECT_EQ(r.tree.order(), 6u);
  EXPECT_EQ(r.tree.max_degree(), 3u);
  EXPECT_EQ(r.tree.order(), 2 * 5u - 4);
  EXPECT_TRUE(validate(r.certificate).ok);
}

TEST(Flatten, ClawUnchanged) {
  auto r = flatten_tree(star_graph(3));
  EXPECT_EQ(r.tree, star_graph(3));
  EXPECT_TRUE(r.certificate.steps.empty());
  EXPECT_TRUE(r.moves.empty());
  EXPECT_TRUE(validate(r.certificate).ok);
}

TEST(Flatten, K16) {
  auto r = flatten_tree(star_graph(6));
  EXPECT_EQ(tree_excess(star_graph(6)), 3u);
  EXPECT_EQ(r.tree.order(), 10u);
  EXPECT_LE(r.tree.order(), 2 * 7u - 4);
  EXPECT_EQ(r.moves.size(), 3u);
  EXPECT_LE(r.tree.max_degree(), 3u);
}

TEST(Flatten, RejectsNonTrees) { EXPECT_THROW(flatten_tree(cycle_graph(4)), std::invalid_argument); }

TEST(Flatten, RandomTrees) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    auto t = raag::testing::random_tree(6 + i % 14, rng);
    auto r = flatten_tree(t);
    EXPECT_EQ(r.tree.order(), t.order() + tree_excess(t));
    EXPECT_LE(r.tree.max_degree(), 3u);
    EXPECT_TRUE(is_tree(r.tree));
    EXPECT_TRUE(validate(r.certificate).ok);
  }
}

TEST(Bounds, Sizes) {
  EXPECT_EQ(cover_tree_order_bound(3), 12u);
  EXPECT_EQ(flat_tree_order_bound(star_graph(4)), 6u);
  EXPECT_EQ(flat_tree_order_bound(cycle_graph(3)), 3u * 8 - 4);
  EXPECT_THROW(cover_tree_order_bound(0), std::invalid_argument);
}

TEST(Counterexample, TriangleGivesSquare) {
  auto cx = counterexample(cycle_graph(3));
  EXPECT_EQ(cx.rule, CounterexampleRule::disjoint_cycles);
  EXPECT_EQ(canonical_form(cx.gamma), canonical_form(cycle_graph(4)));
  EXPECT_TRUE(cx.non_embedding.exhaustive);
  EXPECT_TRUE(validate(cx.certificate).ok);
}

TEST(Counterexample, K14MinusAtCentre) {
  auto cx = counterexample(star_graph(4));
  EXPECT_EQ(cx.rule, CounterexampleRule::minus_at_high_degree);
  ASSERT_TRUE(cx.move);
  EXPECT_EQ(cx.move->u, 0u);
  EXPECT_EQ(cx.move->sign, Sign::minus);
  EXPECT_EQ(cx.gamma, pm_construction(star_graph(4), 0, cx.move->w1, cx.move->w2, Sign::minus).graph);
  EXPECT_FALSE(raag::testing::embeds_brute_force(star_graph(4), cx.gamma));
}

TEST(Counterexample, K4MinusAlongLinkEdge) {
  auto cx = counterexample(complete_graph(4));
  EXPECT_EQ(cx.rule, CounterexampleRule::minus_with_link_edge);
  ASSERT_TRUE(cx.move);
  EXPECT_EQ(cx.move->sign, Sign::minus);
  EXPECT_TRUE(complete_graph(4).adjacent(cx.move->w1, cx.move->w2));
  EXPECT_FALSE(raag::testing::embeds_brute_force(complete_graph(4), cx.gamma));
}

TEST(Counterexample, ClawUsesPlus) {
  auto cx = counterexample(star_graph(3));
  EXPECT_EQ(cx.rule, CounterexampleRule::plus_with_edgeless_links);
  EXPECT_FALSE(raag::testing::embeds_brute_force(star_graph(3), cx.gamma));
}

TEST(Counterexample, RejectsLinearForests) {
  EXPECT_THROW(counterexample(path_graph(4)), std::invalid_argument);
  EXPECT_THROW(counterexample(Graph(3)), std::invalid_argument);
}

TEST(Counterexample, RuleDispatchOnSmallGraphs) {
  auto graphs = raag::testing::graphs_up_to_iso(6);
  for (const auto& level : graphs)
    for (const auto& g : level) {
      if (is_linear_forest(g)) continue;
      auto cx = counterexample(g);
      auto dc = degree_classes(g);
      CounterexampleRule want;
      if (g.max_degree() <= 2)
        want = CounterexampleRule::disjoint_cycles;
      else if (g.max_degree() >= 4)
        want = CounterexampleRule::minus_at_high_degree;
      else if (dc.v3_star.empty())
        want = CounterexampleRule::plus_with_edgeless_links;
      else
        want = CounterexampleRule::minus_with_link_edge;
      EXPECT_EQ(cx.rule, want);
      EXPECT_TRUE(validate(cx.certificate).ok);
      EXPECT_EQ(cx.certificate.lhs, g);
      EXPECT_EQ(cx.certificate.rhs, cx.gamma);
      EXPECT_FALSE(raag::testing::embeds_brute_force(g, cx.gamma));
    }
}

TEST(Retract, TwoPointsInP3) {
  const Graph gamma = path_graph(3);
  auto dbl = double_along_star(gamma, 0);
  const Graph lambda(2);
  ASSERT_EQ(dbl.copy_injection[2], 3u);
  auto w = retract_full_embedding(gamma, 0, dbl, {lambda, dbl.graph, {2, 3}});
  VertexSet image = w.map;
  std::sort(image.begin(), image.end());
  EXPECT_EQ(image, (VertexSet{0, 2}));
  EXPECT_TRUE(is_full_embedding(lambda, gamma, w.map));
}

TEST(Retract, BaseImageProjects) {
  const Graph gamma = cycle_graph(5);
  auto dbl = double_along_star(gamma, 0);
  const Graph lambda = complement(path_graph(2));
  auto w = retract_full_embedding(gamma, 0, dbl, {lambda, dbl.graph, {1, 3}});
  EXPECT_EQ(w.map, (VertexMap{1, 3}));
}

TEST(Retract, Preconditions) {
  const Graph gamma = path_graph(3);
  auto dbl = double_along_star(gamma, 0);
  EXPECT_THROW(retract_full_embedding(gamma, 0, dbl, {cycle_graph(3), dbl.graph, {0, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(retract_full_embedding(gamma, 1, dbl, {Graph(2), dbl.graph, {2, 3}}), std::invalid_argument);
  EXPECT_THROW(retract_full_embedding(gamma, 0, dbl, {Graph(2), dbl.graph, {0, 1}}), std::invalid_argument);
}

TEST(Retract, AllEmbeddingsOnFiveVertexGraphs) {
  auto graphs = raag::testing::graphs_up_to_iso(5);
  std::vector<Graph> lambdas;
  for (std::size_t k = 1; k <= 5; ++k)
    for (const auto& p : raag::testing::partitions(k))
      lambdas.push_back(complement(raag::testing::linear_forest_graph(p)));
  for (const auto& level : graphs)
    for (const auto& gamma : level)
      for (Vertex v = 0; v < gamma.order(); ++v) {
        auto dbl = double_along_star(gamma, v);
        for (const auto& lambda : lambdas)
          raag::testing::for_each_full_embedding(lambda, dbl.graph, [&](const std::vector<Vertex>& map) {
            auto w = retract_full_embedding(gamma, v, dbl, {lambda, dbl.graph, map});
            EXPECT_TRUE(is_full_embedding(lambda, gamma, w.map));
            return true;
          });
      }
}

TEST(PM, DegreeTablesUpToSeven) {
  auto graphs = raag::testing::graphs_up_to_iso(7);
  for (const auto& level : graphs)
    for (const auto& g : level)
      for (Vertex u = 0; u < g.order(); ++u) {
        auto lk = g.neighbors(u);
        for (Vertex w1 : lk)
          for (Vertex w2 : lk) {
            if (w1 == w2) continue;
            for (Sign s : {Sign::minus, Sign::plus}) {
              auto r = pm_construction(g, u, w1, w2, s);
              const Vertex v = r.move.new_vertex;
              ASSERT_EQ(r.graph.order(), g.order() + 1);
              EXPECT_EQ(v, g.order());
              EXPECT_EQ(r.graph.degree(v), 3u);
              for (Vertex x = 0; x < g.order(); ++x) {
                std::size_t want = g.degree(x);
                if (s == Sign::minus && x == u) want -= 1;
                if (s == Sign::plus && x == w2) want += 1;
                EXPECT_EQ(r.graph.degree(x), want);
              }
              const long long before = static_cast<long long>(g.edge_count()) - static_cast<long long>(g.order());
              const long long after =
                  static_cast<long long>(r.graph.edge_count()) - static_cast<long long>(r.graph.order());
              if (s == Sign::minus) EXPECT_EQ(after, before);
            }
          }
      }
}

TEST(Flatten, ExcessDropsByOnePerMove) {
  std::mt19937_64 rng(23);
  std::vector<Graph> trees = {star_graph(7), star_graph(4)};
  for (int i = 0; i < 60; ++i) trees.push_back(raag::testing::random_tree(5 + i % 20, rng));
  for (const auto& t : trees) {
    auto r = flatten_tree(t);
    Graph cur = t;
    for (const auto& m : r.moves) {
      const auto before = tree_excess(cur);
      cur = pm_construction(cur, m.u, m.w1, m.w2, m.sign).graph;
      EXPECT_EQ(tree_excess(cur) + 1, before);
    }
    EXPECT_EQ(cur, r.tree);
    EXPECT_EQ(tree_excess(cur), 0u);
  }
}

TEST(Retract, DoubleAndBaseAgreeUpToSix) {
  auto graphs = raag::testing::graphs_up_to_iso(6);
  std::vector<Graph> lambdas;
  for (std::size_t k = 1; k <= 6; ++k)
    for (const auto& p : raag::testing::partitions(k))
      lambdas.push_back(complement(raag::testing::linear_forest_graph(p)));
  for (const auto& level : graphs)
    for (const auto& gamma : level)
      for (Vertex v = 0; v < gamma.order(); ++v) {
        auto dbl = double_along_star(gamma, v);
        for (const auto& lambda : lambdas) {
          auto in_double = find_full_embedding(lambda, dbl.graph);
          auto in_base = find_full_embedding(lambda, gamma);
          ASSERT_FALSE(in_double.exhausted() || in_base.exhausted());
          EXPECT_EQ(in_double.found(), in_base.found());
          if (in_double.found()) {
            auto w = retract_full_embedding(gamma, v, dbl, *in_double.witness);
            EXPECT_TRUE(is_full_embedding(lambda, gamma, w.map));
          }
        }
      }
}
