#include <gtest/gtest.h>

#include "raag/decision.hpp"
#include "support/enumerate.hpp"

using namespace raag;

TEST(Table, Examples) {
  EXPECT_EQ(decide_path_cycle(Family::path, 3, Family::path, 4).verdict, Verdict::yes);
  auto droms = decide_path_cycle(Family::cycle, 5, Family::path, 4);
  EXPECT_EQ(droms.verdict, Verdict::no);
  EXPECT_NE(droms.citation.find("Droms"), std::string::npos);
  EXPECT_EQ(decide_path_cycle(Family::cycle, 5, Family::path, 8).verdict, Verdict::yes);
  auto open = decide_path_cycle(Family::cycle, 6, Family::path, 6);
  EXPECT_EQ(open.verdict, Verdict::unknown);
  EXPECT_EQ(open.provenance, Provenance::open_region);
}

TEST(Table, SmallCycles) {
  EXPECT_EQ(decide_path_cycle(Family::cycle, 3, Family::path, 1).verdict, Verdict::no);
  EXPECT_EQ(decide_path_cycle(Family::cycle, 3, Family::path, 2).verdict, Verdict::yes);
  EXPECT_EQ(decide_path_cycle(Family::cycle, 4, Family::path, 2).verdict, Verdict::no);
  EXPECT_EQ(decide_path_cycle(Family::cycle, 4, Family::path, 3).verdict, Verdict::yes);
  EXPECT_EQ(decide_path_cycle(Family::path, 4, Family::cycle, 4).verdict, Verdict::no);
  EXPECT_EQ(decide_path_cycle(Family::path, 4, Family::cycle, 5).verdict, Verdict::yes);
}

TEST(Table, RegionsDisjointAndBounded) {
  for (std::size_t m = 5; m <= 12; ++m)
    for (std::size_t n = 1; n <= 30; ++n) {
      auto d = decide_path_cycle(Family::cycle, m, Family::path, n);
      if (n + 1 < m) EXPECT_EQ(d.verdict, Verdict::no);
      if (n >= 2 * m - 2) EXPECT_EQ(d.verdict, Verdict::yes);
      if (d.verdict == Verdict::unknown) {
        EXPECT_GE(n + 1, m);
        EXPECT_LT(n, 2 * m - 2);
        EXPECT_FALSE(m == 5 && n == 4);
      }
    }
}

TEST(Table, RejectsInvalidOrders) {
  EXPECT_THROW(decide_path_cycle(Family::cycle, 2, Family::path, 3), std::invalid_argument);
  EXPECT_THROW(decide_path_cycle(Family::path, 0, Family::path, 3), std::invalid_argument);
}

TEST(Decide, TwoEdgesIntoPaths) {
  const Graph two = disjoint_union(path_graph(2), path_graph(2));
  auto yes = decide(two, path_graph(5));
  EXPECT_EQ(yes.verdict, Verdict::yes);
  EXPECT_EQ(yes.provenance, Provenance::linear_forest_criterion);
  EXPECT_TRUE(evidence_holds(yes, two, path_graph(5)));
  auto no = decide(two, path_graph(4));
  EXPECT_EQ(no.verdict, Verdict::no);
  EXPECT_TRUE(evidence_holds(no, two, path_graph(4)));
}

TEST(Decide, LinearForestNo) {
  auto d = decide(path_graph(5), cycle_graph(5));
  EXPECT_EQ(d.verdict, Verdict::no);
  EXPECT_EQ(d.provenance, Provenance::linear_forest_criterion);
  EXPECT_TRUE(evidence_holds(d, path_graph(5), cycle_graph(5)));
}

TEST(Decide, TriangleIntoEdge) {
  auto d = decide(complete_graph(3), complete_graph(2));
  EXPECT_EQ(d.verdict, Verdict::yes);
  EXPECT_EQ(d.provenance, Provenance::double_sequence);
  EXPECT_TRUE(evidence_holds(d, complete_graph(3), complete_graph(2)));
}

TEST(Decide, C3IntoP5AtDepthZero) {
  Budgets b;
  b.double_depth = 0;
  auto d = decide(cycle_graph(3), path_graph(5), b);
  EXPECT_EQ(d.verdict, Verdict::unknown);
  EXPECT_EQ(d.provenance, Provenance::budget_exhausted);
  EXPECT_TRUE(std::holds_alternative<BudgetReport>(d.evidence));
}

TEST(Decide, C4IntoP3) {
  auto d = decide(cycle_graph(4), path_graph(3));
  EXPECT_EQ(d.verdict, Verdict::yes);
  EXPECT_EQ(d.depth, std::optional<std::size_t>(1));
  EXPECT_TRUE(evidence_holds(d, cycle_graph(4), path_graph(3)));
}

TEST(Decide, CyclesBySubdivision) {
  auto d = decide(cycle_graph(4), cycle_graph(7));
  EXPECT_EQ(d.verdict, Verdict::yes);
  EXPECT_EQ(d.provenance, Provenance::subdivision);
  EXPECT_TRUE(evidence_holds(d, cycle_graph(4), cycle_graph(7)));
}

TEST(Decide, C6IntoP4IsNo) {
  auto d = decide(cycle_graph(6), path_graph(4));
  EXPECT_EQ(d.verdict, Verdict::no);
}

TEST(Decide, ObstructionRoute) {
  // The three leaves of the claw are independent; P_2+P_2 has no three independent vertices.
  const Graph host = disjoint_union(path_graph(2), path_graph(2));
  auto d = decide(star_graph(3), host);
  EXPECT_EQ(d.verdict, Verdict::no);
  EXPECT_EQ(d.provenance, Provenance::obstruction);
  EXPECT_TRUE(evidence_holds(d, star_graph(3), host));
}

TEST(Decide, DirectEmbedding) {
  auto d = decide(star_graph(3), star_graph(5));
  EXPECT_EQ(d.verdict, Verdict::yes);
  EXPECT_EQ(d.depth, std::optional<std::size_t>(0));
  ASSERT_TRUE(std::holds_alternative<Certificate>(d.evidence));
  EXPECT_EQ(std::get<Certificate>(d.evidence).steps.size(), 1u);
}

TEST(Decide, RejectsZeroBudgets) {
  Budgets b;
  b.solver = 0;
  EXPECT_THROW(decide(path_graph(2), path_graph(2), b), std::invalid_argument);
}

TEST(Obstruction, C6AgainstP4) {
  auto o = obstruction_search(cycle_graph(6), path_graph(4), 6);
  ASSERT_TRUE(o.obstruction);
  EXPECT_EQ(o.obstruction->forest, path_graph(5));
  EXPECT_TRUE(verify_obstruction(*o.obstruction, cycle_graph(6), path_graph(4)));
}

TEST(Obstruction, TwoPointsAgainstK5) {
  auto o = obstruction_search(Graph(2), complete_graph(5), 2);
  ASSERT_TRUE(o.obstruction);
  EXPECT_EQ(o.obstruction->forest, Graph(2));
}

TEST(Obstruction, NoneForP3InC7) { EXPECT_FALSE(obstruction_search(path_graph(3), cycle_graph(7), 3).obstruction); }

TEST(Obstruction, VerificationRejectsForgeries) {
  auto o = *obstruction_search(cycle_graph(6), path_graph(4), 6).obstruction;
  EXPECT_FALSE(verify_obstruction(o, cycle_graph(6), path_graph(6)));
  auto forged = o;
  forged.forest = cycle_graph(5);
  EXPECT_FALSE(verify_obstruction(forged, cycle_graph(6), path_graph(4)));
}

TEST(DoubleSearch, C4P3AtDepthOne) {
  auto s = double_sequence_search(cycle_graph(4), path_graph(3), 4, 64);
  ASSERT_TRUE(s.certificate);
  EXPECT_EQ(s.depth, 1u);
  EXPECT_TRUE(validate(*s.certificate).ok);
}

TEST(DoubleSearch, DirectAtDepthZero) {
  auto s = double_sequence_search(path_graph(3), path_graph(5), 3, 64);
  ASSERT_TRUE(s.certificate);
  EXPECT_EQ(s.depth, 0u);
  EXPECT_EQ(s.certificate->steps.size(), 1u);
}

TEST(DoubleSearch, TriangleInEdge) {
  auto s = double_sequence_search(complete_graph(3), complete_graph(2), 4, 64);
  ASSERT_TRUE(s.certificate);
  EXPECT_TRUE(validate(*s.certificate).ok);
  EXPECT_EQ(s.certificate->lhs, complete_graph(3));
  EXPECT_EQ(s.certificate->rhs, complete_graph(2));
}

TEST(DoubleSearch, RespectsVertexCap) {
  auto s = double_sequence_search(cycle_graph(4), path_graph(3), 4, 4);
  EXPECT_FALSE(s.certificate);
}

TEST(Properties, SoundAndMonotoneUpToFive) {
  auto graphs = raag::testing::graphs_up_to_iso(5);
  Budgets small;
  small.double_depth = 1;
  small.vertex_cap = 10;
  Budgets large;
  large.double_depth = 2;
  large.vertex_cap = 16;
  for (const auto& ll : graphs)
    for (const auto& lhs : ll)
      for (const auto& rl : graphs)
        for (const auto& rhs : rl) {
          auto a = decide(lhs, rhs, small);
          auto b = decide(lhs, rhs, large);
          EXPECT_TRUE(evidence_holds(a, lhs, rhs));
          EXPECT_TRUE(evidence_holds(b, lhs, rhs));
          if (a.verdict != Verdict::unknown) EXPECT_EQ(a.verdict, b.verdict);
          if (raag::testing::embeds_brute_force(lhs, rhs)) EXPECT_EQ(a.verdict, Verdict::yes);
        }
}

TEST(Properties, LinearForestMatchesSolverUpToSix) {
  auto graphs = raag::testing::graphs_up_to_iso(6);
  for (const auto& ll : graphs)
    for (const auto& lhs : ll) {
      if (!is_linear_forest(lhs)) continue;
      for (const auto& rl : graphs)
        for (const auto& rhs : rl) {
          auto d = decide(lhs, rhs);
          EXPECT_EQ(d.verdict == Verdict::yes, find_full_embedding(lhs, rhs).found());
          EXPECT_NE(d.verdict, Verdict::unknown);
        }
    }
}

TEST(Properties, ObstructionExcludesCertificate) {
  auto graphs = raag::testing::graphs_up_to_iso(5);
  for (const auto& ll : graphs)
    for (const auto& lhs : ll)
      for (const auto& rl : graphs)
        for (const auto& rhs : rl) {
          if (!obstruction_search(lhs, rhs, lhs.order()).obstruction) continue;
          for (std::size_t depth = 0; depth <= 2; ++depth)
            EXPECT_FALSE(double_sequence_search(lhs, rhs, depth, 16).certificate);
        }
}

namespace {

// Expected table answer straight from the path/cycle classification:
// 1 = yes, 0 = no, -1 = not settled.
int table_oracle(Family lf, std::size_t m, Family rf, std::size_t n) {
  if (lf == Family::path && rf == Family::path) return m <= n;
  if (lf == Family::cycle && rf == Family::cycle) return m <= n;
  if (lf == Family::path) return m + 1 <= n;
  if (m == 3) return 2 <= n;
  if (m == 4) return 3 <= n;
  if (!(m - 1 <= n)) return 0;
  if (m == 5 && n == 4) return 0;
  if (2 * m - 2 <= n) return 1;
  return -1;
}

}  // namespace

TEST(Table, AgreesWithClassificationUpToTwelve) {
  for (Family lf : {Family::path, Family::cycle})
    for (Family rf : {Family::path, Family::cycle})
      for (std::size_t m = lf == Family::path ? 1 : 3; m <= 12; ++m)
        for (std::size_t n = rf == Family::path ? 1 : 3; n <= 12; ++n) {
          auto d = decide_path_cycle(lf, m, rf, n);
          const int want = table_oracle(lf, m, rf, n);
          const int got = d.verdict == Verdict::yes ? 1 : d.verdict == Verdict::no ? 0 : -1;
          EXPECT_EQ(got, want) << to_string(lf) << m << " -> " << to_string(rf) << n;
          EXPECT_FALSE(d.citation.empty());
        }
}

TEST(Decide, CyclesIntoCyclesUpToTen) {
  for (std::size_t m = 3; m <= 10; ++m)
    for (std::size_t n = m; n <= 10; ++n) {
      auto d = decide(cycle_graph(m), cycle_graph(n));
      EXPECT_EQ(d.verdict, Verdict::yes);
      EXPECT_EQ(d.provenance, Provenance::subdivision);
      ASSERT_TRUE(std::holds_alternative<Certificate>(d.evidence));
      EXPECT_TRUE(validate(std::get<Certificate>(d.evidence)).ok);
    }
}

TEST(Mcg, Examples) {
  EXPECT_TRUE(kr2_mcg_embeds(2, 1, 2).embeds);
  EXPECT_FALSE(kr2_mcg_embeds(2, 1, 3).embeds);
  EXPECT_TRUE(kr2_mcg_embeds(2, 1, 0).embeds);
  EXPECT_EQ(kr2_mcg_embeds(2, 1, 0).kr2.order(), 0u);
  EXPECT_TRUE(kr2_mcg_embeds(0, 5, 1).embeds);
  EXPECT_EQ(kr2_mcg_embeds(0, 5, 1).bound, 1);
}

TEST(Mcg, Preconditions) {
  EXPECT_THROW(kr2_mcg_embeds(1, 0, 1), std::invalid_argument);
  EXPECT_THROW(kr2_mcg_embeds(0, 2, 1), std::invalid_argument);
  EXPECT_THROW(kr2_mcg_embeds(0, 0, 0), std::invalid_argument);
  EXPECT_THROW(kr2_mcg_embeds(2, 1, -1), std::invalid_argument);
}

TEST(Mcg, Kr2Structure) {
  auto m = kr2_mcg_embeds(3, 2, 4);
  EXPECT_EQ(m.kr2, kr2_graph(4));
  EXPECT_EQ(m.chromatic_number, 4u);
  for (auto [a, b] : m.kr2.edges()) EXPECT_NE(m.colouring[a], m.colouring[b]);
  auto c = complement(m.kr2);
  EXPECT_EQ(c.edge_count(), 4u);
  EXPECT_EQ(c.max_degree(), 1u);
}
