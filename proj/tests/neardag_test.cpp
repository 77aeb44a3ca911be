#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "citegen/baselines.hpp"
#include "citegen/cs_generator.hpp"
#include "citegen/neardag.hpp"
#include "fixtures.hpp"

namespace citegen {
namespace {

std::vector<NodeId> oldest_first_of(const LabeledGraph& g, OrderStrategy s) { return order_nodes(g, s).oldest_first(); }

TEST(Ordering, DegreeDiffOnChain) {
  // a -> b -> c: a scores +1 and is the newest, c scores -1 and is the oldest.
  const auto g = fixture::from_edges(3, {{0, 1}, {1, 2}});
  const auto o = order_nodes(g, OrderStrategy::kDegreeDiff);
  EXPECT_EQ(o.rank, (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(count_back_edges(g, o), 0u);
}

TEST(Ordering, TwoCycleTieBreakAndRatio) {
  const auto g = fixture::from_edges(2, {{0, 1}, {1, 0}});
  const auto o = order_nodes(g, OrderStrategy::kDegreeDiff);
  // Tie: node 0 comes first in the newest-first list.
  EXPECT_EQ(o.rank, (std::vector<std::size_t>{1, 0}));
  EXPECT_DOUBLE_EQ(back_edge_ratio(g, o), 0.5);
}

TEST(Ordering, TimestampsAscendingWithIdTies) {
  auto g = fixture::from_edges(4, {{0, 1}});
  g.set_timestamps({2001, 1999, 2001, 1980});
  EXPECT_EQ(oldest_first_of(g, OrderStrategy::kTimestamps), (std::vector<NodeId>{3, 1, 0, 2}));
  g.set_timestamps({2001, std::nullopt, 2001, 1980});
  EXPECT_THROW(order_nodes(g, OrderStrategy::kTimestamps), GraphError);
  EXPECT_THROW(order_nodes(fixture::from_edges(2, {}), OrderStrategy::kTimestamps), GraphError);
}

TEST(Ordering, RankIsABijection) {
  for (auto strategy : {OrderStrategy::kDegreeDiff, OrderStrategy::kEades}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto g = fixture::random_digraph(40, 0.08, seed);
      auto rank = order_nodes(g, strategy).rank;
      std::sort(rank.begin(), rank.end());
      for (std::size_t i = 0; i < rank.size(); ++i) ASSERT_EQ(rank[i], i);
    }
  }
}

TEST(Ordering, EadesViolatesAtMostHalfTheEdges) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = fixture::random_digraph(10, 0.3, seed);
    const auto o = order_nodes(g, OrderStrategy::kEades);
    EXPECT_LE(2 * count_back_edges(g, o), g.edge_count()) << "seed " << seed;
  }
}

TEST(Ordering, EadesRecoversADag) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = fixture::random_labelled_dag(50, 0.1, 2, seed);
    EXPECT_EQ(count_back_edges(g, order_nodes(g, OrderStrategy::kEades)), 0u);
  }
}

TEST(Ordering, StrategyNames) {
  for (auto s : {OrderStrategy::kTimestamps, OrderStrategy::kDegreeDiff, OrderStrategy::kEades}) {
    EXPECT_EQ(parse_order_strategy(to_string(s)), s);
  }
  EXPECT_THROW(parse_order_strategy("random"), GraphError);
}

TEST(BackEdgeRatio, CreationOrderDagIsZero) {
  const auto g = fixture::random_labelled_dag(30, 0.2, 2, 1);
  EXPECT_DOUBLE_EQ(back_edge_ratio(g, creation_order(30)), 0.0);
  EXPECT_DOUBLE_EQ(back_edge_ratio(LabeledGraph(5), creation_order(5)), 0.0);
}

TEST(BackEdgeRatio, FullyReversedChainIsAllBackEdges) {
  const auto g = fixture::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_DOUBLE_EQ(back_edge_ratio(g, creation_order(4)), 1.0);
}

TEST(Budget, Formula) {
  EXPECT_EQ(back_edge_budget(90, 0.1), 10u);
  EXPECT_EQ(back_edge_budget(90, 0.0), 0u);
  EXPECT_EQ(back_edge_budget(100, 0.05), 5u);
  EXPECT_EQ(back_edge_budget(1000, 0.2), 250u);
  EXPECT_THROW(back_edge_budget(10, 1.0), GraphError);
  EXPECT_THROW(back_edge_budget(10, -0.1), GraphError);
  EXPECT_NEAR(back_edge_gap_probability(), 0.0951625819640404, 1e-15);
}

LabeledGraph cs_dag(std::size_t n, std::uint64_t seed) {
  return generate(CsParams::uniform(3, 4.0, 0.5, 6.0), n, seed);
}

TEST(Inject, ExactFractionOnTarget) {
  const auto dag = cs_dag(3000, 2);
  for (double r : {0.0, 0.05, 0.1, 0.2}) {
    const auto res = inject_back_edges(dag, r, 7);
    const std::size_t n_back = back_edge_budget(dag.edge_count(), r);
    EXPECT_EQ(res.injected, n_back);
    EXPECT_FALSE(res.exhausted());
    EXPECT_EQ(res.graph.edge_count(), dag.edge_count() + n_back);
    EXPECT_EQ(count_back_edges(res.graph, creation_order(dag.node_count())), n_back);
  }
}

TEST(Inject, NinetyEdgesTenPercent) {
  LabeledGraph dag(60);
  std::size_t placed = 0;
  for (NodeId v = 1; v < 60 && placed < 90; ++v) {
    for (NodeId u = 0; u < v && placed < 90; ++u, ++placed) dag.add_edge(v, u);
  }
  ASSERT_EQ(dag.edge_count(), 90u);
  const auto res = inject_back_edges(dag, 0.1, 3);
  ASSERT_EQ(res.injected, 10u);
  EXPECT_DOUBLE_EQ(back_edge_ratio(res.graph, creation_order(60)), 0.1);
}

TEST(Inject, ZeroRatioLeavesGraphUnchanged) {
  const auto dag = cs_dag(500, 1);
  const auto res = inject_back_edges(dag, 0.0, 1);
  EXPECT_EQ(res.injected, 0u);
  EXPECT_TRUE(std::equal(dag.edges().begin(), dag.edges().end(), res.graph.edges().begin(), res.graph.edges().end()));
}

TEST(Inject, BackEdgesPointOldToNewAndStripRestoresDag) {
  const auto dag = cs_dag(2000, 4);
  const auto res = inject_back_edges(dag, 0.1, 9);
  const auto order = creation_order(dag.node_count());
  for (std::size_t i = dag.edge_count(); i < res.graph.edge_count(); ++i) {
    const Edge& e = res.graph.edges()[i];
    EXPECT_LT(e.source, e.target);
  }
  EXPECT_FALSE(is_acyclic(res.graph));
  const auto stripped = strip_back_edges(res.graph, order);
  EXPECT_TRUE(is_acyclic(stripped));
  EXPECT_EQ(stripped.edge_count(), dag.edge_count());
  EXPECT_TRUE(stripped.has_labels());
}

TEST(Inject, DeterministicUnderSeed) {
  const auto dag = cs_dag(1000, 4);
  const auto a = inject_back_edges(dag, 0.1, 5).graph;
  const auto b = inject_back_edges(dag, 0.1, 5).graph;
  EXPECT_TRUE(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
}

TEST(Inject, MostlyIntraCommunityAndShortGaps) {
  const auto dag = cs_dag(20000, 8);
  const auto res = inject_back_edges(dag, 0.1, 1);
  std::size_t intra = 0, total = 0;
  for (std::size_t i = dag.edge_count(); i < res.graph.edge_count(); ++i) {
    const Edge& e = res.graph.edges()[i];
    intra += dag.label(e.source) == dag.label(e.target);
    ++total;
  }
  // 0.8 intra by construction plus 1/3 of the unconstrained remainder.
  EXPECT_NEAR(static_cast<double>(intra) / total, 0.8 + 0.2 / 3.0, 0.03);
}

TEST(Inject, TinyGraphReportsExhaustion) {
  LabeledGraph dag(3);
  dag.add_edge(1, 0);
  dag.add_edge(2, 0);
  dag.add_edge(2, 1);
  // Three possible back-edges exist; ask for far more.
  const auto res = inject_back_edges(dag, 0.9, 1);
  EXPECT_EQ(res.requested, 27u);
  EXPECT_EQ(res.injected, 3u);
  EXPECT_TRUE(res.exhausted());
}

TEST(CycleBreak, ThreeCycleBecomesDag) {
  const auto g = fixture::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto res = cycle_break(g, 0.0, 1, OrderStrategy::kDegreeDiff);
  EXPECT_EQ(res.graph.edge_count(), 3u);
  EXPECT_TRUE(is_acyclic(res.graph));
  EXPECT_EQ(res.reversed, 0u);
}

TEST(CycleBreak, OneThirdOfThreeEdges) {
  const auto g = fixture::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto res = cycle_break(g, 0.34, 1, OrderStrategy::kDegreeDiff);
  EXPECT_EQ(res.reversed, 1u);
  EXPECT_EQ(count_back_edges(res.graph, res.ordering), 1u);
}

TEST(CycleBreak, ConsistentDagIsUnchangedAtZero) {
  const auto g = fixture::random_labelled_dag(40, 0.15, 2, 3);
  const auto res = cycle_break(g, 0.0, 1, OrderStrategy::kEades);
  ASSERT_EQ(res.graph.edge_count(), g.edge_count());
  for (const Edge& e : g.edges()) EXPECT_TRUE(res.graph.has_edge(e.source, e.target));
}

TEST(CycleBreak, ReciprocalPairsCollapse) {
  const auto g = fixture::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
  const auto res = orient_to_dag(g, OrderStrategy::kDegreeDiff);
  EXPECT_EQ(res.collapsed, 1u);
  EXPECT_EQ(res.graph.edge_count(), 2u);
  EXPECT_TRUE(is_acyclic(res.graph));
}

TEST(CycleBreak, ExactReversalCountAndRatio) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = fixture::random_digraph(60, 0.05, seed);
    for (double r : {0.0, 0.05, 0.1, 0.2}) {
      for (auto s : {OrderStrategy::kDegreeDiff, OrderStrategy::kEades}) {
        const auto res = cycle_break(g, r, seed, s);
        const std::size_t m = res.graph.edge_count();
        const auto want = static_cast<std::size_t>(std::llround(r * static_cast<double>(m)));
        EXPECT_EQ(res.reversed, want);
        EXPECT_EQ(count_back_edges(res.graph, res.ordering), want);
        EXPECT_EQ(m, g.edge_count() - res.collapsed);
        EXPECT_TRUE(is_acyclic(strip_back_edges(res.graph, res.ordering)));
      }
    }
  }
}

TEST(CycleBreak, KeepsColumnsAndRejectsBadRatio) {
  auto g = fixture::random_labelled_dag(20, 0.2, 2, 1);
  const auto res = cycle_break(g, 0.1, 1, OrderStrategy::kDegreeDiff);
  EXPECT_TRUE(res.graph.has_labels());
  EXPECT_THROW(cycle_break(g, 1.0, 1, OrderStrategy::kDegreeDiff), GraphError);
}

TEST(CycleBreak, BaselineOutputsBecomeAcyclic) {
  const auto real = cs_dag(400, 3);
  for (auto kind : {BaselineKind::kEr, BaselineKind::kConfig, BaselineKind::kSbm, BaselineKind::kDcsbm}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto sample = fit_and_generate(kind, real, seed);
      EXPECT_TRUE(is_acyclic(orient_to_dag(sample.graph, OrderStrategy::kDegreeDiff).graph));
    }
  }
}

}  // namespace
}  // namespace citegen
