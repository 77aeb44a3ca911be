#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "citegen/baselines.hpp"
#include "citegen/metrics/battery.hpp"
#include "citegen/metrics/community.hpp"
#include "citegen/metrics/distances.hpp"
#include "citegen/metrics/paths.hpp"
#include "citegen/metrics/structure.hpp"
#include "citegen/metrics/triads.hpp"
#include "citegen/neardag.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace citegen::metrics {
namespace {

double w1(std::vector<double> a, std::vector<double> b) {
  return wasserstein1(std::span<const double>(a), std::span<const double>(b));
}

LabeledGraph chain(std::size_t n) {
  LabeledGraph g(n);
  for (NodeId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// Two disjoint cliques of `size` nodes with edges in both directions,
/// labelled 1 and 2.
LabeledGraph clique_pair(std::size_t size) {
  LabeledGraph g(2 * size);
  std::vector<CommunityId> labels(2 * size);
  for (std::size_t c = 0; c < 2; ++c) {
    for (std::size_t i = 0; i < size; ++i) {
      labels[c * size + i] = static_cast<CommunityId>(c + 1);
      for (std::size_t j = 0; j < size; ++j) {
        if (i != j) g.add_edge(static_cast<NodeId>(c * size + i), static_cast<NodeId>(c * size + j));
      }
    }
  }
  g.set_labels(labels);
  return g;
}

TEST(Distances, Ape) {
  EXPECT_DOUBLE_EQ(ape(3.0, 3.0), 0.0);
  EXPECT_DOUBLE_EQ(ape(2.0, 4.0), 0.5);
  EXPECT_DOUBLE_EQ(ape(-1.0, -2.0), 0.5);
  EXPECT_THROW(ape(5.0, 0.0), MetricError);
}

TEST(Distances, WassersteinFixtures) {
  EXPECT_DOUBLE_EQ(w1({1, 2, 3}, {3, 1, 2}), 0.0);
  EXPECT_DOUBLE_EQ(w1({0}, {1}), 1.0);
  EXPECT_DOUBLE_EQ(w1({0, 0}, {2}), 2.0);
  EXPECT_THROW(w1({}, {1}), MetricError);
}

TEST(Distances, WassersteinMatchesTransportOracle) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> value(0, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(6), b(4);
    for (double& x : a) x = value(rng);
    for (double& x : b) x = value(rng) + 0.5;
    EXPECT_NEAR(w1(a, b), oracle::transport_w1(a, b), 1e-9);
  }
}

TEST(Distances, L1) {
  const std::vector<double> a = {0.5, 0.5}, b = {0.25, 0.75}, c = {1.0};
  EXPECT_DOUBLE_EQ(l1(a, b), 0.5);
  EXPECT_THROW(l1(a, c), MetricError);
}

TEST(Triads, NamesInConventionalOrder) {
  for (std::size_t t = 0; t < kTriadTypes; ++t) EXPECT_EQ(triad_name(t), oracle::kTriadNames[t]);
}

TEST(Triads, EmptyAndCompleteGraphs) {
  const auto empty = triad_census(LabeledGraph(5));
  EXPECT_DOUBLE_EQ(empty[0], 1.0);
  LabeledGraph full(4);
  for (NodeId u = 0; u < 4; ++u) {
    for (NodeId v = 0; v < 4; ++v) {
      if (u != v) full.add_edge(u, v);
    }
  }
  EXPECT_DOUBLE_EQ(triad_census(full)[15], 1.0);
  EXPECT_THROW(triad_census(LabeledGraph(2)), MetricError);
}

TEST(Triads, CensusMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = fixture::random_digraph(25, 0.05 + 0.02 * static_cast<double>(seed), seed);
    EXPECT_EQ(triad_census_counts(g), oracle::triad_census(g)) << "seed " << seed;
  }
}

TEST(Triads, TypeAgreesWithOracleOnEveryTriple) {
  const auto g = fixture::random_digraph(9, 0.35, 4);
  for (NodeId a = 0; a < 9; ++a) {
    for (NodeId b = 0; b < 9; ++b) {
      for (NodeId c = 0; c < 9; ++c) {
        if (a == b || b == c || a == c) continue;
        EXPECT_EQ(triad_name(triad_type(g, a, b, c)), oracle::classify_triad(g, a, b, c));
      }
    }
  }
}

TEST(Triads, SampledCensusIsNearExact) {
  const auto g = fixture::random_digraph(60, 0.08, 2);
  const auto exact = triad_census(g);
  TriadOptions options;
  options.force_sampled = true;
  options.seed = 5;
  const auto sampled = triad_census(g, options);
  EXPECT_DOUBLE_EQ(std::accumulate(sampled.begin(), sampled.end(), 0.0), 1.0);
  EXPECT_LT(l1(exact, sampled), 0.02);
  EXPECT_EQ(sampled, triad_census(g, options));
}

TEST(Structure, FeedForwardLoops) {
  EXPECT_EQ(ffl_count(fixture::from_edges(3, {{0, 1}, {0, 2}, {1, 2}})), 1u);
  EXPECT_EQ(ffl_count(fixture::from_edges(3, {{0, 1}, {1, 2}, {2, 0}})), 0u);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = fixture::random_digraph(20, 0.15, seed);
    EXPECT_EQ(ffl_count(g), oracle::ffl_count(g));
  }
}

TEST(Structure, Clustering) {
  const auto triangle = fixture::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_DOUBLE_EQ(global_clustering(triangle), 1.0);
  for (double c : local_clustering(triangle)) EXPECT_DOUBLE_EQ(c, 1.0);
  const auto path = chain(4);
  EXPECT_DOUBLE_EQ(global_clustering(path), 0.0);
  EXPECT_DOUBLE_EQ(global_clustering(LabeledGraph(3)), 0.0);
}

TEST(Structure, AssortativityMatchesDirectCorrelation) {
  const auto g = fixture::random_digraph(30, 0.12, 7);
  const auto deg = degrees(g);
  for (DegreeRole role : {DegreeRole::kIn, DegreeRole::kOut}) {
    const auto& d = role == DegreeRole::kIn ? deg.in : deg.out;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    const double m = static_cast<double>(g.edge_count());
    for (const Edge& e : g.edges()) {
      const double x = d[e.source], y = d[e.target];
      sx += x;
      sy += y;
      sxx += x * x;
      syy += y * y;
      sxy += x * y;
    }
    const double cov = sxy / m - sx * sy / (m * m);
    const double expected = cov / std::sqrt((sxx / m - sx * sx / (m * m)) * (syy / m - sy * sy / (m * m)));
    EXPECT_NEAR(degree_assortativity(g, role), expected, 1e-12);
  }
}

TEST(Structure, AssortativityUndefinedCases) {
  LabeledGraph ring(5);
  for (NodeId v = 0; v < 5; ++v) ring.add_edge(v, (v + 1) % 5);
  EXPECT_THROW(degree_assortativity(ring, DegreeRole::kIn), MetricError);
  EXPECT_THROW(degree_assortativity(LabeledGraph(3), DegreeRole::kOut), MetricError);
}

TEST(Paths, ExactChainStatistics) {
  PathOptions options;
  options.exact = true;
  const auto stats = path_statistics(chain(11), options);
  ASSERT_TRUE(stats.average_path_length);
  EXPECT_DOUBLE_EQ(*stats.average_path_length, 4.0);
  EXPECT_EQ(stats.finite_pairs, 55u);
  ASSERT_EQ(stats.reachability.size(), 11u);
  EXPECT_DOUBLE_EQ(stats.reachability.front(), 10.0);
  EXPECT_DOUBLE_EQ(stats.reachability.back(), 0.0);
}

TEST(Paths, NoFinitePairs) {
  PathOptions options;
  options.exact = true;
  const auto stats = path_statistics(LabeledGraph(4), options);
  EXPECT_FALSE(stats.average_path_length);
  EXPECT_FALSE(stats.effective_diameter);
}

TEST(Paths, EffectiveDiameterBoundedByLongestPathOnDags) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = fixture::random_labelled_dag(40, 0.08, 2, seed);
    PathOptions options;
    options.exact = true;
    const auto stats = path_statistics(g, options);
    if (!stats.effective_diameter) continue;
    const auto longest = longest_paths(g, order_nodes(g, OrderStrategy::kDegreeDiff));
    const auto max_len = *std::max_element(longest.begin(), longest.end());
    EXPECT_LE(*stats.effective_diameter, static_cast<double>(max_len) + 1e-12);
  }
}

TEST(Paths, BfsDistances) {
  const auto d = bfs_distances(out_adjacency(chain(4)), 1);
  EXPECT_EQ(d, (std::vector<std::int64_t>{-1, 0, 1, 2}));
}

TEST(Paths, LongestPathsOnChain) {
  LabeledGraph g(5);
  for (NodeId v = 1; v < 5; ++v) g.add_edge(v, v - 1);
  const auto lengths = longest_paths(g, creation_order(5));
  EXPECT_EQ(lengths, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST(Paths, SccSizes) {
  const auto dag = fixture::random_labelled_dag(30, 0.2, 2, 1);
  const auto sizes = scc_sizes(dag);
  EXPECT_EQ(sizes.size(), 30u);
  for (auto s : sizes) EXPECT_EQ(s, 1u);
  auto cyc = fixture::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  auto cs = scc_sizes(cyc);
  std::sort(cs.begin(), cs.end());
  EXPECT_EQ(cs, (std::vector<std::size_t>{1, 1, 3}));
}

TEST(Paths, BetweennessMatchesAllPairsOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = fixture::random_digraph(8, 0.3, seed);
    const auto fast = betweenness(g, g.node_count(), 0);
    const auto slow = oracle::betweenness_all_pairs(g);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t v = 0; v < fast.size(); ++v) EXPECT_NEAR(fast[v], slow[v], 1e-12);
  }
}

TEST(Paths, SampledBetweennessIsUnbiasedOnAverage) {
  const auto g = fixture::random_digraph(60, 0.06, 3);
  const auto exact = betweenness(g, g.node_count(), 0);
  std::vector<double> mean(exact.size(), 0.0);
  const int runs = 40;
  for (int r = 0; r < runs; ++r) {
    const auto s = betweenness(g, 20, static_cast<std::uint64_t>(r));
    for (std::size_t v = 0; v < s.size(); ++v) mean[v] += s[v] / runs;
  }
  const double total_exact = std::accumulate(exact.begin(), exact.end(), 0.0);
  const double total_mean = std::accumulate(mean.begin(), mean.end(), 0.0);
  EXPECT_NEAR(total_mean, total_exact, 0.05 * total_exact);
}

TEST(Endogenous, SingleCommunity) {
  auto g = fixture::random_digraph(12, 0.3, 1);
  g.set_labels(std::vector<CommunityId>(12, 1));
  EXPECT_NEAR(directed_modularity(g), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(mean_conductance(g), 0.0);
  EXPECT_THROW(inter_density(g), MetricError);
  for (double p : participation(g, DegreeRole::kIn)) EXPECT_DOUBLE_EQ(p, 0.0);
}

TEST(Endogenous, DisconnectedCommunities) {
  const auto g = clique_pair(4);
  EXPECT_DOUBLE_EQ(directed_modularity(g), 0.5);
  EXPECT_DOUBLE_EQ(mean_conductance(g), 0.0);
  EXPECT_DOUBLE_EQ(intra_density(g), 1.0);
  EXPECT_DOUBLE_EQ(inter_density(g), 0.0);
  for (double p : participation(g, DegreeRole::kOut)) EXPECT_DOUBLE_EQ(p, 0.0);
}

TEST(Endogenous, MixedParticipation) {
  auto g = fixture::from_edges(3, {{0, 1}, {0, 2}});
  g.set_labels({1, 1, 2});
  const auto out = participation(g, DegreeRole::kOut);
  EXPECT_DOUBLE_EQ(out[0], 0.5);
  EXPECT_DOUBLE_EQ(out[1], 0.0);
  EXPECT_THROW(directed_modularity(LabeledGraph(3)), MetricError);
}

TEST(Community, UndirectedModularityMatchesDirectSum) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = fixture::random_digraph(12, 0.2, seed);
    if (g.edge_count() == 0) continue;
    std::vector<std::uint32_t> part(12);
    for (std::size_t i = 0; i < 12; ++i) part[i] = static_cast<std::uint32_t>((i * 7 + seed) % 3);
    const auto p = Partition::from_labels(part);
    EXPECT_NEAR(undirected_modularity(g, p), oracle::modularity_direct(g, p.membership), 1e-12);
  }
}

TEST(Community, LouvainFindsCliquePair) {
  const auto g = clique_pair(5);
  const auto found = louvain(g, 1.0, 3);
  EXPECT_EQ(found.partition.count, 2u);
  EXPECT_NEAR(found.quality, 0.5, 1e-12);
  const auto [best, membership] = oracle::best_partition(g);
  EXPECT_NEAR(found.quality, best, 1e-12);
  const auto again = louvain(g, 1.0, 3);
  EXPECT_EQ(found.partition.membership, again.partition.membership);
}

TEST(Community, LouvainReachesOptimumOnSmallGraphs) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = fixture::random_digraph(9, 0.25, seed + 40);
    if (g.edge_count() == 0) continue;
    const auto found = louvain(g, 1.0, seed);
    const auto [best, membership] = oracle::best_partition(g);
    EXPECT_LE(found.quality, best + 1e-12);
    EXPECT_GE(found.quality, best - 0.05);
  }
}

TEST(Community, EmptyGraphGivesSingletons) {
  const auto found = louvain(LabeledGraph(4), 1.0, 0);
  EXPECT_EQ(found.partition.count, 4u);
  EXPECT_DOUBLE_EQ(found.quality, 0.0);
  const auto lpa = label_propagation(LabeledGraph(4), 0);
  EXPECT_EQ(lpa.partition.count, 4u);
}

TEST(Community, LabelPropagationSeparatesCliques) {
  const auto g = clique_pair(6);
  const auto found = label_propagation(g, 2);
  EXPECT_EQ(found.partition.count, 2u);
  EXPECT_LT(found.quality, map_equation_codelength(g, Partition::from_labels(std::vector<std::uint32_t>(12, 0))));
}

TEST(Community, PartitionFromLabels) {
  const std::vector<std::uint32_t> raw = {7, 3, 7, 9};
  const auto p = Partition::from_labels(raw);
  EXPECT_EQ(p.membership, (std::vector<std::uint32_t>{0, 1, 0, 2}));
  EXPECT_EQ(p.count, 3u);
  EXPECT_EQ(p.sizes(), (std::vector<double>{2, 1, 1}));
}

TEST(Battery, CatalogueShape) {
  const auto cat = metric_catalogue();
  ASSERT_EQ(cat.size(), kMetricCount);
  std::array<int, 6> per{};
  for (const auto& m : cat) ++per[static_cast<std::size_t>(m.category)];
  EXPECT_EQ(per, (std::array<int, 6>{3, 4, 6, 6, 4, 3}));
  EXPECT_EQ(cat.front().name, "effective_diameter");
  EXPECT_EQ(cat.back().name, "longest_path");
  EXPECT_EQ(metric_index("triad_census"), 22u);
  EXPECT_EQ(cat[22].kind, DistanceKind::kL1);
  EXPECT_THROW(metric_index("nope"), MetricError);
  EXPECT_THROW(parse_metric_mode("fast"), MetricError);
  EXPECT_THROW(parse_category("micro"), MetricError);
}

TEST(Battery, SelfComparisonIsZeroInExactMode) {
  const auto g = fixture::random_labelled_dag(80, 0.06, 3, 11);
  MetricConfig config;
  config.mode = MetricMode::kExact;
  const auto report = compare({&g, nullptr}, {&g, nullptr}, config);
  ASSERT_EQ(report.entries.size(), kMetricCount);
  for (const auto& e : report.entries) {
    if (e.skipped) continue;
    EXPECT_NEAR(e.value, 0.0, 1e-12) << e.name;
  }
  EXPECT_GE(report.computed(), 24u);
}

TEST(Battery, ExogenousDetectsStructureChange) {
  const auto pair = clique_pair(10);
  const auto er = fit_and_generate(BaselineKind::kEr, pair, 4).graph;
  MetricConfig config;
  const auto rows = exogenous_metrics(pair, er, config);
  ASSERT_EQ(rows.size(), 6u);
  const auto& q = rows[1];
  EXPECT_EQ(q.name, "louvain_modularity");
  ASSERT_FALSE(q.skipped);
  EXPECT_GT(q.value, 0.5);
}

TEST(Battery, DistancesAreSymmetricForW1AndL1) {
  const auto a = fixture::random_labelled_dag(70, 0.05, 2, 1);
  const auto b = fixture::random_labelled_dag(70, 0.09, 2, 2);
  MetricConfig config;
  config.mode = MetricMode::kExact;
  const auto ab = compare({&a, nullptr}, {&b, nullptr}, config);
  const auto ba = compare({&b, nullptr}, {&a, nullptr}, config);
  for (std::size_t i = 0; i < kMetricCount; ++i) {
    if (ab.entries[i].kind == DistanceKind::kApe || ab.entries[i].skipped) continue;
    EXPECT_NEAR(ab.entries[i].value, ba.entries[i].value, 1e-12) << ab.entries[i].name;
  }
}

TEST(Battery, SkipsUndefinedMetricsWithNote) {
  const auto a = fixture::random_labelled_dag(30, 0.1, 2, 3);
  LabeledGraph unlabelled = a;
  unlabelled.clear_labels();
  const auto report = compare({&a, nullptr}, {&unlabelled, nullptr}, MetricConfig{});
  const auto& mod = report.at("gt_modularity");
  EXPECT_TRUE(mod.skipped);
  EXPECT_NE(mod.note.find("synthetic"), std::string::npos);
  EXPECT_FALSE(report.at("in_degree").skipped);
}

TEST(Battery, ReportRoundTrip) {
  const auto a = fixture::random_labelled_dag(40, 0.1, 2, 5);
  const auto b = fixture::random_labelled_dag(40, 0.12, 2, 6);
  const auto report = compare({&a, nullptr}, {&b, nullptr}, MetricConfig{});
  std::stringstream buffer;
  write_report(buffer, report);
  const auto back = read_report(buffer);
  ASSERT_EQ(back.entries.size(), report.entries.size());
  for (std::size_t i = 0; i < kMetricCount; ++i) {
    EXPECT_EQ(back.entries[i].name, report.entries[i].name);
    EXPECT_EQ(back.entries[i].skipped, report.entries[i].skipped);
    if (!report.entries[i].skipped) {
      EXPECT_DOUBLE_EQ(back.entries[i].value, report.entries[i].value);
    }
  }
}

TEST(Battery, SampledModeIsDeterministicAndThreadIndependent) {
  const auto a = fixture::random_labelled_dag(300, 0.02, 3, 7);
  const auto b = fixture::random_labelled_dag(300, 0.025, 3, 8);
  MetricConfig config;
  config.mode = MetricMode::kSampled;
  config.path_pairs = 500;
  config.reach_sources = 50;
  config.betweenness_sources = 50;
  config.triad_samples = 20000;
  config.seed = 9;
  const auto first = compare({&a, nullptr}, {&b, nullptr}, config);
  config.threads = 4;
  const auto second = compare({&a, nullptr}, {&b, nullptr}, config);
  for (std::size_t i = 0; i < kMetricCount; ++i) {
    EXPECT_EQ(first.entries[i].skipped, second.entries[i].skipped);
    if (!first.entries[i].skipped) {
      EXPECT_DOUBLE_EQ(first.entries[i].value, second.entries[i].value);
    }
  }
}

TEST(Battery, SampledSelfComparisonStaysWithinNoiseBound) {
  MetricConfig config;
  config.mode = MetricMode::kSampled;
  config.path_pairs = 800;
  config.reach_sources = 60;
  config.betweenness_sources = 60;
  config.triad_samples = 30000;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto g = fixture::random_labelled_dag(1500, 0.004, 3, seed);
    config.seed = seed;
    const auto real = summarize({&g, nullptr}, config, 0);
    const auto synth = summarize({&g, nullptr}, config, 1);
    const auto report = compare({&g, nullptr}, {&g, nullptr}, config);
    for (std::size_t m : {0u, 1u, 2u, 22u, 23u}) {
      ASSERT_FALSE(report.entries[m].skipped) << report.entries[m].name;
      EXPECT_GT(real.stats[m].draws, 0u) << report.entries[m].name;
      EXPECT_LE(report.entries[m].value, sampling_noise_bound(m, real.stats[m], synth.stats[m]))
          << report.entries[m].name << " seed " << seed;
    }
  }
}

TEST(Battery, NoiseBoundIsZeroForExactStatistics) {
  const auto g = fixture::random_labelled_dag(80, 0.05, 2, 3);
  MetricConfig config;
  config.mode = MetricMode::kExact;
  const auto s = summarize({&g, nullptr}, config, 0);
  for (std::size_t m : {0u, 1u, 2u, 22u, 23u}) EXPECT_DOUBLE_EQ(sampling_noise_bound(m, s.stats[m], s.stats[m]), 0.0);
  EXPECT_DOUBLE_EQ(sampling_noise_bound(3, s.stats[3], s.stats[3]), 0.0);
  EXPECT_THROW(sampling_noise_bound(kMetricCount, s.stats[0], s.stats[0]), MetricError);
}

TEST(Battery, CategoryEntryPointsMatchFullReport) {
  const auto a = fixture::random_labelled_dag(50, 0.08, 2, 12);
  const auto b = fixture::random_labelled_dag(50, 0.1, 2, 13);
  MetricConfig config;
  config.mode = MetricMode::kExact;
  const auto full = compare({&a, nullptr}, {&b, nullptr}, config);
  const auto deg = degree_metrics(a, b);
  ASSERT_EQ(deg.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(deg[i].value, full.entries[3 + i].value);
}

}  // namespace
}  // namespace citegen::metrics
