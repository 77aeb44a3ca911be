#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "citegen/stats/bootstrap.hpp"
#include "citegen/stats/ranking.hpp"
#include "citegen/stats/tests.hpp"
#include "oracles.hpp"

namespace citegen::stats {
namespace {

std::vector<double> ranks_of(std::vector<double> v) { return average_ranks(std::span<const double>(v)); }

RankTable table_of(std::vector<std::vector<double>> values) {
  std::vector<std::string> methods, blocks;
  for (std::size_t j = 0; j < values.front().size(); ++j) methods.push_back("m" + std::to_string(j));
  for (std::size_t b = 0; b < values.size(); ++b) blocks.push_back("b" + std::to_string(b));
  return rank_blocks(methods, blocks, std::move(values));
}

std::vector<std::vector<double>> random_values(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(0, 4);
  std::vector<std::vector<double>> values(n, std::vector<double>(k));
  for (auto& row : values) {
    for (double& v : row) v = value(rng);
  }
  return values;
}

TEST(Ranks, AverageRanks) {
  EXPECT_EQ(ranks_of({10, 20, 30}), (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(ranks_of({1, 1, 2}), (std::vector<double>{1.5, 1.5, 3}));
  EXPECT_EQ(ranks_of({3, 1, 3, 3}), (std::vector<double>{3, 1, 3, 3}));
}

TEST(Ranks, StandardiseKeepsRanks) {
  const std::vector<double> x = {4, 0.5, 9, 2, 2};
  const auto z = standardise(std::span<const double>(x));
  EXPECT_EQ(average_ranks(std::span<const double>(z)), ranks_of(x));
  const std::vector<double> flat = {3, 3};
  EXPECT_EQ(standardise(std::span<const double>(flat)), (std::vector<double>{0, 0}));
}

TEST(Ranks, MeanRanksAverageToCentre) {
  const auto table = table_of(random_values(30, 5, 1));
  const auto mean = table.mean_ranks();
  double total = 0.0;
  for (double r : mean) total += r;
  EXPECT_NEAR(total / 5.0, 3.0, 1e-12);
}

TEST(Ranks, MissingBlocksAreDropped) {
  const double nan = std::nan("");
  const auto table = table_of({{1, 2}, {nan, 1}, {2, 1}});
  EXPECT_EQ(table.block_count(), 2u);
  EXPECT_EQ(table.warnings.size(), 1u);
  EXPECT_THROW(table_of({{1}}), StatsError);
}

TEST(Ranks, SelectBlocks) {
  const auto table = table_of({{1, 2}, {2, 1}, {3, 3}});
  const std::vector<std::size_t> keep = {2, 0};
  const auto sub = select_blocks(table, keep);
  EXPECT_EQ(sub.blocks, (std::vector<std::string>{"b2", "b0"}));
  EXPECT_EQ(sub.ranks[1], (std::vector<double>{1, 2}));
}

TEST(Friedman, AllTied) {
  const auto result = friedman(table_of(std::vector<std::vector<double>>(6, {1, 1, 1})));
  EXPECT_DOUBLE_EQ(result.chi2, 0.0);
  EXPECT_DOUBLE_EQ(result.p_value, 1.0);
}

TEST(Friedman, PerfectOrdering) {
  const auto result = friedman(table_of(std::vector<std::vector<double>>(7, {1, 2, 3})));
  EXPECT_NEAR(result.chi2, 14.0, 1e-12);
  EXPECT_NEAR(result.p_value, std::exp(-7.0), 1e-12);
  EXPECT_LT(result.p_value, 0.001);
  EXPECT_EQ(result.blocks, 7u);
  EXPECT_EQ(result.methods, 3u);
}

TEST(Friedman, InvariantUnderMonotoneTransforms) {
  auto values = random_values(20, 4, 2);
  const auto before = friedman(table_of(values));
  for (auto& row : values) {
    for (double& v : row) v = std::exp(v) + 3.0;
  }
  const auto after = friedman(table_of(values));
  EXPECT_DOUBLE_EQ(before.chi2, after.chi2);
  EXPECT_DOUBLE_EQ(before.p_value, after.p_value);
}

TEST(Friedman, Preconditions) {
  EXPECT_THROW(friedman(table_of({{1, 2, 3}})), StatsError);
  EXPECT_THROW(friedman(table_of({{1, 2}, {2, 1}})), StatsError);
}

TEST(Friedman, ChiSquareTail) {
  EXPECT_NEAR(chi_square_sf(2.0, 2.0), std::exp(-1.0), 1e-14);
  EXPECT_NEAR(chi_square_sf(3.841458820694124, 1.0), 0.05, 1e-12);
}

TEST(MannWhitney, Separated) {
  const std::vector<double> a = {1, 2, 3}, b = {4, 5, 6};
  const auto result = mann_whitney(a, b);
  EXPECT_DOUBLE_EQ(result.u, 0.0);
  EXPECT_TRUE(result.exact);
  EXPECT_NEAR(result.p_value, 0.1, 1e-12);
}

TEST(MannWhitney, IdenticalSamples) {
  const std::vector<double> a = {1, 2, 3, 4, 5};
  const auto result = mann_whitney(a, a);
  EXPECT_DOUBLE_EQ(result.u, 12.5);
  EXPECT_NEAR(result.p_value, 1.0, 1e-12);
}

TEST(MannWhitney, ExactMatchesPermutationOracle) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> value(0, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> a(3 + trial % 5), b(2 + trial % 6);
    for (double& x : a) x = value(rng);
    for (double& x : b) x = value(rng) + (trial % 3);
    const auto result = mann_whitney(a, b);
    ASSERT_TRUE(result.exact);
    EXPECT_NEAR(result.p_value, oracle::mann_whitney_permutation(a, b), 1e-9) << "trial " << trial;
  }
}

TEST(MannWhitney, NormalApproximationForLargeSamples) {
  std::vector<double> a(30), b(30);
  for (std::size_t i = 0; i < 30; ++i) {
    a[i] = static_cast<double>(i);
    b[i] = static_cast<double>(i) + 100.0;
  }
  const auto result = mann_whitney(a, b);
  EXPECT_FALSE(result.exact);
  EXPECT_DOUBLE_EQ(result.u, 0.0);
  EXPECT_LT(result.p_value, 1e-8);
  EXPECT_THROW(mann_whitney(std::vector<double>{}, b), StatsError);
}

TEST(Wtl, AllTiesWhenIdentical) {
  const std::vector<std::vector<std::vector<double>>> runs(4, {{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}});
  const auto m = wtl_matrix(runs);
  EXPECT_EQ(m.ties[0][1], 4u);
  EXPECT_EQ(m.wins[0][1], 0u);
}

TEST(Wtl, DominanceWinsEveryBlock) {
  std::vector<std::vector<std::vector<double>>> runs(
      5, {{0, 0.1, 0.2, 0.3, 0.4, 0.5}, {1, 1.1, 1.2, 1.3, 1.4, 1.5}, {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}});
  const auto m = wtl_matrix(runs);
  EXPECT_EQ(m.wins[0][1], 5u);
  EXPECT_EQ(m.losses[1][0], 5u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(m.losses[i][j], m.wins[j][i]);
      EXPECT_EQ(m.ties[i][j], m.ties[j][i]);
      if (i != j) {
        EXPECT_EQ(m.wins[i][j] + m.ties[i][j] + m.losses[i][j], 5u);
      }
    }
  }
  const std::vector<std::size_t> subset = {1, 3};
  EXPECT_EQ(wtl_matrix(runs, 0.05, subset).wins[0][1], 2u);
}

TEST(Bootstrap, IdenticalBlocksGiveZeroWidth) {
  const auto table = table_of(std::vector<std::vector<double>>(10, {1, 3, 2}));
  const auto ci = bootstrap_ci(table, 200, 1);
  for (const auto& interval : ci) EXPECT_DOUBLE_EQ(interval.high - interval.low, 0.0);
  EXPECT_DOUBLE_EQ(ci[1].mean_rank, 3.0);
}

TEST(Bootstrap, IntervalContainsPointEstimate) {
  int contained = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto table = table_of(random_values(25, 4, seed + 100));
    for (const auto& interval : bootstrap_ci(table, 500, seed)) {
      ++total;
      if (interval.low <= interval.mean_rank && interval.mean_rank <= interval.high) ++contained;
    }
  }
  EXPECT_GE(contained, static_cast<int>(0.99 * total));
}

TEST(Bootstrap, SingleDrawAndPreconditions) {
  const auto table = table_of(random_values(8, 3, 5));
  const auto ci = bootstrap_ci(table, 1, 0);
  for (const auto& interval : ci) EXPECT_DOUBLE_EQ(interval.low, interval.high);
  EXPECT_THROW(bootstrap_ci(table, 0, 0), StatsError);
}

TEST(Bootstrap, ReproducibleAndThreadIndependent) {
  const auto table = table_of(random_values(40, 4, 6));
  const auto a = bootstrap_ci(table, 1000, 7, 1);
  const auto b = bootstrap_ci(table, 1000, 7, 4);
  for (std::size_t j = 0; j < a.size(); ++j) {
    EXPECT_DOUBLE_EQ(a[j].low, b[j].low);
    EXPECT_DOUBLE_EQ(a[j].high, b[j].high);
  }
}

TEST(Bootstrap, Percentile) {
  EXPECT_DOUBLE_EQ(percentile({1, 2, 3, 4, 5}, 0.5), 3.0);
  EXPECT_DOUBLE_EQ(percentile({1, 2}, 0.25), 1.25);
  EXPECT_THROW(percentile({}, 0.5), StatsError);
}

}  // namespace
}  // namespace citegen::stats
