#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citegen/graph.hpp"
#include "citegen/metrics/battery.hpp"
#include "citegen/neardag.hpp"
#include "citegen/stats/bootstrap.hpp"
#include "citegen/stats/ranking.hpp"
#include "citegen/stats/tests.hpp"

namespace citegen::bench {

/// A labelled real graph. Timestamps, when every node has one, fix the age
/// ordering used for its back-edge ratio and longest paths.
struct Dataset {
  std::string name;
  LabeledGraph graph;
};

/// Methods: cs, cs-dag, and er, config, sbm, dcsbm with an optional -nd
/// suffix for the cycle-broken variant.
bool is_known_method(std::string_view name);
std::vector<std::string> all_methods();

struct BenchConfig {
  std::vector<std::string> methods;
  std::size_t replicates = 50;
  std::uint64_t seed = 0;
  metrics::MetricConfig metrics;
  OrderStrategy ordering = OrderStrategy::kDegreeDiff;
  std::size_t bootstrap_draws = 10000;
  double alpha = 0.05;
  std::size_t threads = 1;
};

/// Metrics that do not read the ground-truth labels.
std::vector<std::size_t> non_endogenous_metrics();

struct DatasetRuns {
  std::string name;
  double back_edge_ratio = 0.0;  // of the real graph under its ordering
  /// distances[method][metric][replicate]; NaN where the metric was skipped.
  std::vector<std::vector<std::vector<double>>> distances;
};

/// One aggregation of the blocks: all 26 metrics, or the 20 that do not use
/// ground-truth labels.
struct BenchView {
  std::string name;
  stats::RankTable table;
  std::optional<stats::FriedmanResult> friedman_blocks;    // n = blocks
  std::optional<stats::FriedmanResult> friedman_datasets;  // n = datasets
  std::string friedman_note;                               // why a test is missing
  stats::WtlMatrix wtl;
  std::vector<stats::RankInterval> intervals;
  /// category_ranks[category][method]; NaN for a category without blocks.
  std::vector<std::vector<double>> category_ranks;
};

struct BenchResult {
  std::vector<std::string> methods;
  std::vector<DatasetRuns> datasets;
  BenchView all;
  BenchView no_endogenous;
};

/// Draws `replicates` samples of every method for every dataset, scores
/// each against its dataset with the metric battery and runs the ranking
/// pipeline. The real graph uses metric stream 0 and replicate r stream
/// r + 1. The result does not depend on config.threads.
BenchResult run_bench(const std::vector<Dataset>& datasets, const BenchConfig& config);

/// Draws one sample of `method` fitted to `real`. `back_edge_ratio` is the
/// ratio measured on the real graph; near-DAG variants order their own
/// sample with `strategy`. Label-free models get the real labels attached so
/// that endogenous metrics are defined.
LabeledGraph sample_method(std::string_view method, const LabeledGraph& real, double back_edge_ratio,
                           OrderStrategy strategy, std::uint64_t seed);

/// Age ordering of a real graph: timestamps when complete, else `fallback`.
NodeOrdering real_ordering(const LabeledGraph& graph, OrderStrategy fallback);

/// Writes runs.tsv, ranks[_no_endogenous].tsv, mean_ranks[...].tsv,
/// friedman.tsv, wtl[...].tsv and category_ranks[...].tsv to `dir`.
void write_bench(const std::filesystem::path& dir, const BenchResult& result);

}  // namespace citegen::bench
