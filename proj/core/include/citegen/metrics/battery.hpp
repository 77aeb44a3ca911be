#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citegen/graph.hpp"
#include "citegen/neardag.hpp"

namespace citegen::metrics {

enum class Category { kGlobalTopology, kDegree, kMesoEndogenous, kMesoExogenous, kLocal, kFlow };
enum class DistanceKind { kApe, kW1, kL1 };

std::string_view to_string(Category category);
std::string_view to_string(DistanceKind kind);
Category parse_category(std::string_view name);
DistanceKind parse_distance_kind(std::string_view name);

struct MetricInfo {
  std::string_view name;
  Category category;
  DistanceKind kind;
  /// Sampled metrics depend on per-graph random draws (pairs, sources,
  /// triples) and are only deterministic up to sampling noise.
  bool sampled;
};

inline constexpr std::size_t kMetricCount = 26;

/// The battery in report order: 3 global, 4 degree, 6 endogenous,
/// 6 exogenous, 4 local and 3 flow metrics.
std::span<const MetricInfo> metric_catalogue();
/// Index of `name` in the catalogue; throws MetricError when unknown.
std::size_t metric_index(std::string_view name);

enum class MetricMode {
  kAuto,     // exact below the size limits, sampled above
  kExact,    // all pairs, all sources, full triad census
  kSampled,  // always sample
};

MetricMode parse_metric_mode(std::string_view name);
std::string_view to_string(MetricMode mode);

struct MetricConfig {
  std::uint64_t seed = 0;
  MetricMode mode = MetricMode::kAuto;
  std::size_t exact_node_limit = 1000;  // auto mode: exact paths and betweenness
  std::size_t path_pairs = 2000;
  std::size_t reach_sources = 200;
  std::size_t betweenness_sources = 200;
  std::size_t triad_exact_limit = 3000;
  std::size_t triad_samples = 200000;
  std::size_t subsample_nodes = 50000;  // cap for the expensive categories
  double resolution = 1.0;
  double secondary_resolution = 0.5;
  OrderStrategy ordering = OrderStrategy::kDegreeDiff;
  std::size_t threads = 1;
};

/// A graph under evaluation. Without an explicit ordering, longest paths use
/// the timestamps when every node has one, else config.ordering.
struct MetricInput {
  const LabeledGraph* graph = nullptr;
  const NodeOrdering* ordering = nullptr;
};

/// Raw per-graph value behind one metric: a scalar (APE), a sample (W1) or
/// the 16 triad proportions (L1). `error` is set when it is undefined.
struct Statistic {
  double scalar = 0.0;
  std::vector<double> samples;
  std::string error;
  /// Random draws behind a sampled value (pairs, sources or triples); 0 when
  /// the value is exact.
  std::size_t draws = 0;
  /// Path metrics: counts of the finite sampled distances by length.
  std::vector<double> histogram;

  bool ok() const { return error.empty(); }
};

struct GraphSummary {
  std::array<Statistic, kMetricCount> stats;
};

/// Computes every statistic of the battery for one graph. `stream` selects
/// the random streams of sampled metrics, so that two graphs draw their
/// pairs independently. Subsampling and community detection seeds depend on
/// config.seed only and are shared by all graphs.
GraphSummary summarize(const MetricInput& input, const MetricConfig& config, std::uint64_t stream);

struct MetricEntry {
  std::string name;
  Category category = Category::kGlobalTopology;
  DistanceKind kind = DistanceKind::kApe;
  double value = 0.0;
  bool skipped = false;
  std::string note;  // reason for a skip
};

struct MetricReport {
  std::vector<MetricEntry> entries;  // always kMetricCount rows, in catalogue order

  std::size_t computed() const;
  const MetricEntry& at(std::string_view name) const;
};

MetricReport compare_summaries(const GraphSummary& real, const GraphSummary& synth);

/// Sampling-noise bound on the distance of metric `metric` between two
/// independent samplings of the same graph; 0 when both values are exact.
///   effective_diameter: the interpolated 90th percentile of `real` read at
///     0.9 +/- eps, eps = sum over both samples of sqrt(ln(2/1e-3) / (2 n))
///     (Dvoretzky-Kiefer-Wolfowitz at level 1e-3), relative to the value.
///   average_path_length: 4 standard errors of the difference of the two
///     sample means, relative to the real mean.
///   reachability: 3 J(real) (1/sqrt(n_a) + 1/sqrt(n_b)), J = integral of
///     sqrt(F (1 - F)), which bounds the expected W1 of an n-sample.
///   triad_census: 3 sum_t sqrt(p_t (1 - p_t) (1/n_a + 1/n_b)) over the
///     pooled proportions.
///   betweenness: 3 sqrt(1/s_a + 1/s_b) times the real mean, assuming the
///     per-source dependency of a node has coefficient of variation <= 1.
/// n is the number of finite distances, sources or triples drawn.
double sampling_noise_bound(std::size_t metric, const Statistic& real, const Statistic& synth);

/// Runs the full battery on both graphs. The real graph uses stream 0 and the
/// synthetic one stream 1.
MetricReport compare(const MetricInput& real, const MetricInput& synth, const MetricConfig& config);

// Category-level entry points; each returns that category's rows only.
std::vector<MetricEntry> global_topology_metrics(const MetricInput& real, const MetricInput& synth,
                                                 const MetricConfig& config);
std::vector<MetricEntry> degree_metrics(const LabeledGraph& real, const LabeledGraph& synth);
std::vector<MetricEntry> endogenous_metrics(const LabeledGraph& real, const LabeledGraph& synth);
std::vector<MetricEntry> exogenous_metrics(const LabeledGraph& real, const LabeledGraph& synth,
                                           const MetricConfig& config);
std::vector<MetricEntry> local_metrics(const LabeledGraph& real, const LabeledGraph& synth,
                                       const MetricConfig& config);
std::vector<MetricEntry> flow_metrics(const MetricInput& real, const MetricInput& synth, const MetricConfig& config);

/// Tab-separated report: header `metric category kind value skipped`, one
/// row per entry. Skipped rows carry value `nan`.
void write_report(std::ostream& out, const MetricReport& report);
void write_report(const std::filesystem::path& path, const MetricReport& report);
MetricReport read_report(std::istream& in);
MetricReport read_report(const std::filesystem::path& path);

}  // namespace citegen::metrics
