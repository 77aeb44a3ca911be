#include "citegen/metrics/battery.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "citegen/metrics/community.hpp"
#include "citegen/metrics/distances.hpp"
#include "citegen/metrics/paths.hpp"
#include "citegen/metrics/structure.hpp"
#include "citegen/metrics/triads.hpp"
#include "citegen/parallel.hpp"
#include "citegen/random.hpp"
#include "citegen/sampling.hpp"

namespace citegen::metrics {

namespace {

using C = Category;
using K = DistanceKind;

constexpr std::array<MetricInfo, kMetricCount> kCatalogue = {{
    {"effective_diameter", C::kGlobalTopology, K::kApe, true},
    {"average_path_length", C::kGlobalTopology, K::kApe, true},
    {"reachability", C::kGlobalTopology, K::kW1, true},
    {"in_degree", C::kDegree, K::kW1, false},
    {"out_degree", C::kDegree, K::kW1, false},
    {"in_assortativity", C::kDegree, K::kApe, false},
    {"out_assortativity", C::kDegree, K::kApe, false},
    {"gt_modularity", C::kMesoEndogenous, K::kApe, false},
    {"gt_conductance", C::kMesoEndogenous, K::kApe, false},
    {"gt_inter_density", C::kMesoEndogenous, K::kApe, false},
    {"gt_intra_density", C::kMesoEndogenous, K::kApe, false},
    {"gt_in_participation", C::kMesoEndogenous, K::kW1, false},
    {"gt_out_participation", C::kMesoEndogenous, K::kW1, false},
    {"lpa_codelength", C::kMesoExogenous, K::kApe, false},
    {"louvain_modularity", C::kMesoExogenous, K::kApe, false},
    {"louvain_secondary_quality", C::kMesoExogenous, K::kApe, false},
    {"lpa_community_size", C::kMesoExogenous, K::kW1, false},
    {"louvain_community_size", C::kMesoExogenous, K::kW1, false},
    {"louvain_secondary_community_size", C::kMesoExogenous, K::kW1, false},
    {"global_clustering", C::kLocal, K::kApe, false},
    {"ffl_count", C::kLocal, K::kApe, false},
    {"local_clustering", C::kLocal, K::kW1, false},
    {"triad_census", C::kLocal, K::kL1, true},
    {"betweenness", C::kFlow, K::kW1, true},
    {"scc_size", C::kFlow, K::kW1, false},
    {"longest_path", C::kFlow, K::kW1, false},
}};

constexpr std::array<std::string_view, 6> kCategoryNames = {"global-topology", "degree",  "meso-endogenous",
                                                             "meso-exogenous",  "local", "flow"};

template <typename Span>
std::vector<double> as_doubles(const Span& values) {
  return std::vector<double>(values.begin(), values.end());
}

unsigned bit(Category c) { return 1u << static_cast<unsigned>(c); }
constexpr unsigned kAllCategories = 0x3f;

// Records the outcome of `fn` in `slot`, turning failures into skip notes.
void guarded(Statistic& slot, const std::function<void(Statistic&)>& fn) {
  try {
    fn(slot);
  } catch (const std::exception& e) {
    slot = Statistic{};
    slot.error = e.what();
  }
}

NodeOrdering ordering_for(const MetricInput& input, const MetricConfig& config) {
  if (input.ordering) return *input.ordering;
  const LabeledGraph& g = *input.graph;
  bool complete = g.has_timestamps();
  if (complete) {
    for (const auto& t : g.timestamps()) complete = complete && t.has_value();
  }
  return order_nodes(g, complete ? OrderStrategy::kTimestamps : config.ordering);
}

GraphSummary summarize_categories(const MetricInput& input, const MetricConfig& config, std::uint64_t stream,
                                  unsigned categories) {
  if (!input.graph) throw MetricError("metric input has no graph");
  const LabeledGraph& full = *input.graph;
  GraphSummary summary;
  auto& s = summary.stats;

  // Expensive categories run on a BFS subsample drawn identically for every graph.
  LabeledGraph sub_storage;
  const bool subsample = config.subsample_nodes > 0 && full.node_count() > config.subsample_nodes;
  if (subsample) sub_storage = bfs_subsample(full, config.subsample_nodes, derive_seed(config.seed, "subsample"));
  const LabeledGraph& sub = subsample ? sub_storage : full;

  const bool exact = config.mode == MetricMode::kExact ||
                     (config.mode == MetricMode::kAuto && sub.node_count() <= config.exact_node_limit);
  const std::uint64_t detector_seed = derive_seed(config.seed, "detector");

  std::vector<std::function<void()>> tasks;
  if (categories & bit(C::kGlobalTopology)) {
    tasks.emplace_back([&] {
      PathOptions options;
      options.exact = exact;
      options.pairs = config.path_pairs;
      options.reach_sources = config.reach_sources;
      options.seed = derive_seed(config.seed, "paths", stream);
      PathStats paths;
      std::string failure;
      try {
        paths = path_statistics(sub, options);
      } catch (const std::exception& e) {
        failure = e.what();
      }
      const std::string none = failure.empty() ? "no finite-distance pairs found" : failure;
      if (paths.finite_pairs > 0 && failure.empty()) {
        s[0].scalar = paths.effective_diameter.value_or(0.0);
        s[1].scalar = paths.average_path_length.value_or(0.0);
        for (std::size_t i : {0, 1}) {
          s[i].histogram = as_doubles(paths.distance_histogram);
          s[i].draws = exact ? 0 : paths.finite_pairs;
        }
      } else {
        s[0].error = s[1].error = none;
      }
      if (!paths.reachability.empty() && failure.empty()) {
        s[2].draws = exact || paths.reachability.size() >= sub.node_count() ? 0 : paths.reachability.size();
        s[2].samples = std::move(paths.reachability);
      } else {
        s[2].error = failure.empty() ? "no reachability sources" : failure;
      }
    });
  }
  if (categories & bit(C::kDegree)) {
    tasks.emplace_back([&] {
      const DegreeView deg = degrees(full);
      s[3].samples = as_doubles(deg.in);
      s[4].samples = as_doubles(deg.out);
      guarded(s[5], [&](Statistic& x) { x.scalar = degree_assortativity(full, DegreeRole::kIn); });
      guarded(s[6], [&](Statistic& x) { x.scalar = degree_assortativity(full, DegreeRole::kOut); });
    });
  }
  if (categories & bit(C::kMesoEndogenous)) {
    tasks.emplace_back([&] {
      guarded(s[7], [&](Statistic& x) { x.scalar = directed_modularity(full); });
      guarded(s[8], [&](Statistic& x) { x.scalar = mean_conductance(full); });
      guarded(s[9], [&](Statistic& x) { x.scalar = inter_density(full); });
      guarded(s[10], [&](Statistic& x) { x.scalar = intra_density(full); });
      guarded(s[11], [&](Statistic& x) { x.samples = participation(full, DegreeRole::kIn); });
      guarded(s[12], [&](Statistic& x) { x.samples = participation(full, DegreeRole::kOut); });
    });
  }
  if (categories & bit(C::kMesoExogenous)) {
    tasks.emplace_back([&] {
      guarded(s[13], [&](Statistic& x) {
        const Detection d = label_propagation(sub, detector_seed);
        x.scalar = d.quality;
        s[16].samples = d.partition.sizes();
      });
      if (!s[13].ok()) s[16].error = s[13].error;
    });
    tasks.emplace_back([&] {
      guarded(s[14], [&](Statistic& x) {
        const Detection d = louvain(sub, config.resolution, detector_seed);
        x.scalar = d.quality;
        s[17].samples = d.partition.sizes();
      });
      if (!s[14].ok()) s[17].error = s[14].error;
    });
    tasks.emplace_back([&] {
      guarded(s[15], [&](Statistic& x) {
        const Detection d = louvain(sub, config.secondary_resolution, detector_seed);
        x.scalar = d.quality;
        s[18].samples = d.partition.sizes();
      });
      if (!s[15].ok()) s[18].error = s[15].error;
    });
  }
  if (categories & bit(C::kLocal)) {
    tasks.emplace_back([&] {
      guarded(s[19], [&](Statistic& x) { x.scalar = global_clustering(sub); });
      guarded(s[20], [&](Statistic& x) { x.scalar = static_cast<double>(ffl_count(sub)); });
      guarded(s[21], [&](Statistic& x) { x.samples = local_clustering(sub); });
    });
    tasks.emplace_back([&] {
      guarded(s[22], [&](Statistic& x) {
        TriadOptions options;
        options.exact_limit = config.mode == MetricMode::kExact ? std::numeric_limits<std::size_t>::max()
                                                                : config.triad_exact_limit;
        options.force_sampled = config.mode == MetricMode::kSampled;
        options.samples = config.triad_samples;
        options.seed = derive_seed(config.seed, "triads", stream);
        const auto census = triad_census(sub, options);
        x.samples.assign(census.begin(), census.end());
        if (options.force_sampled || sub.node_count() > options.exact_limit) x.draws = options.samples;
      });
    });
  }
  if (categories & bit(C::kFlow)) {
    tasks.emplace_back([&] {
      guarded(s[23], [&](Statistic& x) {
        const std::size_t sources = exact ? sub.node_count() : config.betweenness_sources;
        x.samples = betweenness(sub, sources, derive_seed(config.seed, "betweenness", stream));
        if (sources < sub.node_count()) x.draws = sources;
        if (x.samples.empty()) throw MetricError("betweenness undefined: empty graph");
      });
    });
    tasks.emplace_back([&] {
      guarded(s[24], [&](Statistic& x) { x.samples = as_doubles(scc_sizes(full)); });
      guarded(s[25], [&](Statistic& x) { x.samples = as_doubles(longest_paths(full, ordering_for(input, config))); });
    });
  }

  parallel_for(tasks.size(), [&](std::size_t i) { tasks[i](); }, std::max<std::size_t>(config.threads, 1));

  for (std::size_t i = 0; i < kMetricCount; ++i) {
    if (!(categories & bit(kCatalogue[i].category))) s[i].error = "category not evaluated";
  }
  return summary;
}

MetricEntry entry_for(std::size_t i, const Statistic& real, const Statistic& synth) {
  const MetricInfo& info = kCatalogue[i];
  MetricEntry entry{std::string(info.name), info.category, info.kind, 0.0, false, {}};
  auto skip = [&](const std::string& why) {
    entry.skipped = true;
    entry.value = std::numeric_limits<double>::quiet_NaN();
    entry.note = why;
  };
  if (!real.ok()) {
    skip("real: " + real.error);
    return entry;
  }
  if (!synth.ok()) {
    skip("synthetic: " + synth.error);
    return entry;
  }
  try {
    switch (info.kind) {
      case K::kApe: entry.value = ape(synth.scalar, real.scalar); break;
      case K::kW1: entry.value = wasserstein1(synth.samples, real.samples); break;
      case K::kL1: entry.value = l1(synth.samples, real.samples); break;
    }
  } catch (const std::exception& e) {
    skip(e.what());
  }
  return entry;
}

std::vector<MetricEntry> category_rows(const MetricInput& real, const MetricInput& synth, const MetricConfig& config,
                                       Category category) {
  const auto a = summarize_categories(real, config, 0, bit(category));
  const auto b = summarize_categories(synth, config, 1, bit(category));
  std::vector<MetricEntry> rows;
  for (std::size_t i = 0; i < kMetricCount; ++i) {
    if (kCatalogue[i].category == category) rows.push_back(entry_for(i, a.stats[i], b.stats[i]));
  }
  return rows;
}

}  // namespace

std::string_view to_string(Category category) { return kCategoryNames.at(static_cast<std::size_t>(category)); }

std::string_view to_string(DistanceKind kind) {
  switch (kind) {
    case K::kApe: return "APE";
    case K::kW1: return "W1";
    case K::kL1: return "L1";
  }
  return "unknown";
}

Category parse_category(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  }
  throw MetricError("unknown metric category '" + std::string(name) + "'");
}

DistanceKind parse_distance_kind(std::string_view name) {
  if (name == "APE") return K::kApe;
  if (name == "W1") return K::kW1;
  if (name == "L1") return K::kL1;
  throw MetricError("unknown distance kind '" + std::string(name) + "'");
}

std::span<const MetricInfo> metric_catalogue() { return kCatalogue; }

std::size_t metric_index(std::string_view name) {
  for (std::size_t i = 0; i < kMetricCount; ++i) {
    if (kCatalogue[i].name == name) return i;
  }
  throw MetricError("unknown metric '" + std::string(name) + "'");
}

MetricMode parse_metric_mode(std::string_view name) {
  if (name == "auto") return MetricMode::kAuto;
  if (name == "exact") return MetricMode::kExact;
  if (name == "sampled") return MetricMode::kSampled;
  throw MetricError("unknown metric mode '" + std::string(name) + "' (expected auto, exact or sampled)");
}

std::string_view to_string(MetricMode mode) {
  switch (mode) {
    case MetricMode::kAuto: return "auto";
    case MetricMode::kExact: return "exact";
    case MetricMode::kSampled: return "sampled";
  }
  return "unknown";
}

GraphSummary summarize(const MetricInput& input, const MetricConfig& config, std::uint64_t stream) {
  return summarize_categories(input, config, stream, kAllCategories);
}

std::size_t MetricReport::computed() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += !e.skipped;
  return n;
}

const MetricEntry& MetricReport::at(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw MetricError("report has no metric '" + std::string(name) + "'");
}

MetricReport compare_summaries(const GraphSummary& real, const GraphSummary& synth) {
  MetricReport report;
  report.entries.reserve(kMetricCount);
  for (std::size_t i = 0; i < kMetricCount; ++i) report.entries.push_back(entry_for(i, real.stats[i], synth.stats[i]));
  return report;
}

namespace {

// Interpolated q-quantile of a histogram indexed by value.
double histogram_quantile(const std::vector<double>& histogram, double q) {
  double total = 0.0;
  for (double c : histogram) total += c;
  const double pos = std::clamp(q, 0.0, 1.0) * (total - 1.0);
  const double lo = std::floor(pos);
  auto value_at = [&](double index) {
    double seen = 0.0;
    for (std::size_t d = 0; d < histogram.size(); ++d) {
      seen += histogram[d];
      if (index < seen) return static_cast<double>(d);
    }
    return static_cast<double>(histogram.size() - 1);
  };
  const double a = value_at(lo);
  const double b = value_at(std::min(lo + 1.0, total - 1.0));
  return a + (pos - lo) * (b - a);
}

std::pair<double, double> histogram_mean_variance(const std::vector<double>& histogram) {
  double n = 0.0, sum = 0.0, sq = 0.0;
  for (std::size_t d = 0; d < histogram.size(); ++d) {
    const double x = static_cast<double>(d);
    n += histogram[d];
    sum += x * histogram[d];
    sq += x * x * histogram[d];
  }
  const double mean = sum / n;
  return {mean, n > 1.0 ? (sq - n * mean * mean) / (n - 1.0) : 0.0};
}

// Integral of sqrt(F (1 - F)) under the empirical distribution of `values`.
double j_functional(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double j = 0.0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double f = static_cast<double>(i + 1) / n;
    j += std::sqrt(f * (1.0 - f)) * (values[i + 1] - values[i]);
  }
  return j;
}

double mean_of(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return values.empty() ? 0.0 : sum / static_cast<double>(values.size());
}

// A sample that is exact contributes no noise.
double inverse_sqrt(std::size_t n) { return n == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(n)); }

}  // namespace

double sampling_noise_bound(std::size_t metric, const Statistic& real, const Statistic& synth) {
  if (metric >= kMetricCount) throw MetricError("metric index out of range");
  if (!real.ok() || !synth.ok()) throw MetricError("noise bound needs two defined statistics");
  if (real.draws == 0 && synth.draws == 0) return 0.0;
  const std::string_view name = kCatalogue[metric].name;
  if (name == "effective_diameter") {
    const double level = std::log(2.0 / 1e-3);
    const double eps = std::sqrt(level / 2.0) * (inverse_sqrt(real.draws) + inverse_sqrt(synth.draws));
    const double spread = histogram_quantile(real.histogram, 0.9 + eps) - histogram_quantile(real.histogram, 0.9 - eps);
    return spread / std::abs(real.scalar);
  }
  if (name == "average_path_length") {
    const auto [mean_a, var_a] = histogram_mean_variance(real.histogram);
    const auto [mean_b, var_b] = histogram_mean_variance(synth.histogram);
    const double se2 = (real.draws ? var_a / static_cast<double>(real.draws) : 0.0) +
                       (synth.draws ? var_b / static_cast<double>(synth.draws) : 0.0);
    return 4.0 * std::sqrt(se2) / std::abs(mean_a);
  }
  if (name == "reachability") {
    return 3.0 * j_functional(real.samples) * (inverse_sqrt(real.draws) + inverse_sqrt(synth.draws));
  }
  if (name == "triad_census") {
    const double inv = (real.draws ? 1.0 / static_cast<double>(real.draws) : 0.0) +
                       (synth.draws ? 1.0 / static_cast<double>(synth.draws) : 0.0);
    double bound = 0.0;
    for (std::size_t t = 0; t < real.samples.size() && t < synth.samples.size(); ++t) {
      const double p = 0.5 * (real.samples[t] + synth.samples[t]);
      bound += std::sqrt(p * (1.0 - p) * inv);
    }
    return 3.0 * bound;
  }
  if (name == "betweenness") {
    const double inv = (real.draws ? 1.0 / static_cast<double>(real.draws) : 0.0) +
                       (synth.draws ? 1.0 / static_cast<double>(synth.draws) : 0.0);
    return 3.0 * std::sqrt(inv) * mean_of(real.samples);
  }
  return 0.0;
}

MetricReport compare(const MetricInput& real, const MetricInput& synth, const MetricConfig& config) {
  return compare_summaries(summarize(real, config, 0), summarize(synth, config, 1));
}

std::vector<MetricEntry> global_topology_metrics(const MetricInput& real, const MetricInput& synth,
                                                 const MetricConfig& config) {
  return category_rows(real, synth, config, C::kGlobalTopology);
}

std::vector<MetricEntry> degree_metrics(const LabeledGraph& real, const LabeledGraph& synth) {
  return category_rows({&real}, {&synth}, {}, C::kDegree);
}

std::vector<MetricEntry> endogenous_metrics(const LabeledGraph& real, const LabeledGraph& synth) {
  return category_rows({&real}, {&synth}, {}, C::kMesoEndogenous);
}

std::vector<MetricEntry> exogenous_metrics(const LabeledGraph& real, const LabeledGraph& synth,
                                           const MetricConfig& config) {
  return category_rows({&real}, {&synth}, config, C::kMesoExogenous);
}

std::vector<MetricEntry> local_metrics(const LabeledGraph& real, const LabeledGraph& synth,
                                       const MetricConfig& config) {
  return category_rows({&real}, {&synth}, config, C::kLocal);
}

std::vector<MetricEntry> flow_metrics(const MetricInput& real, const MetricInput& synth, const MetricConfig& config) {
  return category_rows(real, synth, config, C::kFlow);
}

void write_report(std::ostream& out, const MetricReport& report) {
  out << "metric\tcategory\tkind\tvalue\tskipped\n";
  std::ostringstream value;
  for (const auto& e : report.entries) {
    value.str({});
    if (e.skipped) {
      value << "nan";
    } else {
      value.precision(17);
      value << e.value;
    }
    out << e.name << '\t' << to_string(e.category) << '\t' << to_string(e.kind) << '\t' << value.str() << '\t'
        << (e.skipped ? 1 : 0) << '\n';
  }
}

void write_report(const std::filesystem::path& path, const MetricReport& report) {
  std::ofstream out(path);
  if (!out) throw MetricError("cannot write report " + path.string());
  write_report(out, report);
}

MetricReport read_report(std::istream& in) {
  MetricReport report;
  std::string line;
  if (!std::getline(in, line) || line.rfind("metric\t", 0) != 0) throw MetricError("report: missing header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string name, category, kind, value, skipped;
    if (!std::getline(row, name, '\t') || !std::getline(row, category, '\t') || !std::getline(row, kind, '\t') ||
        !std::getline(row, value, '\t') || !std::getline(row, skipped, '\t')) {
      throw MetricError("report: malformed row '" + line + "'");
    }
    MetricEntry e;
    e.name = name;
    e.category = parse_category(category);
    e.kind = parse_distance_kind(kind);
    e.skipped = skipped == "1";
    e.value = e.skipped ? std::numeric_limits<double>::quiet_NaN() : std::stod(value);
    report.entries.push_back(std::move(e));
  }
  return report;
}

MetricReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MetricError("cannot read report " + path.string());
  return read_report(in);
}

}  // namespace citegen::metrics
