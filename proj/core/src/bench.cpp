#include "citegen/bench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "citegen/baselines.hpp"
#include "citegen/cs_generator.hpp"
#include "citegen/estimation.hpp"
#include "citegen/parallel.hpp"
#include "citegen/random.hpp"

namespace citegen::bench {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct MethodSpec {
  bool cs = false;
  bool dag_only = false;
  BaselineKind baseline = BaselineKind::kEr;
  bool near_dag = false;
};

MethodSpec parse_method(std::string_view name) {
  MethodSpec spec;
  if (name == "cs") {
    spec.cs = true;
    return spec;
  }
  if (name == "cs-dag") {
    spec.cs = true;
    spec.dag_only = true;
    return spec;
  }
  std::string_view base = name;
  if (base.size() > 3 && base.substr(base.size() - 3) == "-nd") {
    spec.near_dag = true;
    base.remove_suffix(3);
  }
  try {
    spec.baseline = parse_baseline_kind(base);
  } catch (const BaselineError&) {
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
  }
  return spec;
}

double finite_mean(const std::vector<double>& xs) {
  double sum = 0.0;
  std::size_t n = 0;
  for (double x : xs) {
    if (std::isfinite(x)) {
      sum += x;
      ++n;
    }
  }
  return n == 0 ? kNaN : sum / static_cast<double>(n);
}

std::vector<double> finite_only(const std::vector<double>& xs) {
  std::vector<double> out;
  for (double x : xs) {
    if (std::isfinite(x)) out.push_back(x);
  }
  return out;
}

BenchView build_view(const std::string& name, const std::vector<std::string>& methods,
                     const std::vector<DatasetRuns>& datasets, const std::vector<std::size_t>& metric_ids,
                     const BenchConfig& config, std::uint64_t view_index) {
  const auto catalogue = metrics::metric_catalogue();
  const std::size_t k = methods.size();

  std::vector<std::string> blocks;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<std::vector<double>>> runs;
  std::vector<std::size_t> block_dataset, block_metric;
  std::vector<std::string> warnings;
  for (std::size_t d = 0; d < datasets.size(); ++d) {
    for (std::size_t metric : metric_ids) {
      std::vector<double> row(k);
      std::vector<std::vector<double>> block_runs(k);
      bool complete = true;
      for (std::size_t j = 0; j < k; ++j) {
        row[j] = finite_mean(datasets[d].distances[j][metric]);
        block_runs[j] = finite_only(datasets[d].distances[j][metric]);
        complete = complete && std::isfinite(row[j]);
      }
      const std::string block = datasets[d].name + "/" + std::string(catalogue[metric].name);
      if (!complete) {
        warnings.push_back("block " + block + " dropped: metric undefined for some method");
        continue;
      }
      blocks.push_back(block);
      values.push_back(std::move(row));
      runs.push_back(std::move(block_runs));
      block_dataset.push_back(d);
      block_metric.push_back(metric);
    }
  }

  BenchView view;
  view.name = name;
  view.table = stats::rank_blocks(methods, std::move(blocks), std::move(values));
  view.table.warnings.insert(view.table.warnings.begin(), warnings.begin(), warnings.end());
  const std::size_t n = view.table.block_count();

  if (k >= 3 && n >= 2) {
    view.friedman_blocks = stats::friedman(view.table);
  } else {
    view.friedman_note = "friedman needs at least 3 methods and 2 blocks";
  }

  // Dataset level: a method's mean block rank within each dataset, re-ranked.
  std::vector<std::string> names;
  std::vector<std::vector<double>> per_dataset;
  for (std::size_t d = 0; d < datasets.size(); ++d) {
    std::vector<double> sum(k, 0.0);
    std::size_t count = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (block_dataset[b] != d) continue;
      for (std::size_t j = 0; j < k; ++j) sum[j] += view.table.ranks[b][j];
      ++count;
    }
    if (count == 0) continue;
    for (double& s : sum) s /= static_cast<double>(count);
    names.push_back(datasets[d].name);
    per_dataset.push_back(std::move(sum));
  }
  if (k >= 3 && per_dataset.size() >= 2) {
    view.friedman_datasets = stats::friedman(stats::rank_blocks(methods, names, per_dataset));
  } else if (view.friedman_note.empty()) {
    view.friedman_note = "dataset-level friedman needs at least 2 datasets";
  }

  view.wtl = stats::wtl_matrix(runs, config.alpha);
  if (runs.empty()) {
    view.wtl.wins.assign(k, std::vector<std::size_t>(k, 0));
    view.wtl.ties = view.wtl.losses = view.wtl.wins;
  }
  if (n > 0) {
    view.intervals = stats::bootstrap_ci(view.table, config.bootstrap_draws,
                                         derive_seed(config.seed, "bootstrap-view", view_index), config.threads);
  }

  constexpr std::size_t kCategories = 6;
  view.category_ranks.assign(kCategories, std::vector<double>(k, 0.0));
  std::vector<std::size_t> counts(kCategories, 0);
  for (std::size_t b = 0; b < n; ++b) {
    const auto c = static_cast<std::size_t>(catalogue[block_metric[b]].category);
    for (std::size_t j = 0; j < k; ++j) view.category_ranks[c][j] += view.table.ranks[b][j];
    ++counts[c];
  }
  for (std::size_t c = 0; c < kCategories; ++c) {
    for (double& r : view.category_ranks[c]) r = counts[c] == 0 ? kNaN : r / static_cast<double>(counts[c]);
  }
  return view;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.precision(17);
  return out;
}

void write_view(const std::filesystem::path& dir, const std::string& suffix, const BenchView& view) {
  const auto& t = view.table;
  {
    auto out = open_out(dir / ("ranks" + suffix + ".tsv"));
    out << "block";
    for (const auto& m : t.methods) out << '\t' << m;
    out << '\n';
    for (std::size_t b = 0; b < t.block_count(); ++b) {
      out << t.blocks[b];
      for (double r : t.ranks[b]) out << '\t' << r;
      out << '\n';
    }
  }
  {
    auto out = open_out(dir / ("mean_ranks" + suffix + ".tsv"));
    out << "method\tmean_rank\tci_low\tci_high\n";
    for (std::size_t j = 0; j < t.method_count(); ++j) {
      out << t.methods[j];
      if (j < view.intervals.size()) {
        out << '\t' << view.intervals[j].mean_rank << '\t' << view.intervals[j].low << '\t' << view.intervals[j].high;
      } else {
        out << "\tnan\tnan\tnan";
      }
      out << '\n';
    }
  }
  {
    auto out = open_out(dir / ("wtl" + suffix + ".tsv"));
    out << "method\topponent\twins\tties\tlosses\n";
    for (std::size_t i = 0; i < t.method_count(); ++i) {
      for (std::size_t j = 0; j < t.method_count(); ++j) {
        if (i == j) continue;
        out << t.methods[i] << '\t' << t.methods[j] << '\t' << view.wtl.wins[i][j] << '\t' << view.wtl.ties[i][j]
            << '\t' << view.wtl.losses[i][j] << '\n';
      }
    }
  }
  {
    auto out = open_out(dir / ("category_ranks" + suffix + ".tsv"));
    out << "category";
    for (const auto& m : t.methods) out << '\t' << m;
    out << '\n';
    for (std::size_t c = 0; c < view.category_ranks.size(); ++c) {
      out << metrics::to_string(static_cast<metrics::Category>(c));
      for (double r : view.category_ranks[c]) out << '\t' << r;
      out << '\n';
    }
  }
}

void write_friedman_row(std::ostream& out, const std::string& view, const char* level,
                        const std::optional<stats::FriedmanResult>& f) {
  out << view << '\t' << level << '\t';
  if (f) {
    out << f->chi2 << '\t' << f->p_value << '\t' << f->blocks << '\t' << f->methods << '\n';
  } else {
    out << "nan\tnan\t0\t0\n";
  }
}

}  // namespace

bool is_known_method(std::string_view name) {
  try {
    parse_method(name);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<std::string> all_methods() {
  return {"cs", "cs-dag", "er", "er-nd", "config", "config-nd", "sbm", "sbm-nd", "dcsbm", "dcsbm-nd"};
}

std::vector<std::size_t> non_endogenous_metrics() {
  std::vector<std::size_t> out;
  const auto catalogue = metrics::metric_catalogue();
  for (std::size_t i = 0; i < catalogue.size(); ++i) {
    if (catalogue[i].category != metrics::Category::kMesoEndogenous) out.push_back(i);
  }
  return out;
}

NodeOrdering real_ordering(const LabeledGraph& graph, OrderStrategy fallback) {
  const auto ts = graph.timestamps();
  const bool complete = graph.has_timestamps() && std::all_of(ts.begin(), ts.end(), [](const auto& t) {
                          return t.has_value();
                        });
  return order_nodes(graph, complete ? OrderStrategy::kTimestamps : fallback);
}

LabeledGraph sample_method(std::string_view method, const LabeledGraph& real, double back_edge_ratio,
                           OrderStrategy strategy, std::uint64_t seed) {
  const MethodSpec spec = parse_method(method);
  if (spec.cs) {
    const EstimateResult fit = estimate(real);
    LabeledGraph dag = generate(fit.params, real.node_count(), derive_seed(seed, "generate"));
    if (spec.dag_only) return dag;
    return std::move(inject_back_edges(dag, back_edge_ratio, derive_seed(seed, "inject")).graph);
  }
  BaselineSample sample = fit_and_generate(spec.baseline, real, derive_seed(seed, "baseline"));
  if (!sample.graph.has_labels() && real.has_labels()) {
    sample.graph.set_labels(std::vector<CommunityId>(real.labels().begin(), real.labels().end()));
  }
  if (!spec.near_dag) return std::move(sample.graph);
  return std::move(cycle_break(sample.graph, back_edge_ratio, derive_seed(seed, "decycle"), strategy).graph);
}

BenchResult run_bench(const std::vector<Dataset>& datasets, const BenchConfig& config) {
  if (config.methods.size() < 2) throw std::invalid_argument("bench needs at least two methods");
  if (datasets.empty()) throw std::invalid_argument("bench needs at least one dataset");
  if (config.replicates == 0) throw std::invalid_argument("bench needs at least one replicate");
  for (const auto& m : config.methods) parse_method(m);

  metrics::MetricConfig metric_config = config.metrics;
  metric_config.seed = config.seed;
  metric_config.ordering = config.ordering;

  BenchResult result;
  result.methods = config.methods;
  const std::size_t k = config.methods.size();
  for (const auto& dataset : datasets) {
    const NodeOrdering ordering = real_ordering(dataset.graph, config.ordering);
    DatasetRuns runs;
    runs.name = dataset.name;
    runs.back_edge_ratio = back_edge_ratio(dataset.graph, ordering);

    metrics::MetricConfig real_config = metric_config;
    real_config.threads = config.threads;
    const metrics::GraphSummary real = metrics::summarize({&dataset.graph, &ordering}, real_config, 0);

    metrics::MetricConfig synth_config = metric_config;
    synth_config.threads = 1;
    runs.distances.assign(k, std::vector<std::vector<double>>(metrics::kMetricCount,
                                                              std::vector<double>(config.replicates, kNaN)));
    parallel_for(
        k * config.replicates,
        [&](std::size_t task) {
          const std::size_t j = task / config.replicates;
          const std::size_t rep = task % config.replicates;
          const std::uint64_t seed = derive_seed(config.seed, "sample/" + dataset.name + "/" + config.methods[j], rep);
          const LabeledGraph synth =
              sample_method(config.methods[j], dataset.graph, runs.back_edge_ratio, config.ordering, seed);
          const auto summary = metrics::summarize({&synth, nullptr}, synth_config, rep + 1);
          const auto report = metrics::compare_summaries(real, summary);
          for (std::size_t i = 0; i < metrics::kMetricCount; ++i) {
            if (!report.entries[i].skipped) runs.distances[j][i][rep] = report.entries[i].value;
          }
        },
        config.threads);
    result.datasets.push_back(std::move(runs));
  }

  std::vector<std::size_t> every(metrics::kMetricCount);
  for (std::size_t i = 0; i < every.size(); ++i) every[i] = i;
  result.all = build_view("all", result.methods, result.datasets, every, config, 0);
  result.no_endogenous = build_view("no_endogenous", result.methods, result.datasets, non_endogenous_metrics(),
                                    config, 1);
  return result;
}

void write_bench(const std::filesystem::path& dir, const BenchResult& result) {
  std::filesystem::create_directories(dir);
  {
    auto out = open_out(dir / "runs.tsv");
    out << "dataset\tmethod\tmetric\treplicate\tdistance\n";
    const auto catalogue = metrics::metric_catalogue();
    for (const auto& d : result.datasets) {
      for (std::size_t j = 0; j < result.methods.size(); ++j) {
        for (std::size_t i = 0; i < metrics::kMetricCount; ++i) {
          for (std::size_t r = 0; r < d.distances[j][i].size(); ++r) {
            out << d.name << '\t' << result.methods[j] << '\t' << catalogue[i].name << '\t' << r << '\t';
            const double x = d.distances[j][i][r];
            if (std::isfinite(x)) {
              out << x;
            } else {
              out << "nan";
            }
            out << '\n';
          }
        }
      }
    }
  }
  write_view(dir, "", result.all);
  write_view(dir, "_no_endogenous", result.no_endogenous);
  {
    auto out = open_out(dir / "friedman.tsv");
    out << "view\tlevel\tchi2\tp_value\tblocks\tmethods\n";
    for (const BenchView* v : {&result.all, &result.no_endogenous}) {
      write_friedman_row(out, v->name, "blocks", v->friedman_blocks);
      write_friedman_row(out, v->name, "datasets", v->friedman_datasets);
    }
  }
  {
    auto out = open_out(dir / "warnings.txt");
    for (const BenchView* v : {&result.all, &result.no_endogenous}) {
      for (const auto& w : v->table.warnings) out << v->name << ": " << w << '\n';
      if (!v->friedman_note.empty()) out << v->name << ": " << v->friedman_note << '\n';
    }
  }
}

}  // namespace citegen::bench
