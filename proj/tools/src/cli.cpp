#include "citegen/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "citegen/baselines.hpp"
#include "citegen/bench.hpp"
#include "citegen/cs_generator.hpp"
#include "citegen/cs_theory.hpp"
#include "citegen/estimation.hpp"
#include "citegen/graph_io.hpp"
#include "citegen/metrics/battery.hpp"
#include "citegen/neardag.hpp"
#include "citegen/parallel.hpp"
#include "citegen/params_io.hpp"
#include "citegen/random.hpp"
#include "json_config.hpp"

namespace citegen::cli {

namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kSubcommands = {"fit",     "generate", "decycle",        "baseline",
                                               "compare", "bench",    "validate-theory"};
const std::vector<std::string> kStrategies = {"degree-diff", "eades", "timestamps"};
const std::vector<std::string> kBaselines = {"er", "config", "sbm", "dcsbm"};
const std::vector<std::string> kModes = {"auto", "exact", "sampled"};

struct GraphFiles {
  std::string edges;
  std::string labels;
  std::string timestamps;
};

struct Common {
  std::optional<std::uint64_t> seed;
  std::size_t threads = default_thread_count();
  bool header = false;
  std::string ordering = "degree-diff";
};

struct MetricFlags {
  std::string mode = "auto";
  std::size_t pairs = 2000;
  std::size_t reach_sources = 200;
  std::size_t betweenness_sources = 200;
  std::size_t triad_samples = 200000;
  std::size_t subsample = 50000;
  double resolution = 1.0;
  double secondary_resolution = 0.5;
};

struct Options {
  Common common;
  GraphFiles input;
  std::string out;
  std::string report;
  // generate / decycle / baseline
  std::string params;
  std::optional<std::size_t> nodes;
  bool dag_only = false;
  std::optional<double> back_edge_ratio;
  std::string baseline;
  bool near_dag = false;
  // compare
  GraphFiles synth;
  MetricFlags metric;
  // bench
  std::vector<std::string> datasets;
  std::vector<std::string> methods;
  std::size_t replicates = 50;
  std::size_t bootstrap_draws = 10000;
  double alpha = 0.05;
  // validate-theory
  std::vector<double> rhos = {0.2, 0.5, 0.9};
  std::size_t theory_nodes = 30000;
  std::size_t communities = 3;
  double mean_degree = 5.0;
  double variance = 10.0;
};

std::uint64_t resolve_seed(const Common& common, std::ostream& err) {
  if (common.seed) return *common.seed;
  const std::uint64_t seed = entropy_seed();
  err << "seed: " << seed << '\n';
  return seed;
}

/// Edges plus optional labels and timestamps. Nodes that only appear in the
/// labels file are added as isolated nodes; unlabelled nodes are dropped
/// when `require_labels` is set.
LabeledGraph load_graph(const GraphFiles& files, bool header, bool require_labels, std::ostream& err) {
  EdgeListLoad load = load_edge_list(fs::path(files.edges), header);
  if (load.self_loops > 0 || load.duplicate_edges > 0) {
    err << files.edges << ": dropped " << load.self_loops << " self-loops and " << load.duplicate_edges
        << " duplicate edges\n";
  }
  LabeledGraph graph = std::move(load.graph);
  if (!files.labels.empty()) {
    LabelLoad labels = load_labels(fs::path(files.labels), graph, header, UnknownNodePolicy::kAddIsolated);
    graph.set_labels(std::move(labels.labels));
    if (labels.unlabelled > 0 && require_labels) {
      err << files.labels << ": dropping " << labels.unlabelled << " unlabelled nodes\n";
      graph = prune_unlabelled(graph);
    }
  } else if (require_labels) {
    throw UsageError("a labels file is required");
  }
  if (!files.timestamps.empty()) graph.set_timestamps(load_timestamps(fs::path(files.timestamps), graph, header));
  return graph;
}

void ensure_parent(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
}

void write_graph(const fs::path& dir, const LabeledGraph& graph) {
  fs::create_directories(dir);
  write_edge_list(dir / "edges.tsv", graph);
  if (graph.has_labels()) write_labels(dir / "labels.tsv", graph);
}

void write_text(const fs::path& path, const std::string& text) {
  ensure_parent(path);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

metrics::MetricConfig metric_config(const Options& o, std::uint64_t seed) {
  metrics::MetricConfig config;
  config.seed = seed;
  config.mode = metrics::parse_metric_mode(o.metric.mode);
  config.path_pairs = o.metric.pairs;
  config.reach_sources = o.metric.reach_sources;
  config.betweenness_sources = o.metric.betweenness_sources;
  config.triad_samples = o.metric.triad_samples;
  config.subsample_nodes = o.metric.subsample;
  config.resolution = o.metric.resolution;
  config.secondary_resolution = o.metric.secondary_resolution;
  config.ordering = parse_order_strategy(o.common.ordering);
  config.threads = o.common.threads;
  return config;
}

int cmd_fit(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledGraph graph = load_graph(o.input, o.common.header, true, err);
  const EstimateResult fit = estimate(graph);
  CsModel model;
  model.params = fit.params;
  model.node_count = graph.node_count();
  model.back_edge_ratio =
      back_edge_ratio(graph, bench::real_ordering(graph, parse_order_strategy(o.common.ordering)));
  save_cs_model(fs::path(o.out), model);

  std::ostringstream report;
  report << std::setprecision(10);
  report << "community\tsize\tp\tm\tsigma2\trho\trho_raw\tclamp\n";
  for (std::size_t i = 0; i < fit.communities.size(); ++i) {
    const auto& c = fit.communities[i];
    report << (i + 1) << '\t' << c.stats.size << '\t' << fit.params.p[i] << '\t' << fit.params.m[i] << '\t'
           << fit.params.sigma2[i] << '\t' << fit.params.rho[i] << '\t' << c.rho_raw << '\t' << to_string(c.rho_clamp)
           << '\n';
  }
  report << "# nodes " << graph.node_count() << ", edges " << graph.edge_count() << ", back-edge ratio "
         << *model.back_edge_ratio << '\n';
  const auto clamped = fit.clamped_communities();
  if (!clamped.empty()) {
    report << "# clamped communities:";
    for (auto c : clamped) report << ' ' << c;
    report << '\n';
  }
  out << report.str();
  if (!o.report.empty()) write_text(fs::path(o.report), report.str());
  return kExitOk;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  const CsModel model = load_cs_model(fs::path(o.params));
  const std::size_t n = o.nodes ? *o.nodes : model.node_count.value_or(0);
  if (n == 0) throw UsageError("--nodes is required when the parameter file has no node_count");
  const std::uint64_t seed = resolve_seed(o.common, err);
  LabeledGraph graph = generate(model.params, n, seed);
  const std::size_t dag_edges = graph.edge_count();
  std::size_t back = 0;
  if (!o.dag_only) {
    const double r = o.back_edge_ratio.value_or(model.back_edge_ratio.value_or(0.0));
    InjectionResult injected = inject_back_edges(graph, r, derive_seed(seed, "inject"));
    if (injected.exhausted()) {
      err << "warning: injected " << injected.injected << " of " << injected.requested << " back-edges\n";
    }
    back = injected.injected;
    graph = std::move(injected.graph);
  }
  write_graph(fs::path(o.out), graph);
  out << "nodes\t" << graph.node_count() << "\ndag_edges\t" << dag_edges << "\nback_edges\t" << back << '\n';
  return kExitOk;
}

int cmd_decycle(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledGraph graph = load_graph(o.input, o.common.header, false, err);
  OrderStrategy strategy = parse_order_strategy(o.common.ordering);
  if (!o.input.timestamps.empty()) strategy = OrderStrategy::kTimestamps;
  const double r = o.back_edge_ratio ? *o.back_edge_ratio : back_edge_ratio(graph, order_nodes(graph, strategy));
  const std::uint64_t seed = resolve_seed(o.common, err);
  const CycleBreakResult result = cycle_break(graph, r, seed, strategy);
  ensure_parent(fs::path(o.out));
  write_edge_list(fs::path(o.out), result.graph);
  out << "edges\t" << result.graph.edge_count() << "\nback_edge_ratio\t" << std::setprecision(10) << r
      << "\nreversed\t" << result.reversed << '\n';
  return kExitOk;
}

int cmd_baseline(const Options& o, std::ostream& out, std::ostream& err) {
  const BaselineKind kind = parse_baseline_kind(o.baseline);
  if (needs_labels(kind) && o.input.labels.empty()) throw UsageError(o.baseline + " needs --labels");
  const LabeledGraph real = load_graph(o.input, o.common.header, needs_labels(kind), err);
  const std::uint64_t seed = resolve_seed(o.common, err);
  const std::uint64_t stream = derive_seed(seed, "baseline");

  BaselineSample sample;
  std::string fit_json;
  switch (kind) {
    case BaselineKind::kEr: {
      const ErFit fit = fit_er(real);
      sample.graph = generate_er(fit, stream);
      fit_json = to_json_string(fit);
      break;
    }
    case BaselineKind::kConfig: {
      const ConfigFit fit = fit_config(real);
      sample = generate_config(fit, stream);
      fit_json = to_json_string(fit);
      break;
    }
    case BaselineKind::kSbm:
    case BaselineKind::kDcsbm: {
      const SbmFit fit = kind == BaselineKind::kSbm ? fit_sbm(real) : fit_dcsbm(real);
      sample = kind == BaselineKind::kSbm ? generate_sbm(fit, stream) : generate_dcsbm(fit, stream);
      fit_json = to_json_string(fit);
      break;
    }
  }
  for (const auto& w : sample.report.warnings) err << "warning: " << w << '\n';
  LabeledGraph graph = std::move(sample.graph);
  if (!graph.has_labels() && real.has_labels()) graph.set_labels({real.labels().begin(), real.labels().end()});
  if (real.has_names()) graph.set_names({real.names().begin(), real.names().end()});

  std::size_t reversed = 0;
  if (o.near_dag) {
    const OrderStrategy strategy = parse_order_strategy(o.common.ordering);
    const double r = o.back_edge_ratio ? *o.back_edge_ratio
                                       : back_edge_ratio(real, bench::real_ordering(real, strategy));
    const OrderStrategy own = strategy == OrderStrategy::kTimestamps ? OrderStrategy::kDegreeDiff : strategy;
    CycleBreakResult broken = cycle_break(graph, r, derive_seed(seed, "decycle"), own);
    reversed = broken.reversed;
    graph = std::move(broken.graph);
  }
  const fs::path dir(o.out);
  write_graph(dir, graph);
  write_text(dir / "fit.json", fit_json + "\n");
  out << "nodes\t" << graph.node_count() << "\nedges\t" << graph.edge_count() << "\nself_loops_erased\t"
      << sample.report.self_loops_erased << "\nduplicates_erased\t" << sample.report.duplicates_erased
      << "\nreversed\t" << reversed << '\n';
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const LabeledGraph real = load_graph(o.input, o.common.header, false, err);
  const LabeledGraph synth = load_graph(o.synth, o.common.header, false, err);
  const std::uint64_t seed = resolve_seed(o.common, err);
  const metrics::MetricConfig config = metric_config(o, seed);
  const metrics::MetricReport report = metrics::compare({&real, nullptr}, {&synth, nullptr}, config);
  if (o.out.empty()) {
    metrics::write_report(out, report);
  } else {
    ensure_parent(fs::path(o.out));
    metrics::write_report(fs::path(o.out), report);
    out << "metrics\t" << report.computed() << " of " << report.entries.size() << '\n';
  }
  for (const auto& e : report.entries) {
    if (e.skipped) err << "skipped " << e.name << ": " << e.note << '\n';
  }
  return kExitOk;
}

/// NAME=EDGES,LABELS[,TIMESTAMPS]
GraphFiles parse_dataset(const std::string& text, std::string& name) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("dataset must be NAME=EDGES,LABELS[,TIMESTAMPS]: " + text);
  name = text.substr(0, eq);
  std::vector<std::string> parts;
  std::stringstream rest(text.substr(eq + 1));
  for (std::string part; std::getline(rest, part, ',');) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3) throw UsageError("dataset must be NAME=EDGES,LABELS[,TIMESTAMPS]: " + text);
  GraphFiles files{parts[0], parts[1], parts.size() == 3 ? parts[2] : ""};
  for (const auto& p : parts) {
    if (!fs::exists(p)) throw UsageError("no such file: " + p);
  }
  return files;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<bench::Dataset> datasets;
  for (const auto& text : o.datasets) {
    bench::Dataset d;
    const GraphFiles files = parse_dataset(text, d.name);
    d.graph = load_graph(files, o.common.header, true, err);
    datasets.push_back(std::move(d));
  }
  bench::BenchConfig config;
  config.methods = o.methods.empty() ? bench::all_methods() : o.methods;
  for (const auto& m : config.methods) {
    if (!bench::is_known_method(m)) throw UsageError("unknown method: " + m);
  }
  config.replicates = o.replicates;
  config.seed = resolve_seed(o.common, err);
  config.metrics = metric_config(o, config.seed);
  config.ordering = parse_order_strategy(o.common.ordering);
  config.bootstrap_draws = o.bootstrap_draws;
  config.alpha = o.alpha;
  config.threads = o.common.threads;
  const bench::BenchResult result = bench::run_bench(datasets, config);
  bench::write_bench(fs::path(o.out), result);

  out << std::setprecision(4) << std::fixed;
  for (const bench::BenchView* view : {&result.all, &result.no_endogenous}) {
    out << "# " << view->name << " (" << view->table.block_count() << " blocks)\n";
    out << "method\tmean_rank\tci_low\tci_high\n";
    for (std::size_t j = 0; j < result.methods.size(); ++j) {
      const auto& ci = view->intervals[j];
      out << result.methods[j] << '\t' << ci.mean_rank << '\t' << ci.low << '\t' << ci.high << '\n';
    }
    if (view->friedman_blocks) {
      out << "friedman\tchi2 " << view->friedman_blocks->chi2 << "\tp " << view->friedman_blocks->p_value << '\n';
    }
    if (!view->friedman_note.empty()) out << "# " << view->friedman_note << '\n';
  }
  for (const auto& w : result.all.table.warnings) err << "warning: " << w << '\n';
  return kExitOk;
}

int cmd_validate_theory(const Options& o, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(o.common, err);
  std::vector<TheoryComparison> results(o.rhos.size());
  parallel_for(
      o.rhos.size(),
      [&](std::size_t i) {
        results[i] = validate_theory(o.rhos[i], o.theory_nodes, o.communities, o.mean_degree, o.variance,
                                     derive_seed(seed, "validate-theory", i));
      },
      o.common.threads);
  const fs::path dir(o.out);
  fs::create_directories(dir);
  std::ofstream table(dir / "ccdf.tsv");
  table << std::setprecision(12) << "rho\tdegree\tempirical\ttheoretical\n";
  for (const auto& r : results) {
    for (const auto& row : r.rows) {
      table << r.rho << '\t' << row.degree << '\t' << row.empirical << '\t' << row.theoretical << '\n';
    }
  }
  std::ofstream ks(dir / "ks.tsv");
  ks << std::setprecision(12) << "rho\tnu\tks\tks_bulk\tpercentile99\tseconds\n";
  out << std::setprecision(4) << "rho\tks\tks_bulk\n";
  for (const auto& r : results) {
    ks << r.rho << '\t' << r.derived.nu.front() << '\t' << r.ks << '\t' << r.ks_bulk << '\t' << r.percentile99 << '\t'
       << r.generation_seconds << '\n';
    out << r.rho << '\t' << r.ks << '\t' << r.ks_bulk << '\n';
  }
  if (!table || !ks) throw std::runtime_error("cannot write to " + dir.string());
  return kExitOk;
}

void add_common(CLI::App* sub, Options& o, bool seeded) {
  if (seeded) sub->add_option("--seed", o.common.seed, "Random seed; drawn from entropy and printed when omitted");
  sub->add_option("--threads", o.common.threads, "Worker threads (default from CITEGEN_THREADS)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

void add_graph_inputs(CLI::App* sub, GraphFiles& files, const std::string& prefix, bool labels_required) {
  sub->add_option("--" + prefix + "edges", files.edges, "Edge list, one src<TAB>dst per line")
      ->required()
      ->check(CLI::ExistingFile);
  auto* labels = sub->add_option("--" + prefix + "labels", files.labels, "Community labels, node<TAB>community")
                     ->check(CLI::ExistingFile);
  if (labels_required) labels->required();
  sub->add_option("--" + prefix + "timestamps", files.timestamps, "Node timestamps, node<TAB>integer")
      ->check(CLI::ExistingFile);
}

void add_ordering(CLI::App* sub, Options& o) {
  sub->add_option("--ordering", o.common.ordering, "Age ordering heuristic when timestamps are absent")
      ->capture_default_str()
      ->check(CLI::IsMember(kStrategies));
}

void add_metric_flags(CLI::App* sub, Options& o) {
  sub->add_option("--mode", o.metric.mode, "Metric evaluation mode")->capture_default_str()->check(CLI::IsMember(kModes));
  sub->add_option("--pairs", o.metric.pairs, "Sampled node pairs for path metrics")->capture_default_str();
  sub->add_option("--reach-sources", o.metric.reach_sources, "Sampled sources for reachability")->capture_default_str();
  sub->add_option("--betweenness-sources", o.metric.betweenness_sources, "Sampled sources for betweenness")
      ->capture_default_str();
  sub->add_option("--triad-samples", o.metric.triad_samples, "Sampled triples above the exact limit")
      ->capture_default_str();
  sub->add_option("--subsample", o.metric.subsample, "Node cap for subsampled metrics")->capture_default_str();
  sub->add_option("--resolution", o.metric.resolution, "Louvain resolution")->capture_default_str();
  sub->add_option("--secondary-resolution", o.metric.secondary_resolution, "Second community detector resolution")
      ->capture_default_str();
}

std::string detect_subcommand(const std::vector<std::string>& args) {
  for (const auto& a : args) {
    if (std::find(kSubcommands.begin(), kSubcommands.end(), a) != kSubcommands.end()) return a;
  }
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Citation-like near-DAG generation and benchmarking", "citegen"};
  app.set_config("--config", "", "JSON file mirroring the flags; flags take precedence")->check(CLI::ExistingFile);
  app.config_formatter(std::make_shared<JsonConfig>(detect_subcommand(args)));
  app.allow_config_extras(false);
  app.require_subcommand(1);
  app.fallthrough();

  auto* fit = app.add_subcommand("fit", "Estimate CS parameters from a labelled graph");
  add_graph_inputs(fit, o.input, "", true);
  fit->add_option("--out", o.out, "Parameter file to write (JSON)")->required();
  fit->add_option("--report", o.report, "Also write the fit report here");
  fit->add_flag("--header", o.common.header, "Input files start with a header line");
  add_ordering(fit, o);
  add_common(fit, o, false);

  auto* gen = app.add_subcommand("generate", "Sample a CS graph from a parameter file");
  gen->add_option("--params", o.params, "Parameter file (JSON)")->required()->check(CLI::ExistingFile);
  gen->add_option("--nodes", o.nodes, "Node count (default: node_count from the parameter file)");
  gen->add_flag("--dag-only", o.dag_only, "Skip back-edge injection");
  gen->add_option("--back-edge-ratio", o.back_edge_ratio, "Override the back-edge ratio")->check(CLI::Range(0.0, 0.999));
  gen->add_option("--out", o.out, "Output directory (edges.tsv, labels.tsv)")->required();
  add_common(gen, o, true);

  auto* dec = app.add_subcommand("decycle", "Reorient a graph into a DAG and re-reverse a fraction of edges");
  add_graph_inputs(dec, o.input, "", false);
  dec->add_option("--back-edge-ratio", o.back_edge_ratio, "Fraction of edges to reverse (default: measured)")
      ->check(CLI::Range(0.0, 0.999));
  dec->add_option("--out", o.out, "Output edge list")->required();
  dec->add_flag("--header", o.common.header, "Input files start with a header line");
  add_ordering(dec, o);
  add_common(dec, o, true);

  auto* base = app.add_subcommand("baseline", "Fit and sample a classical generator");
  base->add_option("--name", o.baseline, "Generator")->required()->check(CLI::IsMember(kBaselines));
  add_graph_inputs(base, o.input, "", false);
  base->add_flag("--near-dag", o.near_dag, "Apply cycle breaking to the sample");
  base->add_option("--back-edge-ratio", o.back_edge_ratio, "Back-edge ratio for --near-dag (default: measured)")
      ->check(CLI::Range(0.0, 0.999));
  base->add_option("--out", o.out, "Output directory (edges.tsv, labels.tsv, fit.json)")->required();
  base->add_flag("--header", o.common.header, "Input files start with a header line");
  add_ordering(base, o);
  add_common(base, o, true);

  auto* cmp = app.add_subcommand("compare", "Score a synthetic graph against a real one");
  add_graph_inputs(cmp, o.input, "real-", false);
  add_graph_inputs(cmp, o.synth, "synth-", false);
  cmp->add_option("--out", o.out, "Report file (default: stdout)");
  cmp->add_flag("--header", o.common.header, "Input files start with a header line");
  add_ordering(cmp, o);
  add_metric_flags(cmp, o);
  add_common(cmp, o, true);

  auto* ben = app.add_subcommand("bench", "Rank generators over datasets and metrics");
  ben->add_option("--dataset", o.datasets, "NAME=EDGES,LABELS[,TIMESTAMPS], repeatable")->required();
  ben->add_option("--methods", o.methods, "Methods to compare (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(bench::all_methods()));
  ben->add_option("--replicates", o.replicates, "Samples per method and dataset")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  ben->add_option("--bootstrap-draws", o.bootstrap_draws, "Bootstrap resamples for rank intervals")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  ben->add_option("--alpha", o.alpha, "Significance level of the pairwise tests")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  ben->add_option("--out", o.out, "Output directory")->required();
  ben->add_flag("--header", o.common.header, "Input files start with a header line");
  add_ordering(ben, o);
  add_metric_flags(ben, o);
  add_common(ben, o, true);

  auto* val = app.add_subcommand("validate-theory", "Compare generated in-degree tails with the Lomax law");
  val->add_option("--rho", o.rhos, "Preferentiality values")->delimiter(',')->capture_default_str()->check(
      CLI::Range(0.0, 1.0));
  val->add_option("--nodes", o.theory_nodes, "Nodes per graph")->capture_default_str();
  val->add_option("--k", o.communities, "Equal-size communities")->capture_default_str()->check(CLI::PositiveNumber);
  val->add_option("--m", o.mean_degree, "Mean out-degree")->capture_default_str()->check(CLI::PositiveNumber);
  val->add_option("--sigma2", o.variance, "Out-degree variance")->capture_default_str()->check(CLI::PositiveNumber);
  val->add_option("--out", o.out, "Output directory (ccdf.tsv, ks.tsv)")->required();
  add_common(val, o, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == static_cast<int>(CLI::ExitCodes::Success) ? kExitOk : kExitUsage;
  }
  try {
    if (fit->parsed()) return cmd_fit(o, out, err);
    if (gen->parsed()) return cmd_generate(o, out, err);
    if (dec->parsed()) return cmd_decycle(o, out, err);
    if (base->parsed()) return cmd_baseline(o, out, err);
    if (cmp->parsed()) return cmd_compare(o, out, err);
    if (ben->parsed()) return cmd_bench(o, out, err);
    if (val->parsed()) return cmd_validate_theory(o, out, err);
  } catch (const UsageError& e) {
    err << "citegen: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "citegen: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace citegen::cli
