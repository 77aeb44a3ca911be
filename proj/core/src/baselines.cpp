#include "citegen/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>
#include <json.hpp>

#include "citegen/parallel.hpp"
#include "citegen/random.hpp"

namespace citegen {

ErFit fit_er(const LabeledGraph& graph) {
  ErFit fit;
  fit.n = graph.node_count();
  if (fit.n >= 2) {
    const double pairs = static_cast<double>(fit.n) * static_cast<double>(fit.n - 1);
    fit.p = static_cast<double>(graph.edge_count()) / pairs;
  }
  return fit;
}

LabeledGraph generate_er(const ErFit& fit, std::uint64_t seed) {
  if (!(fit.p >= 0.0 && fit.p <= 1.0)) throw BaselineError("ER: edge probability must lie in [0, 1]");
  LabeledGraph graph(fit.n);
  if (fit.n < 2 || fit.p == 0.0) return graph;

  const std::uint64_t row = fit.n - 1;
  const std::uint64_t total = static_cast<std::uint64_t>(fit.n) * row;
  graph.reserve_edges(static_cast<std::size_t>(static_cast<double>(total) * fit.p * 1.05) + 16);
  auto emit = [&](std::uint64_t index) {
    const auto u = static_cast<NodeId>(index / row);
    auto v = static_cast<NodeId>(index % row);
    if (v >= u) ++v;
    graph.add_edge(u, v);
  };
  if (fit.p >= 1.0) {
    for (std::uint64_t i = 0; i < total; ++i) emit(i);
    return graph;
  }

  // The gap between consecutive present pairs is geometric.
  Rng rng = make_rng(seed, "er");
  std::geometric_distribution<std::uint64_t> skip(fit.p);
  std::uint64_t index = 0;
  while (true) {
    const std::uint64_t gap = skip(rng);
    if (gap >= total - index) break;
    index += gap;
    emit(index);
    if (++index >= total) break;
  }
  return graph;
}

ConfigFit fit_config(const LabeledGraph& graph) {
  const DegreeView deg = degrees(graph);
  return {deg.out, deg.in};
}

BaselineSample generate_config(const ConfigFit& fit, std::uint64_t seed) {
  if (fit.out_seq.size() != fit.in_seq.size()) {
    throw BaselineError("configuration model: out and in sequences have different lengths");
  }
  const std::size_t out_total = std::accumulate(fit.out_seq.begin(), fit.out_seq.end(), std::size_t{0});
  const std::size_t in_total = std::accumulate(fit.in_seq.begin(), fit.in_seq.end(), std::size_t{0});
  if (out_total != in_total) {
    throw BaselineError("configuration model: out-degree sum " + std::to_string(out_total) +
                        " differs from in-degree sum " + std::to_string(in_total));
  }

  std::vector<NodeId> sources, targets;
  sources.reserve(out_total);
  targets.reserve(in_total);
  for (NodeId v = 0; v < fit.out_seq.size(); ++v) {
    sources.insert(sources.end(), fit.out_seq[v], v);
    targets.insert(targets.end(), fit.in_seq[v], v);
  }
  Rng rng = make_rng(seed, "config");
  for (std::size_t i = targets.size(); i > 1; --i) {
    std::swap(targets[i - 1], targets[uniform_index(rng, i)]);
  }

  BaselineSample sample;
  sample.graph = LabeledGraph(fit.out_seq.size());
  sample.graph.reserve_edges(out_total);
  for (std::size_t i = 0; i < out_total; ++i) {
    if (sources[i] == targets[i]) {
      ++sample.report.self_loops_erased;
    } else if (!sample.graph.add_edge(sources[i], targets[i])) {
      ++sample.report.duplicates_erased;
    }
  }
  return sample;
}

std::size_t SbmFit::edges_between(CommunityId from, CommunityId to) const {
  const auto it = std::lower_bound(block_edges.begin(), block_edges.end(), std::pair{from, to},
                                   [](const BlockCount& b, const std::pair<CommunityId, CommunityId>& key) {
                                     return std::pair{b.from, b.to} < key;
                                   });
  if (it == block_edges.end() || it->from != from || it->to != to) return 0;
  return it->edges;
}

std::size_t SbmFit::total_edges() const {
  std::size_t total = 0;
  for (const BlockCount& b : block_edges) total += b.edges;
  return total;
}

double SbmFit::block_probability(CommunityId from, CommunityId to) const {
  const double na = static_cast<double>(sizes.at(from - 1));
  const double nb = static_cast<double>(sizes.at(to - 1));
  const double slots = na * nb - (from == to ? na : 0.0);
  if (slots <= 0.0) return 0.0;
  return static_cast<double>(edges_between(from, to)) / slots;
}

namespace {

std::vector<double> block_totals(const SbmFit& fit, const std::vector<std::size_t>& weight) {
  std::vector<double> total(fit.k, 0.0);
  for (NodeId v = 0; v < fit.labels.size(); ++v) total[fit.labels[v] - 1] += static_cast<double>(weight[v]);
  return total;
}

double theta(const SbmFit& fit, const std::vector<std::size_t>& weight, NodeId v) {
  const CommunityId c = fit.labels.at(v);
  if (!fit.degree_corrected) return 1.0 / static_cast<double>(fit.sizes[c - 1]);
  double total = 0.0;
  for (NodeId u = 0; u < fit.labels.size(); ++u) {
    if (fit.labels[u] == c) total += static_cast<double>(weight[u]);
  }
  // A block without stubs of this role: fall back to uniform so theta sums to one.
  if (total == 0.0) return 1.0 / static_cast<double>(fit.sizes[c - 1]);
  return static_cast<double>(weight[v]) / total;
}

}  // namespace

double SbmFit::theta_out(NodeId v) const { return theta(*this, out_weight, v); }
double SbmFit::theta_in(NodeId v) const { return theta(*this, in_weight, v); }

SbmFit fit_sbm(const LabeledGraph& graph) {
  if (!graph.has_labels()) throw BaselineError("SBM fit requires community labels");
  SbmFit fit;
  fit.labels.assign(graph.labels().begin(), graph.labels().end());
  for (NodeId v = 0; v < fit.labels.size(); ++v) {
    if (fit.labels[v] == kUnlabelled) {
      throw BaselineError("SBM fit requires every node to be labelled; node '" + graph.name(v) + "' is not");
    }
  }
  fit.k = graph.community_count();
  fit.sizes.assign(fit.k, 0);
  for (CommunityId c : fit.labels) ++fit.sizes[c - 1];

  absl::flat_hash_map<std::uint64_t, std::size_t> counts;
  for (const Edge& e : graph.edges()) {
    const std::uint64_t key = (static_cast<std::uint64_t>(fit.labels[e.source]) << 32) | fit.labels[e.target];
    ++counts[key];
  }
  fit.block_edges.reserve(counts.size());
  for (const auto& [key, n] : counts) {
    fit.block_edges.push_back({static_cast<CommunityId>(key >> 32), static_cast<CommunityId>(key & 0xffffffffULL), n});
  }
  std::sort(fit.block_edges.begin(), fit.block_edges.end(),
            [](const BlockCount& a, const BlockCount& b) { return std::pair{a.from, a.to} < std::pair{b.from, b.to}; });
  return fit;
}

SbmFit fit_dcsbm(const LabeledGraph& graph) {
  SbmFit fit = fit_sbm(graph);
  fit.degree_corrected = true;
  const DegreeView deg = degrees(graph);
  fit.out_weight = deg.out;
  fit.in_weight = deg.in;
  return fit;
}

namespace {

struct BlockDraw {
  std::vector<Edge> edges;
  std::size_t unplaced = 0;
};

// Endpoint pools per block: members (SBM) or degree stubs (DC-SBM).
std::vector<std::vector<NodeId>> endpoint_pools(const SbmFit& fit, const std::vector<std::size_t>* weight) {
  std::vector<std::vector<NodeId>> pools(fit.k);
  for (NodeId v = 0; v < fit.labels.size(); ++v) {
    auto& pool = pools[fit.labels[v] - 1];
    pool.insert(pool.end(), weight ? (*weight)[v] : 1, v);
  }
  return pools;
}

BaselineSample generate_blocks(const SbmFit& fit, std::uint64_t seed, bool degree_corrected) {
  if (fit.labels.empty() && fit.k > 0) throw BaselineError("SBM fit carries no node assignment");
  if (fit.sizes.size() != fit.k) throw BaselineError("SBM fit: sizes do not match k");
  if (degree_corrected &&
      (fit.out_weight.size() != fit.labels.size() || fit.in_weight.size() != fit.labels.size())) {
    throw BaselineError("DC-SBM fit: node weights do not match the node count");
  }

  BaselineSample sample;
  for (std::size_t c = 0; c < fit.k; ++c) {
    if (fit.sizes[c] == 0) sample.report.warnings.push_back("block " + std::to_string(c + 1) + " is empty; skipped");
  }

  const auto sources =
      degree_corrected ? endpoint_pools(fit, &fit.out_weight) : endpoint_pools(fit, nullptr);
  const auto targets = degree_corrected ? endpoint_pools(fit, &fit.in_weight) : sources;
  const std::string_view stream = degree_corrected ? "dcsbm-block" : "sbm-block";

  std::vector<BlockDraw> draws(fit.block_edges.size());
  parallel_for(fit.block_edges.size(), [&](std::size_t i) {
    const BlockCount& block = fit.block_edges[i];
    const auto& from = sources[block.from - 1];
    const auto& to = targets[block.to - 1];
    if (block.edges == 0 || from.empty() || to.empty()) return;

    Rng rng = make_rng(seed, stream, (static_cast<std::uint64_t>(block.from) << 32) | block.to);
    const double na = static_cast<double>(fit.sizes[block.from - 1]);
    const double nb = static_cast<double>(fit.sizes[block.to - 1]);
    const double slots = na * nb - (block.from == block.to ? na : 0.0);
    if (slots <= 0.0) return;
    auto wanted = std::poisson_distribution<std::uint64_t>(static_cast<double>(block.edges))(rng);
    wanted = std::min<std::uint64_t>(wanted, static_cast<std::uint64_t>(slots));

    BlockDraw& draw = draws[i];
    draw.edges.reserve(wanted);
    absl::flat_hash_set<std::uint64_t> seen;
    seen.reserve(wanted);
    const std::uint64_t max_attempts = 20 * wanted + 1000;
    for (std::uint64_t attempt = 0; attempt < max_attempts && draw.edges.size() < wanted; ++attempt) {
      const NodeId s = from[uniform_index(rng, from.size())];
      const NodeId t = to[uniform_index(rng, to.size())];
      if (s == t) continue;
      if (seen.insert((static_cast<std::uint64_t>(s) << 32) | t).second) draw.edges.push_back({s, t});
    }
    draw.unplaced = wanted - draw.edges.size();
  });

  std::size_t total = 0;
  for (const BlockDraw& d : draws) total += d.edges.size();
  sample.graph = LabeledGraph(fit.labels.size());
  sample.graph.reserve_edges(total);
  for (std::size_t i = 0; i < draws.size(); ++i) {
    for (const Edge& e : draws[i].edges) sample.graph.add_edge(e.source, e.target);
    if (draws[i].unplaced > 0) {
      sample.report.unplaced += draws[i].unplaced;
      sample.report.warnings.push_back("block pair (" + std::to_string(fit.block_edges[i].from) + ", " +
                                       std::to_string(fit.block_edges[i].to) + "): " +
                                       std::to_string(draws[i].unplaced) + " edges could not be placed");
    }
  }
  sample.graph.set_labels(fit.labels);
  return sample;
}

}  // namespace

BaselineSample generate_sbm(const SbmFit& fit, std::uint64_t seed) { return generate_blocks(fit, seed, false); }

BaselineSample generate_dcsbm(const SbmFit& fit, std::uint64_t seed) {
  if (!fit.degree_corrected) throw BaselineError("DC-SBM generation needs a degree-corrected fit");
  return generate_blocks(fit, seed, true);
}

std::string to_json_string(const ErFit& fit) {
  return nlohmann::json{{"model", "er"}, {"n", fit.n}, {"p", fit.p}}.dump(2);
}

std::string to_json_string(const ConfigFit& fit) {
  return nlohmann::json{{"model", "config"}, {"out_seq", fit.out_seq}, {"in_seq", fit.in_seq}}.dump(2);
}

std::string to_json_string(const SbmFit& fit) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const BlockCount& b : fit.block_edges) blocks.push_back({b.from, b.to, b.edges});
  nlohmann::json doc{{"model", fit.degree_corrected ? "dcsbm" : "sbm"},
                     {"k", fit.k},
                     {"sizes", fit.sizes},
                     {"block_edges", blocks}};
  if (fit.degree_corrected) {
    std::vector<double> out(fit.labels.size()), in(fit.labels.size());
    const auto out_total = block_totals(fit, fit.out_weight);
    const auto in_total = block_totals(fit, fit.in_weight);
    for (NodeId v = 0; v < fit.labels.size(); ++v) {
      const std::size_t c = fit.labels[v] - 1;
      out[v] = out_total[c] > 0 ? static_cast<double>(fit.out_weight[v]) / out_total[c] : 0.0;
      in[v] = in_total[c] > 0 ? static_cast<double>(fit.in_weight[v]) / in_total[c] : 0.0;
    }
    doc["theta_out"] = out;
    doc["theta_in"] = in;
  }
  return doc.dump(2);
}

BaselineKind parse_baseline_kind(std::string_view name) {
  if (name == "er") return BaselineKind::kEr;
  if (name == "config") return BaselineKind::kConfig;
  if (name == "sbm") return BaselineKind::kSbm;
  if (name == "dcsbm") return BaselineKind::kDcsbm;
  throw BaselineError("unknown generator '" + std::string(name) + "' (expected er, config, sbm or dcsbm)");
}

std::string_view to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kEr: return "er";
    case BaselineKind::kConfig: return "config";
    case BaselineKind::kSbm: return "sbm";
    case BaselineKind::kDcsbm: return "dcsbm";
  }
  return "unknown";
}

bool needs_labels(BaselineKind kind) { return kind == BaselineKind::kSbm || kind == BaselineKind::kDcsbm; }

BaselineSample fit_and_generate(BaselineKind kind, const LabeledGraph& graph, std::uint64_t seed) {
  switch (kind) {
    case BaselineKind::kEr: return {generate_er(fit_er(graph), seed), {}};
    case BaselineKind::kConfig: return generate_config(fit_config(graph), seed);
    case BaselineKind::kSbm: return generate_sbm(fit_sbm(graph), seed);
    case BaselineKind::kDcsbm: return generate_dcsbm(fit_dcsbm(graph), seed);
  }
  throw BaselineError("unknown generator");
}

}  // namespace citegen
