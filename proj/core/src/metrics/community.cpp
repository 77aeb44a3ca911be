#include "citegen/metrics/community.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "citegen/metrics/distances.hpp"
#include "citegen/random.hpp"

namespace citegen::metrics {

std::vector<double> Partition::sizes() const {
  std::vector<double> s(count, 0.0);
  for (auto c : membership) s[c] += 1.0;
  return s;
}

Partition Partition::from_labels(std::span<const std::uint32_t> labels) {
  Partition p;
  p.membership.resize(labels.size());
  std::vector<std::uint32_t> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint32_t> compact(sorted.size(), static_cast<std::uint32_t>(-1));
  for (std::size_t v = 0; v < labels.size(); ++v) {
    const auto slot = std::lower_bound(sorted.begin(), sorted.end(), labels[v]) - sorted.begin();
    if (compact[slot] == static_cast<std::uint32_t>(-1)) compact[slot] = static_cast<std::uint32_t>(p.count++);
    p.membership[v] = compact[slot];
  }
  return p;
}

namespace {

// Symmetrized weighted graph; each undirected pair is listed on both sides
// and self-loop weight is kept apart. degree includes twice the loop weight.
struct WeightedGraph {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;
  std::vector<double> weights;
  std::vector<double> loops;
  std::vector<double> degree;
  double total = 0.0;  // sum of degrees (2m)

  std::size_t size() const { return loops.size(); }
};

WeightedGraph build_from_triples(std::size_t n, std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> triples,
                                 std::vector<double> loops) {
  std::sort(triples.begin(), triples.end());
  WeightedGraph g;
  g.loops = std::move(loops);
  g.offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < triples.size();) {
    const auto [a, b, w0] = triples[i];
    double w = 0.0;
    std::size_t j = i;
    while (j < triples.size() && std::get<0>(triples[j]) == a && std::get<1>(triples[j]) == b) {
      w += std::get<2>(triples[j]);
      ++j;
    }
    g.targets.push_back(b);
    g.weights.push_back(w);
    ++g.offsets[a + 1];
    i = j;
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];
  g.degree.assign(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    g.degree[v] = 2.0 * g.loops[v];
    for (std::size_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) g.degree[v] += g.weights[e];
    g.total += g.degree[v];
  }
  return g;
}

WeightedGraph symmetrize(const LabeledGraph& graph) {
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> triples;
  triples.reserve(2 * graph.edge_count());
  for (const Edge& e : graph.edges()) {
    triples.emplace_back(e.source, e.target, 1.0);
    triples.emplace_back(e.target, e.source, 1.0);
  }
  return build_from_triples(graph.node_count(), std::move(triples), std::vector<double>(graph.node_count(), 0.0));
}

WeightedGraph aggregate(const WeightedGraph& g, const std::vector<std::uint32_t>& comm, std::size_t count) {
  std::vector<double> loops(count, 0.0);
  std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> triples;
  for (std::size_t v = 0; v < g.size(); ++v) {
    loops[comm[v]] += g.loops[v];
    for (std::size_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
      const auto a = comm[v], b = comm[g.targets[e]];
      if (a == b) {
        loops[a] += g.weights[e] / 2.0;  // seen once from each side
      } else {
        triples.emplace_back(a, b, g.weights[e]);
      }
    }
  }
  return build_from_triples(count, std::move(triples), std::move(loops));
}

// One level of local moving; returns whether any node changed community.
bool local_moving(const WeightedGraph& g, double resolution, Rng& rng, std::vector<std::uint32_t>& comm) {
  const std::size_t n = g.size();
  comm.resize(n);
  std::iota(comm.begin(), comm.end(), 0u);
  std::vector<double> tot = g.degree;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_index(rng, i)]);

  std::vector<double> link(n, 0.0);
  std::vector<std::uint32_t> touched;
  bool moved_any = false;
  for (int pass = 0; pass < 1000; ++pass) {
    std::size_t moves = 0;
    for (std::uint32_t v : order) {
      const std::uint32_t own = comm[v];
      touched.clear();
      for (std::size_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
        const std::uint32_t c = comm[g.targets[e]];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += g.weights[e];
      }
      tot[own] -= g.degree[v];
      const double scale = resolution * g.degree[v] / g.total;
      std::uint32_t best = own;
      double best_gain = link[own] - scale * tot[own];
      for (std::uint32_t c : touched) {
        const double gain = link[c] - scale * tot[c];
        if (gain > best_gain + 1e-12) {
          best = c;
          best_gain = gain;
        }
      }
      tot[best] += g.degree[v];
      if (best != own) {
        comm[v] = best;
        ++moves;
      }
      for (std::uint32_t c : touched) link[c] = 0.0;
    }
    if (moves == 0) break;
    moved_any = true;
  }
  return moved_any;
}

std::size_t compact(std::vector<std::uint32_t>& comm) {
  std::vector<std::uint32_t> id(comm.size(), static_cast<std::uint32_t>(-1));
  std::uint32_t next = 0;
  for (auto& c : comm) {
    if (id[c] == static_cast<std::uint32_t>(-1)) id[c] = next++;
    c = id[c];
  }
  return next;
}

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

void require_labels(const LabeledGraph& graph) {
  if (!graph.has_labels()) throw MetricError("ground-truth metrics need community labels");
  for (CommunityId c : graph.labels()) {
    if (c == kUnlabelled) throw MetricError("ground-truth metrics need every node to be labelled");
  }
}

}  // namespace

double undirected_modularity(const LabeledGraph& graph, const Partition& partition, double resolution) {
  const double m2 = 2.0 * static_cast<double>(graph.edge_count());
  if (m2 == 0.0) return 0.0;
  std::vector<double> inside(partition.count, 0.0), tot(partition.count, 0.0);
  for (const Edge& e : graph.edges()) {
    const auto a = partition.membership[e.source], b = partition.membership[e.target];
    tot[a] += 1.0;
    tot[b] += 1.0;
    if (a == b) inside[a] += 2.0;
  }
  double q = 0.0;
  for (std::size_t c = 0; c < partition.count; ++c) {
    q += inside[c] / m2 - resolution * (tot[c] / m2) * (tot[c] / m2);
  }
  return q;
}

Detection louvain(const LabeledGraph& graph, double resolution, std::uint64_t seed) {
  Detection result;
  const std::size_t n = graph.node_count();
  result.partition.membership.resize(n);
  std::iota(result.partition.membership.begin(), result.partition.membership.end(), 0u);
  result.partition.count = n;
  if (graph.edge_count() == 0) return result;

  Rng rng = make_rng(seed, "louvain");
  WeightedGraph level = symmetrize(graph);
  std::vector<std::uint32_t> comm;
  while (true) {
    const bool moved = local_moving(level, resolution, rng, comm);
    if (!moved) break;
    const std::size_t count = compact(comm);
    for (auto& c : result.partition.membership) c = comm[c];
    result.partition.count = count;
    level = aggregate(level, comm, count);
    if (count == 1) break;
  }
  result.quality = undirected_modularity(graph, result.partition, resolution);
  return result;
}

Detection label_propagation(const LabeledGraph& graph, std::uint64_t seed, std::size_t max_sweeps) {
  const std::size_t n = graph.node_count();
  const WeightedGraph g = symmetrize(graph);
  Rng rng = make_rng(seed, "label-propagation");
  std::vector<std::uint32_t> label(n), order(n);
  std::iota(label.begin(), label.end(), 0u);
  std::iota(order.begin(), order.end(), 0u);
  std::vector<double> weight(n, 0.0);
  std::vector<std::uint32_t> touched, best;

  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_index(rng, i)]);
    std::size_t changes = 0;
    for (std::uint32_t v : order) {
      if (g.offsets[v] == g.offsets[v + 1]) continue;
      touched.clear();
      for (std::size_t e = g.offsets[v]; e < g.offsets[v + 1]; ++e) {
        const std::uint32_t c = label[g.targets[e]];
        if (weight[c] == 0.0) touched.push_back(c);
        weight[c] += g.weights[e];
      }
      double top = 0.0;
      for (std::uint32_t c : touched) top = std::max(top, weight[c]);
      best.clear();
      for (std::uint32_t c : touched) {
        if (weight[c] >= top - 1e-12) best.push_back(c);
      }
      std::sort(best.begin(), best.end());
      for (std::uint32_t c : touched) weight[c] = 0.0;
      if (std::binary_search(best.begin(), best.end(), label[v])) continue;
      label[v] = best[uniform_index(rng, best.size())];
      ++changes;
    }
    if (changes == 0) break;
  }

  Detection result;
  result.partition = Partition::from_labels(label);
  result.quality = map_equation_codelength(graph, result.partition);
  return result;
}

double map_equation_codelength(const LabeledGraph& graph, const Partition& partition) {
  const double m2 = 2.0 * static_cast<double>(graph.edge_count());
  if (m2 == 0.0) return 0.0;
  const DegreeView deg = degrees(graph);
  std::vector<double> exit(partition.count, 0.0), flow(partition.count, 0.0);
  double node_entropy = 0.0;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    const double p = static_cast<double>(deg.in[v] + deg.out[v]) / m2;
    node_entropy += plogp(p);
    flow[partition.membership[v]] += p;
  }
  for (const Edge& e : graph.edges()) {
    const auto a = partition.membership[e.source], b = partition.membership[e.target];
    if (a != b) {
      exit[a] += 1.0 / m2;
      exit[b] += 1.0 / m2;
    }
  }
  double q = 0.0, exit_terms = 0.0, module_terms = 0.0;
  for (std::size_t c = 0; c < partition.count; ++c) {
    q += exit[c];
    exit_terms += plogp(exit[c]);
    module_terms += plogp(exit[c] + flow[c]);
  }
  return plogp(q) - 2.0 * exit_terms - node_entropy + module_terms;
}

double directed_modularity(const LabeledGraph& graph) {
  require_labels(graph);
  const double m = static_cast<double>(graph.edge_count());
  if (m == 0.0) throw MetricError("modularity undefined: no edges");
  const std::size_t k = graph.community_count();
  std::vector<double> inside(k + 1, 0.0), out(k + 1, 0.0), in(k + 1, 0.0);
  for (const Edge& e : graph.edges()) {
    const CommunityId a = graph.label(e.source), b = graph.label(e.target);
    out[a] += 1.0;
    in[b] += 1.0;
    if (a == b) inside[a] += 1.0;
  }
  double q = 0.0;
  for (std::size_t c = 1; c <= k; ++c) q += inside[c] / m - out[c] * in[c] / (m * m);
  return q;
}

double mean_conductance(const LabeledGraph& graph) {
  require_labels(graph);
  const std::size_t k = graph.community_count();
  std::vector<double> volume(k + 1, 0.0), cut(k + 1, 0.0);
  std::vector<char> present(k + 1, 0);
  for (CommunityId c : graph.labels()) present[c] = 1;
  for (const Edge& e : graph.edges()) {
    const CommunityId a = graph.label(e.source), b = graph.label(e.target);
    volume[a] += 1.0;
    volume[b] += 1.0;
    if (a != b) {
      cut[a] += 1.0;
      cut[b] += 1.0;
    }
  }
  const double total = 2.0 * static_cast<double>(graph.edge_count());
  double sum = 0.0;
  std::size_t communities = 0;
  for (std::size_t c = 1; c <= k; ++c) {
    if (!present[c]) continue;
    ++communities;
    const double denom = std::min(volume[c], total - volume[c]);
    if (denom > 0.0) sum += cut[c] / denom;
  }
  return communities ? sum / static_cast<double>(communities) : 0.0;
}

namespace {

std::pair<double, double> intra_inter(const LabeledGraph& graph, double& intra_slots, double& inter_slots) {
  require_labels(graph);
  const std::size_t k = graph.community_count();
  std::vector<double> size(k + 1, 0.0);
  for (CommunityId c : graph.labels()) size[c] += 1.0;
  intra_slots = 0.0;
  for (double s : size) intra_slots += s * (s - 1.0);
  const double n = static_cast<double>(graph.node_count());
  inter_slots = n * (n - 1.0) - intra_slots;
  double intra = 0.0, inter = 0.0;
  for (const Edge& e : graph.edges()) {
    (graph.label(e.source) == graph.label(e.target) ? intra : inter) += 1.0;
  }
  return {intra, inter};
}

}  // namespace

double intra_density(const LabeledGraph& graph) {
  double intra_slots = 0, inter_slots = 0;
  const auto [intra, inter] = intra_inter(graph, intra_slots, inter_slots);
  if (intra_slots <= 0.0) throw MetricError("intra-community density undefined: every community is a singleton");
  return intra / intra_slots;
}

double inter_density(const LabeledGraph& graph) {
  double intra_slots = 0, inter_slots = 0;
  const auto [intra, inter] = intra_inter(graph, intra_slots, inter_slots);
  if (inter_slots <= 0.0) throw MetricError("inter-community density undefined: a single community");
  return inter / inter_slots;
}

std::vector<double> participation(const LabeledGraph& graph, DegreeRole role) {
  require_labels(graph);
  const Adjacency adj = role == DegreeRole::kIn ? in_adjacency(graph) : out_adjacency(graph);
  std::vector<double> result(graph.node_count(), 0.0);
  std::vector<double> count(graph.community_count() + 1, 0.0);
  std::vector<CommunityId> touched;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    const auto nbrs = adj.neighbours(v);
    if (nbrs.empty()) continue;
    touched.clear();
    for (NodeId u : nbrs) {
      const CommunityId c = graph.label(u);
      if (count[c] == 0.0) touched.push_back(c);
      count[c] += 1.0;
    }
    const double d = static_cast<double>(nbrs.size());
    double concentration = 0.0;
    for (CommunityId c : touched) {
      concentration += (count[c] / d) * (count[c] / d);
      count[c] = 0.0;
    }
    result[v] = 1.0 - concentration;
  }
  return result;
}

}  // namespace citegen::metrics
