#include "citegen/metrics/triads.hpp"

#include <algorithm>
#include <vector>

#include "citegen/metrics/distances.hpp"
#include "citegen/random.hpp"

namespace citegen::metrics {

namespace {

constexpr std::array<std::string_view, kTriadTypes> kNames = {
    "003", "012", "102", "021D", "021U", "021C", "111D", "111U",
    "030T", "030C", "201", "120D", "120U", "120C", "210", "300"};

// Type (1-based) of the 6-bit code v->u:1, u->v:2, v->w:4, w->v:8, u->w:16, w->u:32.
constexpr std::array<std::uint8_t, 64> kTriCodes = {
    1, 2,  2, 3,  2, 4,  6, 8,  2, 6,  5, 7,  3, 8,  7,  11, 2,  6,  4,  8,  5,  9,
    9, 13, 6, 10, 9, 14, 7, 14, 12, 15, 2, 5,  6, 7,  6,  9,  10, 14, 4,  9,  9,  12,
    8, 13, 14, 15, 3, 7, 8, 11, 7, 12, 14, 15, 8, 14, 13, 15, 11, 15, 15, 16};

std::size_t code(const LabeledGraph& g, NodeId v, NodeId u, NodeId w) {
  return (g.has_edge(v, u) ? 1u : 0u) | (g.has_edge(u, v) ? 2u : 0u) | (g.has_edge(v, w) ? 4u : 0u) |
         (g.has_edge(w, v) ? 8u : 0u) | (g.has_edge(u, w) ? 16u : 0u) | (g.has_edge(w, u) ? 32u : 0u);
}

}  // namespace

std::string_view triad_name(std::size_t type) { return kNames.at(type); }

std::size_t triad_type(const LabeledGraph& graph, NodeId v, NodeId u, NodeId w) {
  return kTriCodes[code(graph, v, u, w)] - 1u;
}

std::array<std::uint64_t, kTriadTypes> triad_census_counts(const LabeledGraph& graph) {
  std::array<std::uint64_t, kTriadTypes> census{};
  const std::size_t n = graph.node_count();
  if (n < 3) return census;
  const Adjacency nb = undirected_adjacency(graph);

  std::vector<NodeId> merged;
  std::vector<char> near_v(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId x : nb.neighbours(v)) near_v[x] = 1;
    for (NodeId u : nb.neighbours(v)) {
      if (u <= v) continue;
      const auto nu = nb.neighbours(u);
      const auto nv = nb.neighbours(v);
      merged.clear();
      std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(merged));
      std::size_t others = 0;
      for (NodeId w : merged) {
        if (w == u || w == v) continue;
        ++others;
        // Each connected triple is counted once, from its smallest dyad.
        if (u < w || (v < w && w < u && !near_v[w])) ++census[triad_type(graph, v, u, w)];
      }
      const std::size_t dyad = graph.has_edge(v, u) && graph.has_edge(u, v) ? 2 : 1;
      census[dyad] += n - others - 2;
    }
    for (NodeId x : nb.neighbours(v)) near_v[x] = 0;
  }
  const std::uint64_t nn = n;
  const std::uint64_t all = nn * (nn - 1) / 2 * (nn - 2) / 3;
  std::uint64_t counted = 0;
  for (std::size_t t = 1; t < kTriadTypes; ++t) counted += census[t];
  census[0] = all - counted;
  return census;
}

std::array<double, kTriadTypes> triad_census(const LabeledGraph& graph, const TriadOptions& options) {
  const std::size_t n = graph.node_count();
  if (n < 3) throw MetricError("triad census needs at least 3 nodes");
  std::array<double, kTriadTypes> share{};
  if (!options.force_sampled && n <= options.exact_limit) {
    const auto counts = triad_census_counts(graph);
    double total = 0.0;
    for (auto c : counts) total += static_cast<double>(c);
    for (std::size_t t = 0; t < kTriadTypes; ++t) share[t] = static_cast<double>(counts[t]) / total;
    return share;
  }
  if (options.samples == 0) throw MetricError("sampled triad census needs a positive sample count");
  Rng rng = make_rng(options.seed, "triads");
  for (std::size_t s = 0; s < options.samples; ++s) {
    const auto v = uniform_index<NodeId>(rng, static_cast<NodeId>(n));
    NodeId u = uniform_index<NodeId>(rng, static_cast<NodeId>(n - 1));
    if (u >= v) ++u;
    NodeId w = uniform_index<NodeId>(rng, static_cast<NodeId>(n - 2));
    if (w >= std::min(u, v)) ++w;
    if (w >= std::max(u, v)) ++w;
    share[triad_type(graph, v, u, w)] += 1.0;
  }
  for (double& x : share) x /= static_cast<double>(options.samples);
  return share;
}

}  // namespace citegen::metrics
