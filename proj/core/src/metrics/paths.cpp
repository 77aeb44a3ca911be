#include "citegen/metrics/paths.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "citegen/metrics/distances.hpp"
#include "citegen/random.hpp"
#include "citegen/sampling.hpp"

namespace citegen::metrics {

std::vector<std::int64_t> bfs_distances(const Adjacency& out, NodeId source) {
  std::vector<std::int64_t> dist(out.node_count(), -1);
  std::vector<NodeId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (NodeId w : out.neighbours(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

// Distinct uniform sample of `count` node ids (all nodes when count >= n).
std::vector<NodeId> sample_sources(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  if (count >= n) return ids;
  for (std::size_t i = 0; i < count; ++i) std::swap(ids[i], ids[i + uniform_index(rng, n - i)]);
  ids.resize(count);
  std::sort(ids.begin(), ids.end());
  return ids;
}

void summarise_lengths(std::vector<std::uint64_t> histogram, PathStats& stats) {
  std::uint64_t total = 0;
  double sum = 0.0;
  for (std::size_t d = 0; d < histogram.size(); ++d) {
    total += histogram[d];
    sum += static_cast<double>(d) * static_cast<double>(histogram[d]);
  }
  stats.finite_pairs = total;
  if (total == 0) return;
  stats.average_path_length = sum / static_cast<double>(total);

  // Linear interpolation between order statistics, as numpy's default.
  const double pos = 0.9 * static_cast<double>(total - 1);
  const auto lo = static_cast<std::uint64_t>(std::floor(pos));
  auto value_at = [&](std::uint64_t index) {
    std::uint64_t seen = 0;
    for (std::size_t d = 0; d < histogram.size(); ++d) {
      seen += histogram[d];
      if (index < seen) return static_cast<double>(d);
    }
    return static_cast<double>(histogram.size() - 1);
  };
  const double a = value_at(lo);
  const double b = value_at(std::min(lo + 1, total - 1));
  stats.effective_diameter = a + (pos - static_cast<double>(lo)) * (b - a);
  stats.distance_histogram = std::move(histogram);
}

}  // namespace

PathStats path_statistics(const LabeledGraph& graph, const PathOptions& options) {
  PathStats stats;
  const std::size_t n = graph.node_count();
  if (n < 2) return stats;
  const Adjacency out = out_adjacency(graph);
  std::vector<std::uint64_t> histogram;
  auto record = [&](std::int64_t d) {
    if (static_cast<std::size_t>(d) >= histogram.size()) histogram.resize(d + 1, 0);
    ++histogram[d];
  };

  if (options.exact) {
    stats.reachability.reserve(n);
    for (NodeId s = 0; s < n; ++s) {
      const auto dist = bfs_distances(out, s);
      std::size_t reached = 0;
      for (NodeId t = 0; t < n; ++t) {
        if (t != s && dist[t] > 0) {
          record(dist[t]);
          ++reached;
        }
      }
      stats.reachability.push_back(static_cast<double>(reached));
    }
    summarise_lengths(std::move(histogram), stats);
    return stats;
  }

  auto pairs = sample_pairs(graph, options.pairs, derive_seed(options.seed, "path-pairs"));
  std::sort(pairs.begin(), pairs.end());
  // One truncated search per distinct source resolves all its targets.
  std::vector<std::int64_t> dist(n, -1);
  std::vector<NodeId> queue, touched;
  for (std::size_t i = 0; i < pairs.size();) {
    const NodeId s = pairs[i].first;
    std::size_t j = i;
    while (j < pairs.size() && pairs[j].first == s) ++j;
    std::vector<NodeId> wanted;
    for (std::size_t p = i; p < j; ++p) wanted.push_back(pairs[p].second);
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    std::size_t outstanding = wanted.size();
    auto is_wanted = [&](NodeId v) { return std::binary_search(wanted.begin(), wanted.end(), v); };

    queue.assign(1, s);
    touched.assign(1, s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size() && outstanding > 0; ++head) {
      const NodeId v = queue[head];
      for (NodeId w : out.neighbours(v)) {
        if (dist[w] >= 0) continue;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
        touched.push_back(w);
        if (is_wanted(w)) --outstanding;
      }
    }
    for (std::size_t p = i; p < j; ++p) {
      const std::int64_t d = dist[pairs[p].second];
      if (d > 0) record(d);
    }
    for (NodeId v : touched) dist[v] = -1;
    i = j;
  }
  summarise_lengths(std::move(histogram), stats);

  Rng rng = make_rng(options.seed, "reach-sources");
  for (NodeId s : sample_sources(n, options.reach_sources, rng)) {
    const auto d = bfs_distances(out, s);
    const auto reached = std::count_if(d.begin(), d.end(), [](std::int64_t x) { return x > 0; });
    stats.reachability.push_back(static_cast<double>(reached));
  }
  return stats;
}

std::vector<double> betweenness(const LabeledGraph& graph, std::size_t sources, std::uint64_t seed) {
  const std::size_t n = graph.node_count();
  std::vector<double> bc(n, 0.0);
  if (n < 3) return bc;
  const Adjacency out = out_adjacency(graph);
  Rng rng = make_rng(seed, "betweenness");
  const auto chosen = sample_sources(n, std::max<std::size_t>(sources, 1), rng);

  std::vector<std::int64_t> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<NodeId> order;
  order.reserve(n);
  for (NodeId s : chosen) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (NodeId w : out.neighbours(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Predecessors are re-derived from distances on the way back.
    for (std::size_t i = order.size(); i-- > 1;) {
      const NodeId w = order[i];
      for (NodeId x : out.neighbours(w)) {
        if (dist[x] == dist[w] + 1) delta[w] += sigma[w] / sigma[x] * (1.0 + delta[x]);
      }
      bc[w] += delta[w];
    }
  }
  const double scale = static_cast<double>(n) / static_cast<double>(chosen.size());
  const double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2);
  for (double& b : bc) b *= scale / norm;
  return bc;
}

std::vector<std::size_t> scc_sizes(const LabeledGraph& graph) {
  const std::size_t n = graph.node_count();
  const Adjacency out = out_adjacency(graph);
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<NodeId> stack;
  std::vector<std::pair<NodeId, std::size_t>> call;  // node, next neighbour slot
  std::vector<std::size_t> sizes;
  std::size_t counter = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, slot] = call.back();
      const auto nbrs = out.neighbours(v);
      if (slot < nbrs.size()) {
        const NodeId w = nbrs[slot++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const NodeId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::size_t size = 0;
        NodeId w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          ++size;
        } while (w != done);
        sizes.push_back(size);
      }
    }
  }
  return sizes;
}

std::vector<std::size_t> longest_paths(const LabeledGraph& graph, const NodeOrdering& ordering) {
  const std::size_t n = graph.node_count();
  if (ordering.node_count() != n) throw MetricError("longest paths: ordering does not cover every node");
  const auto oldest_first = ordering.oldest_first();
  std::vector<char> seen(n, 0);
  for (NodeId v : oldest_first) {
    if (v >= n || seen[v]) throw MetricError("longest paths: ordering is not a permutation");
    seen[v] = 1;
  }
  const Adjacency out = out_adjacency(graph);
  std::vector<std::size_t> length(n, 0);
  // Forward edges point to strictly older nodes, which are already final.
  for (NodeId v : oldest_first) {
    for (NodeId w : out.neighbours(v)) {
      if (ordering.rank[w] < ordering.rank[v]) length[v] = std::max(length[v], length[w] + 1);
    }
  }
  return length;
}

}  // namespace citegen::metrics
