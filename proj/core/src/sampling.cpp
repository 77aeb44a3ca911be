#include "citegen/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "citegen/random.hpp"

namespace citegen {

LabeledGraph bfs_subsample(const LabeledGraph& graph, std::size_t max_nodes, std::uint64_t seed) {
  if (max_nodes == 0) throw GraphError("bfs_subsample: max_nodes must be at least 1");
  const std::size_t n = graph.node_count();
  if (max_nodes >= n) return graph;

  Rng rng = make_rng(seed, "bfs-subsample");
  // Walking a random permutation yields a uniformly random unvisited node at
  // every restart.
  std::vector<NodeId> seeds(n);
  std::iota(seeds.begin(), seeds.end(), NodeId{0});
  std::shuffle(seeds.begin(), seeds.end(), rng);

  const Adjacency adj = undirected_adjacency(graph);
  std::vector<char> visited(n, 0);
  std::vector<NodeId> taken;
  taken.reserve(max_nodes);
  std::size_t next_seed = 0;

  while (taken.size() < max_nodes) {
    while (visited[seeds[next_seed]]) ++next_seed;
    const NodeId root = seeds[next_seed];
    visited[root] = 1;
    taken.push_back(root);
    for (std::size_t head = taken.size() - 1; head < taken.size() && taken.size() < max_nodes; ++head) {
      for (NodeId w : adj.neighbours(taken[head])) {
        if (visited[w]) continue;
        visited[w] = 1;
        taken.push_back(w);
        if (taken.size() == max_nodes) break;
      }
    }
  }
  return induced_subgraph(graph, std::move(taken));
}

std::vector<std::pair<NodeId, NodeId>> sample_pairs(const LabeledGraph& graph, std::size_t count,
                                                    std::uint64_t seed) {
  const std::size_t n = graph.node_count();
  if (n < 2) throw GraphError("sample_pairs: graph needs at least 2 nodes");
  Rng rng = make_rng(seed, "sample-pairs");
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(count);
  std::uniform_int_distribution<NodeId> first(0, static_cast<NodeId>(n - 1));
  std::uniform_int_distribution<NodeId> second(0, static_cast<NodeId>(n - 2));
  for (std::size_t i = 0; i < count; ++i) {
    const NodeId u = first(rng);
    NodeId v = second(rng);
    if (v >= u) ++v;
    pairs.emplace_back(u, v);
  }
  return pairs;
}

}  // namespace citegen
