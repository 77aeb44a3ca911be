#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "citegen/graph.hpp"
#include "citegen/neardag.hpp"

namespace citegen::metrics {

struct PathOptions {
  bool exact = false;             // every ordered pair and every source
  std::size_t pairs = 2000;       // sampled (u, v) pairs for distances
  std::size_t reach_sources = 200;
  std::uint64_t seed = 0;
};

struct PathStats {
  std::optional<double> effective_diameter;  // 90th percentile of finite distances
  std::optional<double> average_path_length;
  std::vector<double> reachability;  // reachable node count per (sampled) source
  std::size_t finite_pairs = 0;
  std::vector<std::uint64_t> distance_histogram;  // finite distances by length
};

/// Directed shortest-path statistics by breadth-first search.
PathStats path_statistics(const LabeledGraph& graph, const PathOptions& options);

/// Directed BFS distances from `source`; -1 marks unreachable nodes.
std::vector<std::int64_t> bfs_distances(const Adjacency& out, NodeId source);

/// Brandes betweenness normalised by (n-1)(n-2). With `sources` below n the
/// accumulation runs from a uniform sample of distinct sources and is scaled
/// by n / sources.
std::vector<double> betweenness(const LabeledGraph& graph, std::size_t sources, std::uint64_t seed);

/// Sizes of the strongly connected components (iterative Tarjan).
std::vector<std::size_t> scc_sizes(const LabeledGraph& graph);

/// Longest path (in edges) starting at each node, following edge direction
/// on the graph with the back-edges of `ordering` removed.
std::vector<std::size_t> longest_paths(const LabeledGraph& graph, const NodeOrdering& ordering);

}  // namespace citegen::metrics
