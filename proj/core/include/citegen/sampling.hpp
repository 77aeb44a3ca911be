#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "citegen/graph.hpp"

namespace citegen {

/// Induced subgraph on the first `max_nodes` nodes reached by breadth-first
/// search from a uniformly random seed. Edges are traversed in both
/// directions. When a component runs out, the search restarts from a random
/// unvisited node. Node order of the result follows the original ids.
LabeledGraph bfs_subsample(const LabeledGraph& graph, std::size_t max_nodes, std::uint64_t seed);

/// `count` ordered pairs (u, v), u != v, drawn uniformly and independently.
std::vector<std::pair<NodeId, NodeId>> sample_pairs(const LabeledGraph& graph, std::size_t count,
                                                    std::uint64_t seed);

}  // namespace citegen
