#pragma once

#include <cstdint>
#include <vector>

#include "citegen/graph.hpp"

namespace citegen::metrics {

/// Per-node clustering coefficient of the symmetrized simple graph; 0 for
/// nodes with fewer than two neighbours.
std::vector<double> local_clustering(const LabeledGraph& graph);

/// Transitivity of the symmetrized simple graph: closed over connected
/// triples, 0 when there are no connected triples.
double global_clustering(const LabeledGraph& graph);

/// Number of ordered triples (a, b, c) with a->b, a->c and b->c.
std::uint64_t ffl_count(const LabeledGraph& graph);

enum class DegreeRole { kIn, kOut };

/// Pearson correlation over edges between the `role` degree of the source
/// and that of the target. Throws MetricError if either side has zero
/// variance or there are no edges.
double degree_assortativity(const LabeledGraph& graph, DegreeRole role);

}  // namespace citegen::metrics
