#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "citegen/graph.hpp"
#include "citegen/metrics/structure.hpp"

namespace citegen::metrics {

/// Node -> community, with ids compacted to 0..count-1.
struct Partition {
  std::vector<std::uint32_t> membership;
  std::size_t count = 0;

  std::vector<double> sizes() const;
  /// Renumbers arbitrary ids to 0..count-1 in order of first appearance.
  static Partition from_labels(std::span<const std::uint32_t> labels);
};

struct Detection {
  Partition partition;
  double quality = 0.0;  // modularity at the resolution used, or codelength
};

/// Newman modularity with resolution on the symmetrized graph, where the
/// weight of {u, v} is the number of directed edges between them.
double undirected_modularity(const LabeledGraph& graph, const Partition& partition, double resolution = 1.0);

/// Louvain local moving and aggregation on the symmetrized weighted graph.
/// Nodes are visited in a seeded random order at every level.
Detection louvain(const LabeledGraph& graph, double resolution, std::uint64_t seed);

/// Asynchronous label propagation on the symmetrized weighted graph, seeded
/// visit order and tie breaking. quality holds the map-equation codelength.
Detection label_propagation(const LabeledGraph& graph, std::uint64_t seed, std::size_t max_sweeps = 100);

/// Two-level map-equation codelength (bits) of `partition` for the
/// stationary flow of an undirected random walk on the symmetrized graph.
double map_equation_codelength(const LabeledGraph& graph, const Partition& partition);

// Statistics of the planted partition. All require every node to be labelled
// and throw MetricError otherwise.

/// Directed modularity sum_c [e_cc / m - out_c in_c / m^2].
double directed_modularity(const LabeledGraph& graph);
/// Mean over communities of cut / min(vol inside, vol outside); volumes use
/// total degree. A community with an empty side contributes 0.
double mean_conductance(const LabeledGraph& graph);
/// Intra-community edges over sum_i N_i (N_i - 1).
double intra_density(const LabeledGraph& graph);
/// Inter-community edges over N(N-1) - sum_i N_i (N_i - 1).
double inter_density(const LabeledGraph& graph);
/// Per node, 1 - sum_c (d_c / d)^2 over the communities at the other end of
/// its in-edges (kIn) or out-edges (kOut); 0 for nodes without such edges.
std::vector<double> participation(const LabeledGraph& graph, DegreeRole role);

}  // namespace citegen::metrics
