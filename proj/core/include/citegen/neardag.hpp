#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "citegen/graph.hpp"

namespace citegen {

// Direction convention used throughout: citations flow from newer to older
// nodes. An edge whose source is older than its target is a back-edge.

enum class OrderStrategy {
  kTimestamps,  // ascending timestamp, ties by node id
  kDegreeDiff,  // descending d_out - d_in puts the newest first; ties by node id
  kEades,       // Eades-Lin-Smyth greedy feedback-arc-set ordering
};

OrderStrategy parse_order_strategy(std::string_view name);
std::string_view to_string(OrderStrategy strategy);

/// Age ranking of the nodes: rank[v] == 0 is the oldest node.
struct NodeOrdering {
  OrderStrategy strategy = OrderStrategy::kDegreeDiff;
  std::vector<std::size_t> rank;

  std::size_t node_count() const { return rank.size(); }
  bool is_back_edge(const Edge& e) const { return rank[e.source] < rank[e.target]; }
  std::vector<NodeId> oldest_first() const;
};

/// rank[v] = v; the natural order of generated graphs.
NodeOrdering creation_order(std::size_t node_count);

/// Orders the nodes by `strategy`. kTimestamps reads the graph's timestamp
/// column and throws GraphError if any node lacks one.
NodeOrdering order_nodes(const LabeledGraph& graph, OrderStrategy strategy);

std::size_t count_back_edges(const LabeledGraph& graph, const NodeOrdering& ordering);
/// Fraction of edges pointing from an older to a newer node; 0 for an empty
/// edge set.
double back_edge_ratio(const LabeledGraph& graph, const NodeOrdering& ordering);

/// The graph without its back-edges; always acyclic.
LabeledGraph strip_back_edges(const LabeledGraph& graph, const NodeOrdering& ordering);

/// floor(r |E| / (1 - r)): number of back-edges to add to a DAG with
/// `dag_edges` edges so that they make up a fraction r of the result.
std::size_t back_edge_budget(std::size_t dag_edges, double r);

/// Success probability of the rank-gap geometric law, 1 - e^{-0.1}.
double back_edge_gap_probability();
inline constexpr double kIntraCommunityBackEdgeProbability = 0.8;

struct InjectionResult {
  LabeledGraph graph;
  std::size_t requested = 0;
  std::size_t injected = 0;

  bool exhausted() const { return injected < requested; }
};

/// Adds back_edge_budget(|E|, r) edges u -> v with u < v (node id = creation
/// rank). The gap v - u follows a geometric law favouring short gaps; with
/// probability 0.8 both endpoints share a community (gap counted within the
/// community). Candidates that already exist are resampled. On tiny graphs
/// where candidates run out the result is partial; check exhausted().
InjectionResult inject_back_edges(const LabeledGraph& dag, double r, std::uint64_t seed);

struct CycleBreakResult {
  LabeledGraph graph;
  NodeOrdering ordering;      // ordering the edges were aligned to
  std::size_t collapsed = 0;  // reciprocal pairs merged during reorientation
  std::size_t reversed = 0;   // edges turned into back-edges
};

/// Model-agnostic near-DAG transform: order the nodes, point every edge from
/// the newer to the older endpoint (a DAG), then reverse round(r |E|)
/// uniformly chosen edges.
CycleBreakResult cycle_break(const LabeledGraph& graph, double r, std::uint64_t seed, OrderStrategy strategy);

/// Steps one and two of cycle_break only.
CycleBreakResult orient_to_dag(const LabeledGraph& graph, OrderStrategy strategy);

}  // namespace citegen
