#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <absl/container/flat_hash_set.h>

namespace citegen {

using NodeId = std::uint32_t;

/// Community ids are 1-based; 0 marks an unlabelled node.
using CommunityId = std::uint32_t;
inline constexpr CommunityId kUnlabelled = 0;

struct Edge {
  NodeId source;
  NodeId target;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Directed simple graph (no self-loops, no parallel edges). Node ids are
/// dense and, for generated graphs, equal to creation rank (0 = oldest).
///
/// Edges are kept in insertion order next to a hash set used for O(1)
/// membership tests. Labels, timestamps and external names are optional
/// per-node columns; when present they always have node_count() entries.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::size_t node_count) : node_count_(node_count) {}

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  /// Appends `count` nodes and returns the id of the first one.
  NodeId add_nodes(std::size_t count = 1);
  /// Appends one node carrying an external name.
  NodeId add_node(std::string name);

  /// Inserts source->target. Returns false (graph unchanged) for a
  /// self-loop or an edge that is already present.
  bool add_edge(NodeId source, NodeId target);
  bool has_edge(NodeId source, NodeId target) const;
  void reserve_edges(std::size_t count);

  bool has_labels() const { return !labels_.empty(); }
  std::span<const CommunityId> labels() const { return labels_; }
  CommunityId label(NodeId v) const { return labels_.at(v); }
  /// Largest community id in use (the k of the partition).
  CommunityId community_count() const;
  void set_labels(std::vector<CommunityId> labels);
  void clear_labels() { labels_.clear(); }

  bool has_timestamps() const { return !timestamps_.empty(); }
  std::span<const std::optional<std::int64_t>> timestamps() const { return timestamps_; }
  void set_timestamps(std::vector<std::optional<std::int64_t>> timestamps);

  bool has_names() const { return !names_.empty(); }
  std::span<const std::string> names() const { return names_; }
  /// External identifier of v, or its numeric id when no names are stored.
  std::string name(NodeId v) const;
  void set_names(std::vector<std::string> names);

 private:
  static std::uint64_t key(NodeId s, NodeId t) {
    return (static_cast<std::uint64_t>(s) << 32) | t;
  }
  void check_node(NodeId v) const;

  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  absl::flat_hash_set<std::uint64_t> edge_set_;
  std::vector<CommunityId> labels_;
  std::vector<std::optional<std::int64_t>> timestamps_;
  std::vector<std::string> names_;
};

struct DegreeView {
  std::vector<std::size_t> in;
  std::vector<std::size_t> out;
};

DegreeView degrees(const LabeledGraph& graph);

/// Compressed sparse row adjacency; neighbours of v are
/// targets[offsets[v] .. offsets[v+1]), sorted ascending.
struct Adjacency {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> targets;

  std::size_t node_count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::span<const NodeId> neighbours(NodeId v) const {
    return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
  std::size_t degree(NodeId v) const { return offsets[v + 1] - offsets[v]; }
};

Adjacency out_adjacency(const LabeledGraph& graph);
Adjacency in_adjacency(const LabeledGraph& graph);
/// Simple undirected view: u~v iff u->v or v->u.
Adjacency undirected_adjacency(const LabeledGraph& graph);

/// Subgraph induced by `keep` (node ids in any order, no duplicates). Nodes
/// are renumbered in ascending original id so creation order survives;
/// labels, timestamps and names are carried over.
LabeledGraph induced_subgraph(const LabeledGraph& graph, std::vector<NodeId> keep);

/// Removes unlabelled nodes and their incident edges.
LabeledGraph prune_unlabelled(const LabeledGraph& graph);

/// Kahn topological sort; std::nullopt when the graph has a cycle.
std::optional<std::vector<NodeId>> topological_sort(const LabeledGraph& graph);
inline bool is_acyclic(const LabeledGraph& graph) { return topological_sort(graph).has_value(); }

}  // namespace citegen
