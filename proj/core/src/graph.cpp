#include "citegen/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace citegen {

NodeId LabeledGraph::add_nodes(std::size_t count) {
  const auto first = static_cast<NodeId>(node_count_);
  node_count_ += count;
  if (!labels_.empty()) labels_.resize(node_count_, kUnlabelled);
  if (!timestamps_.empty()) timestamps_.resize(node_count_);
  if (!names_.empty()) {
    for (std::size_t v = first; v < node_count_; ++v) names_.push_back(std::to_string(v));
  }
  return first;
}

NodeId LabeledGraph::add_node(std::string name) {
  if (names_.empty()) {
    names_.reserve(node_count_ + 1);
    for (std::size_t v = 0; v < node_count_; ++v) names_.push_back(std::to_string(v));
  }
  const NodeId id = add_nodes(1);
  names_.back() = std::move(name);
  return id;
}

void LabeledGraph::check_node(NodeId v) const {
  if (v >= node_count_) {
    throw GraphError("node id " + std::to_string(v) + " out of range (node_count=" +
                     std::to_string(node_count_) + ")");
  }
}

bool LabeledGraph::add_edge(NodeId source, NodeId target) {
  check_node(source);
  check_node(target);
  if (source == target) return false;
  if (!edge_set_.insert(key(source, target)).second) return false;
  edges_.push_back({source, target});
  return true;
}

bool LabeledGraph::has_edge(NodeId source, NodeId target) const {
  return edge_set_.contains(key(source, target));
}

void LabeledGraph::reserve_edges(std::size_t count) {
  edges_.reserve(count);
  edge_set_.reserve(count);
}

CommunityId LabeledGraph::community_count() const {
  if (labels_.empty()) return 0;
  return *std::max_element(labels_.begin(), labels_.end());
}

void LabeledGraph::set_labels(std::vector<CommunityId> labels) {
  if (!labels.empty() && labels.size() != node_count_) {
    throw GraphError("label vector size " + std::to_string(labels.size()) +
                     " does not match node count " + std::to_string(node_count_));
  }
  labels_ = std::move(labels);
}

void LabeledGraph::set_timestamps(std::vector<std::optional<std::int64_t>> timestamps) {
  if (!timestamps.empty() && timestamps.size() != node_count_) {
    throw GraphError("timestamp vector size does not match node count");
  }
  timestamps_ = std::move(timestamps);
}

std::string LabeledGraph::name(NodeId v) const {
  if (names_.empty()) return std::to_string(v);
  return names_.at(v);
}

void LabeledGraph::set_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != node_count_) {
    throw GraphError("name vector size does not match node count");
  }
  names_ = std::move(names);
}

DegreeView degrees(const LabeledGraph& graph) {
  DegreeView view;
  view.in.assign(graph.node_count(), 0);
  view.out.assign(graph.node_count(), 0);
  for (const Edge& e : graph.edges()) {
    ++view.out[e.source];
    ++view.in[e.target];
  }
  return view;
}

namespace {

Adjacency build_csr(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& arcs) {
  Adjacency adj;
  adj.offsets.assign(n + 1, 0);
  for (const auto& [u, v] : arcs) ++adj.offsets[u + 1];
  std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
  adj.targets.resize(arcs.size());
  std::vector<std::size_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const auto& [u, v] : arcs) adj.targets[cursor[u]++] = v;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adj.targets.begin() + static_cast<std::ptrdiff_t>(adj.offsets[v]),
              adj.targets.begin() + static_cast<std::ptrdiff_t>(adj.offsets[v + 1]));
  }
  return adj;
}

}  // namespace

Adjacency out_adjacency(const LabeledGraph& graph) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) arcs.emplace_back(e.source, e.target);
  return build_csr(graph.node_count(), arcs);
}

Adjacency in_adjacency(const LabeledGraph& graph) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) arcs.emplace_back(e.target, e.source);
  return build_csr(graph.node_count(), arcs);
}

Adjacency undirected_adjacency(const LabeledGraph& graph) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(2 * graph.edge_count());
  for (const Edge& e : graph.edges()) {
    // A reciprocal pair shows up once per direction; keep the copy emitted by
    // the lower->higher arc so each undirected edge appears once per side.
    if (e.source < e.target || !graph.has_edge(e.target, e.source)) {
      arcs.emplace_back(e.source, e.target);
      arcs.emplace_back(e.target, e.source);
    }
  }
  return build_csr(graph.node_count(), arcs);
}

LabeledGraph induced_subgraph(const LabeledGraph& graph, std::vector<NodeId> keep) {
  std::sort(keep.begin(), keep.end());
  constexpr auto kAbsent = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(graph.node_count(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (remap[keep[i]] != kAbsent) throw GraphError("duplicate node in induced_subgraph");
    remap[keep[i]] = static_cast<NodeId>(i);
  }

  LabeledGraph sub(keep.size());
  for (const Edge& e : graph.edges()) {
    if (remap[e.source] != kAbsent && remap[e.target] != kAbsent) {
      sub.add_edge(remap[e.source], remap[e.target]);
    }
  }
  if (graph.has_labels()) {
    std::vector<CommunityId> labels(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) labels[i] = graph.label(keep[i]);
    sub.set_labels(std::move(labels));
  }
  if (graph.has_timestamps()) {
    std::vector<std::optional<std::int64_t>> ts(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) ts[i] = graph.timestamps()[keep[i]];
    sub.set_timestamps(std::move(ts));
  }
  if (graph.has_names()) {
    std::vector<std::string> names(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) names[i] = graph.names()[keep[i]];
    sub.set_names(std::move(names));
  }
  return sub;
}

LabeledGraph prune_unlabelled(const LabeledGraph& graph) {
  if (!graph.has_labels()) return LabeledGraph{};
  std::vector<NodeId> keep;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (graph.label(v) != kUnlabelled) keep.push_back(v);
  }
  return induced_subgraph(graph, std::move(keep));
}

std::optional<std::vector<NodeId>> topological_sort(const LabeledGraph& graph) {
  const std::size_t n = graph.node_count();
  const Adjacency out = out_adjacency(graph);
  std::vector<std::size_t> indeg(n, 0);
  for (const Edge& e : graph.edges()) ++indeg[e.target];

  std::vector<NodeId> order;
  order.reserve(n);
  std::deque<NodeId> ready;
  for (NodeId v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const NodeId v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (NodeId w : out.neighbours(v)) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

}  // namespace citegen
