#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "citegen/graph.hpp"
#include "citegen/graph_io.hpp"

namespace fixture {

using citegen::LabeledGraph;
using citegen::NodeId;

/// Directed G(n, p) drawn edge by edge, for oracle comparisons.
inline LabeledGraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  LabeledGraph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

/// Random DAG on creation order (edges new -> old) with k round-robin labels.
inline LabeledGraph random_labelled_dag(std::size_t n, double p, std::uint32_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  LabeledGraph g(n);
  for (NodeId v = 1; v < n; ++v) {
    for (NodeId u = 0; u < v; ++u) {
      if (coin(rng)) g.add_edge(v, u);
    }
  }
  std::vector<citegen::CommunityId> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<citegen::CommunityId>(i % k + 1);
  g.set_labels(std::move(labels));
  return g;
}

inline LabeledGraph from_edges(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  LabeledGraph g(n);
  for (auto [s, t] : edges) g.add_edge(s, t);
  return g;
}

inline LabeledGraph parse(const std::string& text) {
  std::istringstream in(text);
  return citegen::load_edge_list(in).graph;
}

}  // namespace fixture
