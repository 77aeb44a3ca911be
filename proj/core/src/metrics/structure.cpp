#include "citegen/metrics/structure.hpp"

#include <algorithm>
#include <cmath>

#include "citegen/metrics/distances.hpp"

namespace citegen::metrics {

namespace {

// Triangles through each node. Edges are oriented from lower to higher
// (degree, id) so every triangle is found once from its lowest corner.
std::vector<std::uint64_t> triangles_per_node(const Adjacency& nb) {
  const std::size_t n = nb.node_count();
  auto before = [&](NodeId a, NodeId b) {
    return nb.degree(a) < nb.degree(b) || (nb.degree(a) == nb.degree(b) && a < b);
  };
  std::vector<std::vector<NodeId>> forward(n);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : nb.neighbours(v)) {
      if (before(v, u)) forward[v].push_back(u);
    }
  }
  std::vector<std::uint64_t> tri(n, 0);
  std::vector<char> mark(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : forward[v]) mark[u] = 1;
    for (NodeId u : forward[v]) {
      for (NodeId w : forward[u]) {
        if (mark[w]) {
          ++tri[v];
          ++tri[u];
          ++tri[w];
        }
      }
    }
    for (NodeId u : forward[v]) mark[u] = 0;
  }
  return tri;
}

}  // namespace

std::vector<double> local_clustering(const LabeledGraph& graph) {
  const Adjacency nb = undirected_adjacency(graph);
  const auto tri = triangles_per_node(nb);
  std::vector<double> c(graph.node_count(), 0.0);
  for (NodeId v = 0; v < c.size(); ++v) {
    const double k = static_cast<double>(nb.degree(v));
    if (k >= 2) c[v] = 2.0 * static_cast<double>(tri[v]) / (k * (k - 1.0));
  }
  return c;
}

double global_clustering(const LabeledGraph& graph) {
  const Adjacency nb = undirected_adjacency(graph);
  const auto tri = triangles_per_node(nb);
  double closed = 0.0, triples = 0.0;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    const double k = static_cast<double>(nb.degree(v));
    closed += static_cast<double>(tri[v]);
    triples += k * (k - 1.0) / 2.0;
  }
  return triples > 0.0 ? closed / triples : 0.0;
}

std::uint64_t ffl_count(const LabeledGraph& graph) {
  const Adjacency out = out_adjacency(graph);
  std::vector<char> mark(graph.node_count(), 0);
  std::uint64_t count = 0;
  for (NodeId a = 0; a < graph.node_count(); ++a) {
    for (NodeId c : out.neighbours(a)) mark[c] = 1;
    for (NodeId b : out.neighbours(a)) {
      for (NodeId c : out.neighbours(b)) count += mark[c];
    }
    for (NodeId c : out.neighbours(a)) mark[c] = 0;
  }
  return count;
}

double degree_assortativity(const LabeledGraph& graph, DegreeRole role) {
  if (graph.edge_count() == 0) throw MetricError("assortativity undefined: no edges");
  const DegreeView deg = degrees(graph);
  const auto& d = role == DegreeRole::kIn ? deg.in : deg.out;
  const double m = static_cast<double>(graph.edge_count());
  double sx = 0, sy = 0;
  for (const Edge& e : graph.edges()) {
    sx += static_cast<double>(d[e.source]);
    sy += static_cast<double>(d[e.target]);
  }
  const double mx = sx / m, my = sy / m;
  double cov = 0, vx = 0, vy = 0;
  for (const Edge& e : graph.edges()) {
    const double x = static_cast<double>(d[e.source]) - mx;
    const double y = static_cast<double>(d[e.target]) - my;
    cov += x * y;
    vx += x * x;
    vy += y * y;
  }
  // Rounding leaves a tiny residue when all degrees are equal.
  const double floor_x = 1e-12 * m * (mx * mx + 1.0), floor_y = 1e-12 * m * (my * my + 1.0);
  if (vx <= floor_x || vy <= floor_y) throw MetricError("assortativity undefined: zero degree variance");
  return cov / std::sqrt(vx * vy);
}

}  // namespace citegen::metrics
