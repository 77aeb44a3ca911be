#include "citegen/neardag.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "citegen/random.hpp"

namespace citegen {

OrderStrategy parse_order_strategy(std::string_view name) {
  if (name == "timestamps") return OrderStrategy::kTimestamps;
  if (name == "degree-diff") return OrderStrategy::kDegreeDiff;
  if (name == "eades") return OrderStrategy::kEades;
  throw GraphError("unknown ordering strategy '" + std::string(name) +
                   "' (expected timestamps, degree-diff or eades)");
}

std::string_view to_string(OrderStrategy strategy) {
  switch (strategy) {
    case OrderStrategy::kTimestamps: return "timestamps";
    case OrderStrategy::kDegreeDiff: return "degree-diff";
    case OrderStrategy::kEades: return "eades";
  }
  return "unknown";
}

std::vector<NodeId> NodeOrdering::oldest_first() const {
  std::vector<NodeId> order(rank.size());
  for (NodeId v = 0; v < rank.size(); ++v) order[rank[v]] = v;
  return order;
}

NodeOrdering creation_order(std::size_t node_count) {
  NodeOrdering ordering;
  ordering.rank.resize(node_count);
  std::iota(ordering.rank.begin(), ordering.rank.end(), std::size_t{0});
  return ordering;
}

namespace {

// Topological-style listing with the newest node first becomes an age rank.
NodeOrdering from_newest_first(const std::vector<NodeId>& newest_first, OrderStrategy strategy) {
  NodeOrdering ordering;
  ordering.strategy = strategy;
  const std::size_t n = newest_first.size();
  ordering.rank.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) ordering.rank[newest_first[pos]] = n - 1 - pos;
  return ordering;
}

NodeOrdering order_by_timestamps(const LabeledGraph& graph) {
  if (!graph.has_timestamps()) throw GraphError("timestamps ordering requested but the graph has no timestamps");
  const auto ts = graph.timestamps();
  std::vector<NodeId> order(graph.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  for (NodeId v : order) {
    if (!ts[v]) throw GraphError("timestamps ordering: node '" + graph.name(v) + "' has no timestamp");
  }
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return *ts[a] < *ts[b]; });
  NodeOrdering ordering;
  ordering.strategy = OrderStrategy::kTimestamps;
  ordering.rank.resize(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) ordering.rank[order[pos]] = pos;
  return ordering;
}

NodeOrdering order_by_degree_diff(const LabeledGraph& graph) {
  const DegreeView deg = degrees(graph);
  std::vector<NodeId> order(graph.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  auto score = [&](NodeId v) {
    return static_cast<std::int64_t>(deg.out[v]) - static_cast<std::int64_t>(deg.in[v]);
  };
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return score(a) > score(b); });
  return from_newest_first(order, OrderStrategy::kDegreeDiff);
}

// Eades, Lin & Smyth (1993): peel sinks to the back and sources to the
// front; otherwise move the node with the largest d_out - d_in to the front.
NodeOrdering order_by_eades(const LabeledGraph& graph) {
  const std::size_t n = graph.node_count();
  const Adjacency out = out_adjacency(graph);
  const Adjacency in = in_adjacency(graph);
  std::vector<std::int64_t> out_left(n), in_left(n);
  for (NodeId v = 0; v < n; ++v) {
    out_left[v] = static_cast<std::int64_t>(out.degree(v));
    in_left[v] = static_cast<std::int64_t>(in.degree(v));
  }

  // Key (-delta, id): begin() is the max-delta node with the smallest id.
  std::set<std::pair<std::int64_t, NodeId>> middle;
  std::vector<char> removed(n, 0), in_middle(n, 0);
  std::deque<NodeId> sinks, sources;

  auto classify = [&](NodeId v) {
    if (out_left[v] == 0) {
      sinks.push_back(v);
    } else if (in_left[v] == 0) {
      sources.push_back(v);
    } else {
      middle.emplace(in_left[v] - out_left[v], v);
      in_middle[v] = 1;
    }
  };
  auto leave_middle = [&](NodeId v) {
    if (in_middle[v]) {
      middle.erase({in_left[v] - out_left[v], v});
      in_middle[v] = 0;
    }
  };
  for (NodeId v = 0; v < n; ++v) classify(v);

  std::vector<NodeId> front, back;
  front.reserve(n);
  std::size_t remaining = n;

  auto remove = [&](NodeId u) {
    removed[u] = 1;
    leave_middle(u);
    --remaining;
    for (NodeId w : out.neighbours(u)) {
      if (removed[w]) continue;
      const bool was_middle = in_middle[w];
      leave_middle(w);
      --in_left[w];
      if (was_middle) classify(w);
    }
    for (NodeId w : in.neighbours(u)) {
      if (removed[w]) continue;
      const bool was_middle = in_middle[w];
      leave_middle(w);
      --out_left[w];
      if (was_middle) {
        classify(w);
      } else if (out_left[w] == 0) {
        sinks.push_back(w);
      }
    }
  };

  while (remaining > 0) {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      while (!sinks.empty()) {
        const NodeId u = sinks.front();
        sinks.pop_front();
        if (removed[u] || out_left[u] != 0) continue;
        back.push_back(u);
        remove(u);
        progressed = true;
      }
      while (!sources.empty()) {
        const NodeId u = sources.front();
        sources.pop_front();
        if (removed[u] || in_left[u] != 0) continue;
        if (out_left[u] == 0) {
          // Became isolated meanwhile; it is a sink now.
          sinks.push_back(u);
          continue;
        }
        front.push_back(u);
        remove(u);
        progressed = true;
      }
    }
    if (remaining == 0) break;
    if (middle.empty()) continue;
    const NodeId u = middle.begin()->second;
    front.push_back(u);
    remove(u);
  }

  std::vector<NodeId> newest_first = std::move(front);
  newest_first.insert(newest_first.end(), back.rbegin(), back.rend());
  return from_newest_first(newest_first, OrderStrategy::kEades);
}

}  // namespace

NodeOrdering order_nodes(const LabeledGraph& graph, OrderStrategy strategy) {
  switch (strategy) {
    case OrderStrategy::kTimestamps: return order_by_timestamps(graph);
    case OrderStrategy::kDegreeDiff: return order_by_degree_diff(graph);
    case OrderStrategy::kEades: return order_by_eades(graph);
  }
  throw GraphError("unknown ordering strategy");
}

std::size_t count_back_edges(const LabeledGraph& graph, const NodeOrdering& ordering) {
  if (ordering.node_count() != graph.node_count()) throw GraphError("ordering does not cover every node");
  std::size_t back = 0;
  for (const Edge& e : graph.edges()) back += ordering.is_back_edge(e);
  return back;
}

double back_edge_ratio(const LabeledGraph& graph, const NodeOrdering& ordering) {
  if (graph.edge_count() == 0) return 0.0;
  return static_cast<double>(count_back_edges(graph, ordering)) / static_cast<double>(graph.edge_count());
}

namespace {

LabeledGraph with_columns_of(const LabeledGraph& source, LabeledGraph target) {
  if (source.has_labels()) target.set_labels({source.labels().begin(), source.labels().end()});
  if (source.has_timestamps()) target.set_timestamps({source.timestamps().begin(), source.timestamps().end()});
  if (source.has_names()) target.set_names({source.names().begin(), source.names().end()});
  return target;
}

}  // namespace

LabeledGraph strip_back_edges(const LabeledGraph& graph, const NodeOrdering& ordering) {
  if (ordering.node_count() != graph.node_count()) throw GraphError("ordering does not cover every node");
  LabeledGraph stripped(graph.node_count());
  stripped.reserve_edges(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    if (!ordering.is_back_edge(e)) stripped.add_edge(e.source, e.target);
  }
  return with_columns_of(graph, std::move(stripped));
}

std::size_t back_edge_budget(std::size_t dag_edges, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw GraphError("back-edge ratio must lie in [0, 1)");
  // The tolerance absorbs representation error in r (0.1 * 90 / 0.9 must be 10).
  return static_cast<std::size_t>(std::floor(r * static_cast<double>(dag_edges) / (1.0 - r) + 1e-9));
}

double back_edge_gap_probability() { return 1.0 - std::exp(-0.1); }

InjectionResult inject_back_edges(const LabeledGraph& dag, double r, std::uint64_t seed) {
  InjectionResult result;
  result.requested = back_edge_budget(dag.edge_count(), r);
  result.graph = dag;
  const std::size_t n = dag.node_count();
  if (result.requested == 0 || n < 2) return result;

  Rng rng = make_rng(seed, "back-edges");
  std::geometric_distribution<std::size_t> gap_minus_one(back_edge_gap_probability());
  std::bernoulli_distribution intra(kIntraCommunityBackEdgeProbability);

  // Single pass community index: local position of every node within its
  // community, and the nodes that have an older community mate.
  std::vector<std::vector<NodeId>> members;
  std::vector<std::size_t> local(n, 0);
  std::vector<NodeId> intra_sources;
  if (dag.has_labels()) {
    members.resize(dag.community_count() + 1);
    for (NodeId v = 0; v < n; ++v) {
      auto& list = members[dag.label(v)];
      local[v] = list.size();
      list.push_back(v);
      if (dag.label(v) != kUnlabelled && local[v] > 0) intra_sources.push_back(v);
    }
  }

  auto draw_gap = [&](std::size_t limit) {
    std::size_t gap = 0;
    do {
      gap = gap_minus_one(rng) + 1;
    } while (gap > limit);
    return gap;
  };

  result.graph.reserve_edges(dag.edge_count() + result.requested);
  const std::size_t max_attempts = 64 * result.requested + 10000;
  for (std::size_t attempt = 0; attempt < max_attempts && result.injected < result.requested; ++attempt) {
    NodeId older = 0;
    NodeId newer = 0;
    if (!intra_sources.empty() && intra(rng)) {
      newer = intra_sources[uniform_index(rng, intra_sources.size())];
      const auto& list = members[dag.label(newer)];
      older = list[local[newer] - draw_gap(local[newer])];
    } else {
      newer = static_cast<NodeId>(1 + uniform_index<std::size_t>(rng, n - 1));
      older = static_cast<NodeId>(newer - draw_gap(newer));
    }
    if (result.graph.add_edge(older, newer)) ++result.injected;
  }
  return result;
}

CycleBreakResult orient_to_dag(const LabeledGraph& graph, OrderStrategy strategy) {
  CycleBreakResult result;
  result.ordering = order_nodes(graph, strategy);
  LabeledGraph dag(graph.node_count());
  dag.reserve_edges(graph.edge_count());
  for (const Edge& e : graph.edges()) {
    const bool flip = result.ordering.is_back_edge(e);
    const NodeId s = flip ? e.target : e.source;
    const NodeId t = flip ? e.source : e.target;
    if (!dag.add_edge(s, t)) ++result.collapsed;
  }
  result.graph = with_columns_of(graph, std::move(dag));
  return result;
}

CycleBreakResult cycle_break(const LabeledGraph& graph, double r, std::uint64_t seed, OrderStrategy strategy) {
  if (!(r >= 0.0 && r < 1.0)) throw GraphError("cycle_break: ratio must lie in [0, 1)");
  CycleBreakResult result = orient_to_dag(graph, strategy);
  const LabeledGraph& dag = result.graph;
  const std::size_t m = dag.edge_count();
  const auto target = static_cast<std::size_t>(std::llround(r * static_cast<double>(m)));
  if (target == 0) return result;

  // Partial Fisher-Yates: the first `target` accepted slots are the sample.
  Rng rng = make_rng(seed, "cycle-break");
  std::vector<std::size_t> pool(m);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<char> flip(m, 0);
  std::size_t chosen = 0;
  for (std::size_t i = 0; i < m && chosen < target; ++i) {
    const std::size_t j = i + uniform_index(rng, m - i);
    std::swap(pool[i], pool[j]);
    const Edge& e = dag.edges()[pool[i]];
    // A reversal onto an existing edge would merge two edges; draw again.
    if (dag.has_edge(e.target, e.source)) continue;
    flip[pool[i]] = 1;
    ++chosen;
  }

  LabeledGraph out(dag.node_count());
  out.reserve_edges(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = dag.edges()[i];
    if (flip[i]) {
      out.add_edge(e.target, e.source);
    } else {
      out.add_edge(e.source, e.target);
    }
  }
  result.reversed = chosen;
  result.graph = with_columns_of(dag, std::move(out));
  return result;
}

}  // namespace citegen
