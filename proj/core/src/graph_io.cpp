#include "citegen/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include <absl/container/flat_hash_map.h>

namespace citegen {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

// Splits a record into exactly two fields. Tab is the field separator; lines
// without a tab fall back to runs of spaces.
bool split_pair(std::string_view line, std::string_view& a, std::string_view& b) {
  auto pos = line.find('\t');
  if (pos == std::string_view::npos) pos = line.find(' ');
  if (pos == std::string_view::npos) return false;
  a = trim(line.substr(0, pos));
  b = trim(line.substr(pos + 1));
  if (a.empty() || b.empty()) return false;
  if (b.find_first_of("\t ") != std::string_view::npos) return false;
  return true;
}

// Calls fn(line_number, first, second) for every data record.
template <typename Fn>
void for_each_record(std::istream& in, bool has_header, Fn&& fn) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (line_no == 1 && has_header) continue;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::string_view a, b;
    if (!split_pair(line, a, b)) throw ParseError(line_no, "expected two tab-separated fields");
    fn(line_no, a, b);
  }
}

absl::flat_hash_map<std::string, NodeId> name_index(const LabeledGraph& graph) {
  absl::flat_hash_map<std::string, NodeId> index;
  index.reserve(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) index.emplace(graph.name(v), v);
  return index;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path.string());
  return out;
}

}  // namespace

EdgeListLoad load_edge_list(std::istream& in, bool has_header) {
  absl::flat_hash_map<std::string, NodeId> ids;
  std::vector<std::string> names;
  std::vector<Edge> raw_edges;

  auto intern = [&](std::string_view name) {
    auto [it, inserted] = ids.try_emplace(std::string(name), static_cast<NodeId>(names.size()));
    if (inserted) names.emplace_back(name);
    return it->second;
  };

  for_each_record(in, has_header, [&](std::size_t, std::string_view a, std::string_view b) {
    const NodeId s = intern(a);
    const NodeId t = intern(b);
    raw_edges.push_back({s, t});
  });

  EdgeListLoad result;
  result.graph = LabeledGraph(names.size());
  result.graph.reserve_edges(raw_edges.size());
  for (const Edge& e : raw_edges) {
    if (e.source == e.target) {
      ++result.self_loops;
    } else if (!result.graph.add_edge(e.source, e.target)) {
      ++result.duplicate_edges;
    }
  }
  result.graph.set_names(std::move(names));
  return result;
}

EdgeListLoad load_edge_list(const std::filesystem::path& path, bool has_header) {
  auto in = open_input(path);
  return load_edge_list(in, has_header);
}

LabelLoad load_labels(std::istream& in, LabeledGraph& graph, bool has_header, UnknownNodePolicy policy) {
  auto index = name_index(graph);
  absl::flat_hash_map<std::string, CommunityId> communities;
  LabelLoad result;
  result.labels.assign(graph.node_count(), kUnlabelled);

  for_each_record(in, has_header, [&](std::size_t line_no, std::string_view node, std::string_view comm) {
    auto it = index.find(std::string(node));
    if (it == index.end()) {
      if (policy == UnknownNodePolicy::kError) {
        throw ParseError(line_no, "label references unknown node '" + std::string(node) + "'");
      }
      it = index.emplace(std::string(node), graph.add_node(std::string(node))).first;
      result.labels.push_back(kUnlabelled);
    }
    auto [cit, inserted] = communities.try_emplace(
        std::string(comm), static_cast<CommunityId>(result.community_names.size() + 1));
    if (inserted) result.community_names.emplace_back(comm);
    result.labels[it->second] = cit->second;
  });

  for (CommunityId c : result.labels) result.unlabelled += (c == kUnlabelled);
  return result;
}

LabelLoad load_labels(const std::filesystem::path& path, LabeledGraph& graph, bool has_header,
                      UnknownNodePolicy policy) {
  auto in = open_input(path);
  return load_labels(in, graph, has_header, policy);
}

std::vector<std::optional<std::int64_t>> load_timestamps(std::istream& in, const LabeledGraph& graph,
                                                         bool has_header) {
  const auto index = name_index(graph);
  std::vector<std::optional<std::int64_t>> ts(graph.node_count());
  for_each_record(in, has_header, [&](std::size_t line_no, std::string_view node, std::string_view value) {
    const auto it = index.find(std::string(node));
    if (it == index.end()) {
      throw ParseError(line_no, "timestamp references unknown node '" + std::string(node) + "'");
    }
    std::int64_t parsed = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw ParseError(line_no, "timestamp is not an integer: '" + std::string(value) + "'");
    }
    ts[it->second] = parsed;
  });
  return ts;
}

std::vector<std::optional<std::int64_t>> load_timestamps(const std::filesystem::path& path,
                                                         const LabeledGraph& graph, bool has_header) {
  auto in = open_input(path);
  return load_timestamps(in, graph, has_header);
}

void write_edge_list(std::ostream& out, const LabeledGraph& graph) {
  for (const Edge& e : graph.edges()) out << graph.name(e.source) << '\t' << graph.name(e.target) << '\n';
}

void write_edge_list(const std::filesystem::path& path, const LabeledGraph& graph) {
  auto out = open_output(path);
  write_edge_list(out, graph);
}

void write_labels(std::ostream& out, const LabeledGraph& graph) {
  if (!graph.has_labels()) return;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (graph.label(v) != kUnlabelled) out << graph.name(v) << '\t' << graph.label(v) << '\n';
  }
}

void write_labels(const std::filesystem::path& path, const LabeledGraph& graph) {
  auto out = open_output(path);
  write_labels(out, graph);
}

}  // namespace citegen
