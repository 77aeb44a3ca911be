#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "citegen/graph.hpp"

namespace citegen {

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EdgeListLoad {
  LabeledGraph graph;  // carries the interned external names
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

/// Reads "src<TAB>dst" lines. Identifiers are interned to dense ids in
/// first-appearance order. Self-loops and repeated edges are dropped and
/// counted. Blank lines are skipped.
EdgeListLoad load_edge_list(std::istream& in, bool has_header = false);
EdgeListLoad load_edge_list(const std::filesystem::path& path, bool has_header = false);

struct LabelLoad {
  /// One entry per graph node; kUnlabelled where the file is silent.
  std::vector<CommunityId> labels;
  /// External community names; community id c has name community_names[c-1].
  std::vector<std::string> community_names;
  std::size_t unlabelled = 0;
};

enum class UnknownNodePolicy {
  kError,
  /// Append the node as isolated. Edge lists cannot express isolated nodes,
  /// so a labels file written next to a generated graph may mention them.
  kAddIsolated,
};

/// Reads "node<TAB>community" lines against the names interned in `graph`.
/// Community identifiers are interned to 1..k in first-appearance order.
LabelLoad load_labels(std::istream& in, LabeledGraph& graph, bool has_header = false,
                      UnknownNodePolicy policy = UnknownNodePolicy::kError);
LabelLoad load_labels(const std::filesystem::path& path, LabeledGraph& graph, bool has_header = false,
                      UnknownNodePolicy policy = UnknownNodePolicy::kError);

/// Reads "node<TAB>integer" lines.
std::vector<std::optional<std::int64_t>> load_timestamps(std::istream& in, const LabeledGraph& graph,
                                                         bool has_header = false);
std::vector<std::optional<std::int64_t>> load_timestamps(const std::filesystem::path& path,
                                                         const LabeledGraph& graph,
                                                         bool has_header = false);

void write_edge_list(std::ostream& out, const LabeledGraph& graph);
void write_edge_list(const std::filesystem::path& path, const LabeledGraph& graph);
/// Writes "node<TAB>community" for every labelled node.
void write_labels(std::ostream& out, const LabeledGraph& graph);
void write_labels(const std::filesystem::path& path, const LabeledGraph& graph);

}  // namespace citegen
