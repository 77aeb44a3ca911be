#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "citegen/graph.hpp"

namespace citegen::metrics {

inline constexpr std::size_t kTriadTypes = 16;

/// Holland-Leinhardt names in the conventional order 003, 012, ..., 300.
std::string_view triad_name(std::size_t type);

/// Type index (0..15) of the triple (v, u, w) in `graph`.
std::size_t triad_type(const LabeledGraph& graph, NodeId v, NodeId u, NodeId w);

/// Counts over all C(n, 3) triples, by neighbourhood enumeration
/// (Batagelj-Mrvar); the 003 count is the remainder.
std::array<std::uint64_t, kTriadTypes> triad_census_counts(const LabeledGraph& graph);

struct TriadOptions {
  std::size_t exact_limit = 3000;  // exact census up to this node count
  std::size_t samples = 200000;    // uniformly drawn triples above it
  std::uint64_t seed = 0;
  bool force_sampled = false;
};

/// Triad-type proportions. Throws MetricError for fewer than 3 nodes.
std::array<double, kTriadTypes> triad_census(const LabeledGraph& graph, const TriadOptions& options = {});

}  // namespace citegen::metrics
