#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "citegen/graph.hpp"

namespace citegen {

class BaselineError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// What a generator had to drop or could not place. Warnings are human
/// readable and never fatal.
struct BaselineReport {
  std::size_t self_loops_erased = 0;
  std::size_t duplicates_erased = 0;
  std::size_t unplaced = 0;  // block edges that found no free slot
  std::vector<std::string> warnings;

  /// Erased edges relative to the edges attempted.
  double erased_fraction(std::size_t attempted) const {
    return attempted == 0 ? 0.0
                          : static_cast<double>(self_loops_erased + duplicates_erased) / static_cast<double>(attempted);
  }
};

struct BaselineSample {
  LabeledGraph graph;
  BaselineReport report;
};

// Erdos-Renyi G(n, p) over ordered pairs.

struct ErFit {
  std::size_t n = 0;
  double p = 0.0;
};

ErFit fit_er(const LabeledGraph& graph);
/// Skip sampling over the n(n-1) ordered pairs; expected O(n + |E|).
LabeledGraph generate_er(const ErFit& fit, std::uint64_t seed);

// Directed configuration model.

struct ConfigFit {
  std::vector<std::size_t> out_seq;
  std::vector<std::size_t> in_seq;
};

ConfigFit fit_config(const LabeledGraph& graph);
/// Stub matching with self-loops and multi-edges erased; the erased counts
/// go to the report. Throws BaselineError if the sequences are unbalanced.
BaselineSample generate_config(const ConfigFit& fit, std::uint64_t seed);

// Stochastic block models.

struct BlockCount {
  CommunityId from = 0;  // 1-based block ids
  CommunityId to = 0;
  std::size_t edges = 0;
};

/// Shared by SBM and DC-SBM. Block edge counts are stored sparsely, sorted by
/// (from, to); absent pairs have no edges. For the degree-corrected variant
/// `out_weight` and `in_weight` hold node degrees: theta_out(v) is
/// out_weight[v] over the total of v's block.
struct SbmFit {
  std::size_t k = 0;
  std::vector<CommunityId> labels;
  std::vector<std::size_t> sizes;  // index c-1
  std::vector<BlockCount> block_edges;
  bool degree_corrected = false;
  std::vector<std::size_t> out_weight;
  std::vector<std::size_t> in_weight;

  std::size_t edges_between(CommunityId from, CommunityId to) const;
  std::size_t total_edges() const;
  /// Directed block density e_ab / (N_a N_b - [a = b] N_a).
  double block_probability(CommunityId from, CommunityId to) const;
  double theta_out(NodeId v) const;
  double theta_in(NodeId v) const;
};

/// Requires every node to carry a label (throws BaselineError otherwise).
SbmFit fit_sbm(const LabeledGraph& graph);
SbmFit fit_dcsbm(const LabeledGraph& graph);

/// Per block pair: Poisson(e_ab) edges with uniform endpoints inside the
/// blocks, rejecting self-loops and duplicates. Block pairs use their own
/// random streams and are merged in block order.
BaselineSample generate_sbm(const SbmFit& fit, std::uint64_t seed);
/// As generate_sbm, with endpoints drawn proportionally to node degree
/// inside each block (degree-stub urns).
BaselineSample generate_dcsbm(const SbmFit& fit, std::uint64_t seed);

// Fit documents.

std::string to_json_string(const ErFit& fit);
std::string to_json_string(const ConfigFit& fit);
std::string to_json_string(const SbmFit& fit);

// Dispatch by name, used by the command line and the bench harness.

enum class BaselineKind { kEr, kConfig, kSbm, kDcsbm };

BaselineKind parse_baseline_kind(std::string_view name);
std::string_view to_string(BaselineKind kind);
/// Whether the model needs ground-truth labels to be fitted.
bool needs_labels(BaselineKind kind);

/// Fits `kind` to `graph` and draws one sample. The sample of a label-free
/// model carries no labels.
BaselineSample fit_and_generate(BaselineKind kind, const LabeledGraph& graph, std::uint64_t seed);

}  // namespace citegen
