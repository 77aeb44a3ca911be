#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "citegen/graph.hpp"
#include "citegen/random.hpp"

namespace citegen {

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bound used when clamping estimated preferentiality into (0, 1).
inline constexpr double kRhoEpsilon = 1e-3;

/// Per-community growth parameters: share of new nodes `p`, expected
/// out-degree `m`, preferentiality `rho` and out-degree variance `sigma2`.
/// Index i describes community i + 1.
struct CsParams {
  std::vector<double> p;
  std::vector<double> m;
  std::vector<double> rho;
  std::vector<double> sigma2;

  std::size_t k() const { return p.size(); }

  /// Throws ParamError unless sizes agree, sum(p) == 1 within 1e-9, p > 0,
  /// m > 0, sigma2 >= 0 and rho in [0, 1].
  void validate() const;

  /// Same parameters for every one of k communities, p uniform.
  static CsParams uniform(std::size_t k, double m, double rho, double sigma2);
};

struct DerivedParams {
  double mean_accidental = 0.0;  // <a> = sum_j p_j m_j (1 - rho_j)
  std::vector<double> nu;        // effective preferentiality per community
};

/// nu_i = rho_i m_i / (<a> + rho_i m_i). Throws ParamError when <a> = 0 and
/// some community has rho_i m_i = 0 (0/0).
DerivedParams derive(const CsParams& params);

/// Out-degree draw, capped at `upper`. Overdispersed communities
/// (sigma2 > m) use a Gamma-Poisson compound with real shape
/// r = m^2 / (sigma2 - m) and scale (1 - p_nb) / p_nb, p_nb = m / sigma2;
/// otherwise Poisson(m).
std::size_t sample_out_degree(double m, double sigma2, std::size_t upper, Rng& rng);

struct EdgeSplit {
  std::size_t accidental = 0;
  std::size_t preferential = 0;
};

/// accidental ~ Binomial(d_out, 1 - rho); preferential takes the rest.
EdgeSplit split_edges(std::size_t d_out, double rho, Rng& rng);

/// Append-only multiset of node ids. A node appears once per in-edge it
/// has received, so a uniform draw is in-degree proportional.
class PolyaUrn {
 public:
  void add(NodeId v) { entries_.push_back(v); }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::span<const NodeId> entries() const { return entries_; }
  NodeId draw(Rng& rng) const { return entries_[uniform_index(rng, entries_.size())]; }
  void reserve(std::size_t n) { entries_.reserve(n); }

 private:
  std::vector<NodeId> entries_;
};

/// Preferential target for `new_node`: a uniform urn entry, or while the urn
/// is still empty a uniform community member other than `new_node`.
/// std::nullopt when neither exists; the caller skips that edge.
std::optional<NodeId> draw_preferential(const PolyaUrn& urn, std::span<const NodeId> community_members,
                                        NodeId new_node, Rng& rng);

/// Growth process producing a strict DAG with planted communities. The first
/// k nodes are seeds (node i belongs to community i + 1); every later node
/// picks a community, samples its out-degree, splits it into accidental
/// and preferential citations and links to older nodes only.
///
/// Exposed step by step so tests can inspect the urns between steps; most
/// callers want generate().
class CsGenerator {
 public:
  CsGenerator(CsParams params, std::uint64_t seed);

  /// Adds the next node and its out-edges; returns its id.
  NodeId step();
  void reserve(std::size_t nodes);

  std::size_t node_count() const { return graph_.node_count(); }
  const LabeledGraph& graph() const { return graph_; }
  std::span<const CommunityId> labels() const { return labels_; }
  const PolyaUrn& urn(CommunityId c) const { return urns_.at(c - 1); }
  std::span<const NodeId> members(CommunityId c) const { return members_.at(c - 1); }
  /// Out-degree drawn for the most recent node before set-union collapse.
  std::size_t last_sampled_out_degree() const { return last_sampled_; }

  /// Finishes generation; the returned graph carries the community labels.
  LabeledGraph release() &&;

 private:
  CsParams params_;
  Rng community_rng_;
  Rng degree_rng_;
  Rng split_rng_;
  Rng target_rng_;
  std::discrete_distribution<std::size_t> community_dist_;
  LabeledGraph graph_;
  std::vector<CommunityId> labels_;
  std::vector<PolyaUrn> urns_;
  std::vector<std::vector<NodeId>> members_;
  std::vector<NodeId> targets_;
  std::size_t last_sampled_ = 0;
};

/// Runs CsGenerator for `node_count` nodes. Requires node_count >= k.
LabeledGraph generate(const CsParams& params, std::size_t node_count, std::uint64_t seed);

}  // namespace citegen
