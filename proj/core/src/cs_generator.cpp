#include "citegen/cs_generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace citegen {

void CsParams::validate() const {
  const std::size_t n = p.size();
  if (n == 0) throw ParamError("CsParams: at least one community is required");
  if (m.size() != n || rho.size() != n || sigma2.size() != n) {
    throw ParamError("CsParams: p, m, rho and sigma2 must have the same length");
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-9) {
    throw ParamError("CsParams: community probabilities sum to " + std::to_string(total) + ", not 1");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = " (community " + std::to_string(i + 1) + ")";
    if (!(p[i] > 0.0)) throw ParamError("CsParams: p must be positive" + where);
    if (!(m[i] > 0.0) || !std::isfinite(m[i])) throw ParamError("CsParams: m must be positive" + where);
    if (!(sigma2[i] >= 0.0) || !std::isfinite(sigma2[i])) {
      throw ParamError("CsParams: sigma2 must be non-negative" + where);
    }
    if (!(rho[i] >= 0.0 && rho[i] <= 1.0)) throw ParamError("CsParams: rho must lie in [0, 1]" + where);
  }
}

CsParams CsParams::uniform(std::size_t k, double m, double rho, double sigma2) {
  CsParams params;
  params.p.assign(k, 1.0 / static_cast<double>(k));
  params.m.assign(k, m);
  params.rho.assign(k, rho);
  params.sigma2.assign(k, sigma2);
  return params;
}

DerivedParams derive(const CsParams& params) {
  params.validate();
  DerivedParams d;
  for (std::size_t j = 0; j < params.k(); ++j) {
    d.mean_accidental += params.p[j] * params.m[j] * (1.0 - params.rho[j]);
  }
  d.nu.resize(params.k());
  for (std::size_t i = 0; i < params.k(); ++i) {
    const double pref = params.rho[i] * params.m[i];
    const double denom = d.mean_accidental + pref;
    if (denom == 0.0) {
      throw ParamError("derive: effective preferentiality of community " + std::to_string(i + 1) +
                       " is 0/0 (no accidental and no preferential citations)");
    }
    d.nu[i] = pref / denom;
  }
  return d;
}

std::size_t sample_out_degree(double m, double sigma2, std::size_t upper, Rng& rng) {
  double lambda = m;
  if (sigma2 > m) {
    const double shape = m * m / (sigma2 - m);
    const double p_nb = m / sigma2;
    lambda = std::gamma_distribution<double>(shape, (1.0 - p_nb) / p_nb)(rng);
  }
  if (!(lambda > 0.0)) return 0;
  const auto draw = std::poisson_distribution<std::uint64_t>(lambda)(rng);
  return static_cast<std::size_t>(std::min<std::uint64_t>(draw, upper));
}

EdgeSplit split_edges(std::size_t d_out, double rho, Rng& rng) {
  if (d_out == 0) return {};
  const auto acc = std::binomial_distribution<std::size_t>(d_out, 1.0 - rho)(rng);
  return {acc, d_out - acc};
}

std::optional<NodeId> draw_preferential(const PolyaUrn& urn, std::span<const NodeId> community_members,
                                        NodeId new_node, Rng& rng) {
  if (!urn.empty()) return urn.draw(rng);
  // Cold start: the community has not been cited yet.
  const auto self = std::find(community_members.begin(), community_members.end(), new_node);
  const std::size_t candidates = community_members.size() - (self != community_members.end() ? 1 : 0);
  if (candidates == 0) return std::nullopt;
  std::size_t pick = uniform_index(rng, candidates);
  if (self != community_members.end() &&
      pick >= static_cast<std::size_t>(self - community_members.begin())) {
    ++pick;
  }
  return community_members[pick];
}

CsGenerator::CsGenerator(CsParams params, std::uint64_t seed)
    : params_(std::move(params)),
      community_rng_(make_rng(seed, "cs-community")),
      degree_rng_(make_rng(seed, "cs-out-degree")),
      split_rng_(make_rng(seed, "cs-split")),
      target_rng_(make_rng(seed, "cs-targets")) {
  params_.validate();
  community_dist_ = std::discrete_distribution<std::size_t>(params_.p.begin(), params_.p.end());
  urns_.resize(params_.k());
  members_.resize(params_.k());
}

void CsGenerator::reserve(std::size_t nodes) {
  labels_.reserve(nodes);
  double mean_m = 0.0;
  for (std::size_t i = 0; i < params_.k(); ++i) mean_m += params_.p[i] * params_.m[i];
  const auto edges = static_cast<std::size_t>(mean_m * static_cast<double>(nodes) * 1.05);
  graph_.reserve_edges(edges);
  for (std::size_t i = 0; i < params_.k(); ++i) {
    const auto share = static_cast<double>(nodes) * params_.p[i];
    members_[i].reserve(static_cast<std::size_t>(share * 1.1) + 16);
    urns_[i].reserve(static_cast<std::size_t>(static_cast<double>(edges) * params_.p[i] * 1.1) + 16);
  }
}

NodeId CsGenerator::step() {
  const NodeId v = graph_.add_nodes(1);
  last_sampled_ = 0;
  if (v < params_.k()) {
    labels_.push_back(static_cast<CommunityId>(v + 1));
    members_[v].push_back(v);
    return v;
  }

  const std::size_t c = community_dist_(community_rng_);
  labels_.push_back(static_cast<CommunityId>(c + 1));

  const std::size_t d_out = sample_out_degree(params_.m[c], params_.sigma2[c], v, degree_rng_);
  last_sampled_ = d_out;
  const EdgeSplit split = split_edges(d_out, params_.rho[c], split_rng_);

  targets_.clear();
  for (std::size_t j = 0; j < split.accidental; ++j) {
    targets_.push_back(uniform_index<NodeId>(target_rng_, v));
  }
  for (std::size_t j = 0; j < split.preferential; ++j) {
    if (auto u = draw_preferential(urns_[c], members_[c], v, target_rng_)) targets_.push_back(*u);
  }
  // Set-union semantics: repeated draws collapse into one edge.
  std::sort(targets_.begin(), targets_.end());
  targets_.erase(std::unique(targets_.begin(), targets_.end()), targets_.end());

  for (NodeId u : targets_) {
    graph_.add_edge(v, u);
    urns_[labels_[u] - 1].add(u);
  }
  members_[c].push_back(v);
  return v;
}

LabeledGraph CsGenerator::release() && {
  LabeledGraph out = std::move(graph_);
  out.set_labels(std::move(labels_));
  return out;
}

LabeledGraph generate(const CsParams& params, std::size_t node_count, std::uint64_t seed) {
  params.validate();
  if (node_count < params.k()) {
    throw ParamError("generate: node count " + std::to_string(node_count) + " is below community count " +
                     std::to_string(params.k()));
  }
  CsGenerator gen(params, seed);
  gen.reserve(node_count);
  for (std::size_t i = 0; i < node_count; ++i) gen.step();
  return std::move(gen).release();
}

}  // namespace citegen
