#include "citegen/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace citegen {
namespace {

template <typename T>
double sorted_gini(std::vector<T> x) {
  if (x.empty()) throw EstimationError("gini: empty input");
  std::sort(x.begin(), x.end());
  const auto n = static_cast<double>(x.size());
  double total = 0.0;
  double weighted = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto xi = static_cast<double>(x[i]);
    total += xi;
    weighted += (2.0 * static_cast<double>(i + 1) - n - 1.0) * xi;
  }
  if (total == 0.0) return 0.0;
  return weighted / (n * total);
}

}  // namespace

double gini(std::span<const double> values) {
  for (double v : values) {
    if (v < 0.0) throw EstimationError("gini: values must be non-negative");
  }
  return sorted_gini(std::vector<double>(values.begin(), values.end()));
}

double gini(std::span<const std::size_t> values) {
  return sorted_gini(std::vector<std::size_t>(values.begin(), values.end()));
}

const char* to_string(RhoClamp clamp) {
  switch (clamp) {
    case RhoClamp::kNone: return "none";
    case RhoClamp::kBelowRange: return "below-range";
    case RhoClamp::kAboveRange: return "above-range";
    case RhoClamp::kNoOutEdges: return "no-out-edges";
    case RhoClamp::kZeroDenominator: return "zero-denominator";
  }
  return "unknown";
}

std::vector<CommunityId> EstimateResult::clamped_communities() const {
  std::vector<CommunityId> out;
  for (std::size_t i = 0; i < communities.size(); ++i) {
    if (communities[i].clamped()) out.push_back(static_cast<CommunityId>(i + 1));
  }
  return out;
}

double rho_from_gini(double in_total, double out_total, double gini, double size) {
  return in_total * (2.0 * gini + size - 2.0 * gini * size) / (out_total * (gini + 1.0 - gini * size));
}

EstimateResult estimate(const LabeledGraph& graph) {
  if (!graph.has_labels()) throw EstimationError("estimate: graph has no community labels");
  const std::size_t n = graph.node_count();
  const CommunityId k = graph.community_count();
  if (k == 0) throw EstimationError("estimate: graph has no labelled nodes");
  for (CommunityId c : graph.labels()) {
    if (c == kUnlabelled) throw EstimationError("estimate: every node must be labelled (prune first)");
  }

  const DegreeView deg = degrees(graph);
  std::vector<std::vector<std::size_t>> in_by_community(k);
  std::vector<CommunityStats> stats(k);
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t c = graph.label(v) - 1;
    auto& s = stats[c];
    ++s.size;
    const auto out = static_cast<double>(deg.out[v]);
    s.out_total += out;
    s.out_sq_total += out * out;
    s.in_total += static_cast<double>(deg.in[v]);
    in_by_community[c].push_back(deg.in[v]);
  }

  std::string too_small;
  for (std::size_t c = 0; c < k; ++c) {
    if (stats[c].size <= 1) {
      too_small += (too_small.empty() ? "" : ", ") + std::to_string(c + 1) + " (size " +
                   std::to_string(stats[c].size) + ")";
    }
  }
  if (!too_small.empty()) {
    throw EstimationError("estimate: communities need at least two members; offending communities: " +
                          too_small);
  }

  EstimateResult result;
  result.communities.resize(k);
  auto& params = result.params;
  for (std::size_t c = 0; c < k; ++c) {
    CommunityStats& s = stats[c];
    s.gini = gini(std::span<const std::size_t>(in_by_community[c]));
    CommunityFit& fit = result.communities[c];

    const auto size = static_cast<double>(s.size);
    const double m_hat = s.out_total / (size - 1.0);
    double sigma2_hat = (s.out_sq_total - size * m_hat * m_hat) / (size - 1.0);
    if (sigma2_hat < 0.0) {
      sigma2_hat = 0.0;
      fit.sigma2_floored = true;
    }

    double rho = std::numeric_limits<double>::quiet_NaN();
    const double denom = s.gini + 1.0 - s.gini * size;
    if (s.out_total == 0.0) {
      fit.rho_clamp = RhoClamp::kNoOutEdges;
      rho = kRhoEpsilon;
    } else if (denom == 0.0) {
      fit.rho_clamp = RhoClamp::kZeroDenominator;
      rho = 1.0 - kRhoEpsilon;
    } else {
      fit.rho_raw = rho_from_gini(s.in_total, s.out_total, s.gini, size);
      rho = fit.rho_raw;
      if (!(rho >= kRhoEpsilon)) {
        fit.rho_clamp = RhoClamp::kBelowRange;
        rho = kRhoEpsilon;
      } else if (rho > 1.0 - kRhoEpsilon) {
        fit.rho_clamp = RhoClamp::kAboveRange;
        rho = 1.0 - kRhoEpsilon;
      }
    }
    if (fit.rho_clamp == RhoClamp::kNoOutEdges || fit.rho_clamp == RhoClamp::kZeroDenominator) {
      fit.rho_raw = std::numeric_limits<double>::quiet_NaN();
    }
    fit.stats = s;

    params.p.push_back(size / static_cast<double>(n));
    params.m.push_back(m_hat);
    params.sigma2.push_back(sigma2_hat);
    params.rho.push_back(rho);
  }
  return result;
}

RoundtripReport roundtrip_report(const CsParams& params, std::size_t node_count, std::uint64_t seed) {
  const LabeledGraph graph = generate(params, node_count, seed);
  RoundtripReport report;
  report.fit = estimate(graph);
  const CsParams& hat = report.fit.params;
  for (std::size_t i = 0; i < params.k(); ++i) {
    RecoveryError e;
    e.p_abs = std::abs(hat.p[i] - params.p[i]);
    e.m_rel = std::abs(hat.m[i] - params.m[i]) / params.m[i];
    e.rho_abs = std::abs(hat.rho[i] - params.rho[i]);
    e.sigma2_rel = params.sigma2[i] > 0.0 ? std::abs(hat.sigma2[i] - params.sigma2[i]) / params.sigma2[i]
                                          : std::abs(hat.sigma2[i]);
    report.errors.push_back(e);
  }
  return report;
}

}  // namespace citegen
