#include "citegen/cs_theory.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

namespace citegen {

double expected_indegree(double ell, double t, double nu, double mean_accidental) {
  if (!(nu > 0.0 && nu < 1.0)) throw ParamError("expected_indegree: nu must lie in (0, 1)");
  if (ell <= nu) throw ParamError("expected_indegree: ell <= nu hits a pole of Gamma(ell - nu)");
  if (ell < 1.0 || ell > t) throw ParamError("expected_indegree: requires 1 <= ell <= t");
  const double log_ratio = std::lgamma(ell - nu) + std::lgamma(t) - std::lgamma(ell) - std::lgamma(t - nu);
  return mean_accidental / nu * std::expm1(log_ratio);
}

double pareto2_ccdf(double x, double nu, double mean_accidental) {
  if (x <= 0.0) return 1.0;
  if (!(nu > 0.0)) return 0.0;
  const double scale = mean_accidental / nu;
  if (!(scale > 0.0)) return 0.0;
  return std::pow(1.0 + x / scale, -1.0 / nu);
}

TheoryComparison compare_indegree_to_theory(const LabeledGraph& graph, const CsParams& params) {
  TheoryComparison result;
  result.rho = params.rho.empty() ? 0.0 : params.rho.front();
  result.derived = derive(params);

  const DegreeView deg = degrees(graph);
  const std::size_t n = graph.node_count();
  if (n == 0) return result;

  std::vector<double> community_share(params.k(), 0.0);
  for (CommunityId c : graph.labels()) community_share[c - 1] += 1.0 / static_cast<double>(n);

  const std::size_t max_degree = *std::max_element(deg.in.begin(), deg.in.end());
  std::vector<std::size_t> at_least(max_degree + 2, 0);
  for (std::size_t d : deg.in) ++at_least[d];
  for (std::size_t d = max_degree + 1; d-- > 0;) at_least[d] += at_least[d + 1];

  std::vector<std::size_t> sorted = deg.in;
  std::sort(sorted.begin(), sorted.end());
  const double pos = 0.99 * static_cast<double>(n - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, n - 1);
  result.percentile99 = static_cast<double>(sorted[lo]) +
                        (pos - static_cast<double>(lo)) * static_cast<double>(sorted[hi] - sorted[lo]);

  result.rows.reserve(max_degree + 2);
  for (std::size_t d = 0; d <= max_degree + 1; ++d) {
    CcdfRow row;
    row.degree = d;
    row.empirical = static_cast<double>(at_least[d]) / static_cast<double>(n);
    for (std::size_t i = 0; i < params.k(); ++i) {
      row.theoretical +=
          community_share[i] * pareto2_ccdf(static_cast<double>(d), result.derived.nu[i], result.derived.mean_accidental);
    }
    if (d >= 1) {
      const double gap = std::abs(row.empirical - row.theoretical);
      result.ks = std::max(result.ks, gap);
      if (static_cast<double>(d) < result.percentile99) result.ks_bulk = std::max(result.ks_bulk, gap);
    }
    result.rows.push_back(row);
  }
  return result;
}

TheoryComparison validate_theory(double rho, std::size_t node_count, std::size_t k, double m, double sigma2,
                                 std::uint64_t seed) {
  const CsParams params = CsParams::uniform(k, m, rho, sigma2);
  const auto start = std::chrono::steady_clock::now();
  const LabeledGraph graph = generate(params, node_count, seed);
  const auto stop = std::chrono::steady_clock::now();
  TheoryComparison result = compare_indegree_to_theory(graph, params);
  result.generation_seconds = std::chrono::duration<double>(stop - start).count();
  return result;
}

}  // namespace citegen
