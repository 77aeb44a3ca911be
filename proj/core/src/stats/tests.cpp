#include "citegen/stats/tests.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

namespace citegen::stats {

double chi_square_sf(double x, double df) {
  if (!(df > 0.0)) throw StatsError("chi-square: degrees of freedom must be positive");
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(df / 2.0, x / 2.0);
}

FriedmanResult friedman(const RankTable& table) {
  const std::size_t n = table.block_count();
  const std::size_t k = table.method_count();
  if (n < 2) throw StatsError("Friedman test needs at least two blocks, got " + std::to_string(n));
  if (k < 3) throw StatsError("Friedman test needs at least three methods, got " + std::to_string(k));
  const auto mean = table.mean_ranks();
  const double kd = static_cast<double>(k);
  double ss = 0.0;
  for (double r : mean) ss += (r - (kd + 1.0) / 2.0) * (r - (kd + 1.0) / 2.0);
  FriedmanResult result;
  result.blocks = n;
  result.methods = k;
  result.chi2 = 12.0 * static_cast<double>(n) / (kd * (kd + 1.0)) * ss;
  result.p_value = chi_square_sf(result.chi2, kd - 1.0);
  return result;
}

namespace {

// Exact two-sided p-value from the permutation distribution of the doubled
// rank sum, which is an integer even with midranks.
double exact_p(std::span<const double> pooled_ranks, std::size_t na, std::int64_t observed_twice_u) {
  const std::size_t n = pooled_ranks.size();
  std::vector<std::int64_t> r2(n);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    r2[i] = static_cast<std::int64_t>(std::llround(2.0 * pooled_ranks[i]));
    total += r2[i];
  }
  // ways[j][s]: number of j-subsets with doubled rank sum s.
  std::vector<std::vector<double>> ways(na + 1, std::vector<double>(total + 1, 0.0));
  ways[0][0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = std::min(na, i + 1); j >= 1; --j) {
      for (std::int64_t s = total; s >= r2[i]; --s) ways[j][s] += ways[j - 1][s - r2[i]];
    }
  }
  const auto nb = static_cast<std::int64_t>(n - na);
  const auto nai = static_cast<std::int64_t>(na);
  const std::int64_t centre = nai * nb;
  const std::int64_t observed_gap = std::llabs(observed_twice_u - centre);
  double extreme = 0.0, all = 0.0;
  for (std::int64_t s = 0; s <= total; ++s) {
    if (ways[na][s] == 0.0) continue;
    all += ways[na][s];
    const std::int64_t twice_u = s - nai * (nai + 1);
    if (std::llabs(twice_u - centre) >= observed_gap) extreme += ways[na][s];
  }
  return std::min(1.0, extreme / all);
}

}  // namespace

MannWhitneyResult mann_whitney(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw StatsError("Mann-Whitney test needs two non-empty samples");
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto ranks = average_ranks(pooled);
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  double rank_sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) rank_sum += ranks[i];

  MannWhitneyResult result;
  result.u = rank_sum - na * (na + 1.0) / 2.0;
  if (a.size() < kExactMannWhitneyLimit && b.size() < kExactMannWhitneyLimit) {
    result.exact = true;
    result.p_value = exact_p(ranks, a.size(), static_cast<std::int64_t>(std::llround(2.0 * result.u)));
    return result;
  }

  // Tie correction from the group sizes of the pooled sample.
  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  const double n = na + nb;
  const double variance = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (variance <= 0.0) {
    result.p_value = 1.0;
    return result;
  }
  const double gap = std::max(0.0, std::abs(result.u - na * nb / 2.0) - 0.5);
  result.p_value = std::min(1.0, std::erfc(gap / std::sqrt(variance) / std::sqrt(2.0)));
  return result;
}

WtlMatrix wtl_matrix(const std::vector<std::vector<std::vector<double>>>& runs, double alpha,
                     std::span<const std::size_t> blocks) {
  WtlMatrix m;
  if (runs.empty()) return m;
  const std::size_t k = runs.front().size();
  m.wins.assign(k, std::vector<std::size_t>(k, 0));
  m.ties = m.losses = m.wins;
  std::vector<std::size_t> all;
  if (blocks.empty()) {
    all.resize(runs.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    blocks = all;
  }
  for (std::size_t b : blocks) {
    const auto& row = runs.at(b);
    if (row.size() != k) throw StatsError("W/T/L: every block needs one run set per method");
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const auto test = mann_whitney(row[i], row[j]);
        const double centre = static_cast<double>(row[i].size()) * static_cast<double>(row[j].size()) / 2.0;
        if (test.p_value < alpha && test.u < centre) {
          ++m.wins[i][j];
          ++m.losses[j][i];
        } else if (test.p_value < alpha && test.u > centre) {
          ++m.losses[i][j];
          ++m.wins[j][i];
        } else {
          ++m.ties[i][j];
          ++m.ties[j][i];
        }
      }
    }
  }
  return m;
}

}  // namespace citegen::stats
