#include "citegen/stats/bootstrap.hpp"

#include <algorithm>
#include <cmath>

#include "citegen/parallel.hpp"
#include "citegen/random.hpp"

namespace citegen::stats {

double percentile(std::vector<double> values, double q) {
  if (values.empty()) throw StatsError("percentile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

std::vector<RankInterval> bootstrap_ci(const RankTable& table, std::size_t draws, std::uint64_t seed,
                                       std::size_t threads) {
  const std::size_t n = table.block_count();
  const std::size_t k = table.method_count();
  if (n == 0) throw StatsError("bootstrap needs at least one block");
  if (draws == 0) throw StatsError("bootstrap needs at least one draw");

  std::vector<std::vector<double>> resampled(k, std::vector<double>(draws, 0.0));
  parallel_for(
      draws,
      [&](std::size_t d) {
        Rng rng = make_rng(seed, "bootstrap", d);
        std::vector<double> sum(k, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
          const auto& row = table.ranks[uniform_index(rng, n)];
          for (std::size_t j = 0; j < k; ++j) sum[j] += row[j];
        }
        for (std::size_t j = 0; j < k; ++j) resampled[j][d] = sum[j] / static_cast<double>(n);
      },
      threads);

  const auto point = table.mean_ranks();
  std::vector<RankInterval> out(k);
  for (std::size_t j = 0; j < k; ++j) {
    out[j].mean_rank = point[j];
    out[j].low = percentile(resampled[j], 0.025);
    out[j].high = percentile(resampled[j], 0.975);
  }
  return out;
}

}  // namespace citegen::stats
