#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "citegen/stats/ranking.hpp"

namespace citegen::stats {

struct RankInterval {
  double mean_rank = 0.0;  // point estimate over all blocks
  double low = 0.0;        // 2.5th percentile of the resampled mean rank
  double high = 0.0;       // 97.5th percentile
};

/// Percentile bootstrap over blocks: each draw resamples the table's blocks
/// with replacement and recomputes the mean ranks. Draw d uses its own
/// derived seed, so the result does not depend on `threads`.
std::vector<RankInterval> bootstrap_ci(const RankTable& table, std::size_t draws, std::uint64_t seed,
                                       std::size_t threads = 1);

/// Linear-interpolation percentile (q in [0, 1]) of an unsorted sample.
double percentile(std::vector<double> values, double q);

}  // namespace citegen::stats
