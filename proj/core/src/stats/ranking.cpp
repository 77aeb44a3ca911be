#include "citegen/stats/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace citegen::stats {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double mid = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = mid;
    i = j + 1;
  }
  return ranks;
}

std::vector<double> standardise(std::span<const double> values) {
  std::vector<double> z(values.size(), 0.0);
  if (values.empty()) return z;
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / n);
  if (sd == 0.0) return z;
  for (std::size_t i = 0; i < values.size(); ++i) z[i] = (values[i] - mean) / sd;
  return z;
}

std::vector<double> RankTable::mean_ranks() const {
  std::vector<double> mean(methods.size(), 0.0);
  if (ranks.empty()) return mean;
  for (const auto& row : ranks) {
    for (std::size_t j = 0; j < row.size(); ++j) mean[j] += row[j];
  }
  for (double& m : mean) m /= static_cast<double>(ranks.size());
  return mean;
}

RankTable rank_blocks(std::vector<std::string> methods, std::vector<std::string> blocks,
                      std::vector<std::vector<double>> values) {
  if (methods.size() < 2) throw StatsError("ranking needs at least two methods");
  if (blocks.size() != values.size()) throw StatsError("ranking: block names and value rows differ in count");
  RankTable table;
  table.methods = std::move(methods);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto& row = values[b];
    if (row.size() != table.methods.size()) {
      throw StatsError("ranking: block '" + blocks[b] + "' has " + std::to_string(row.size()) + " values for " +
                       std::to_string(table.methods.size()) + " methods");
    }
    if (std::any_of(row.begin(), row.end(), [](double v) { return std::isnan(v); })) {
      table.warnings.push_back("block '" + blocks[b] + "' dropped: missing value");
      continue;
    }
    table.ranks.push_back(average_ranks(row));
    table.values.push_back(std::move(row));
    table.blocks.push_back(std::move(blocks[b]));
  }
  return table;
}

RankTable select_blocks(const RankTable& table, std::span<const std::size_t> keep) {
  RankTable out;
  out.methods = table.methods;
  for (std::size_t b : keep) {
    out.blocks.push_back(table.blocks.at(b));
    out.values.push_back(table.values.at(b));
    out.ranks.push_back(table.ranks.at(b));
  }
  return out;
}

}  // namespace citegen::stats
