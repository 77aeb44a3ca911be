#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace citegen::stats {

class StatsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ascending ranks from 1; tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

/// (x - mean) / sd with the population sd; all zeros when sd is 0.
std::vector<double> standardise(std::span<const double> values);

/// Methods ranked within each (dataset, metric) block, 1 = lowest distance.
struct RankTable {
  std::vector<std::string> methods;
  std::vector<std::string> blocks;
  std::vector<std::vector<double>> values;  // [block][method]
  std::vector<std::vector<double>> ranks;   // [block][method]
  std::vector<std::string> warnings;

  std::size_t method_count() const { return methods.size(); }
  std::size_t block_count() const { return blocks.size(); }
  std::vector<double> mean_ranks() const;
};

/// Builds the table from per-block mean distances. A block with a missing
/// (NaN) value is dropped with a warning. Requires at least two methods.
RankTable rank_blocks(std::vector<std::string> methods, std::vector<std::string> blocks,
                      std::vector<std::vector<double>> values);

/// Rows of `table` whose index is listed in `keep`, in that order.
RankTable select_blocks(const RankTable& table, std::span<const std::size_t> keep);

}  // namespace citegen::stats
