#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "citegen/stats/ranking.hpp"

namespace citegen::stats {

struct FriedmanResult {
  double chi2 = 0.0;
  double p_value = 1.0;
  std::size_t blocks = 0;
  std::size_t methods = 0;
};

/// chi2 = 12n / (k(k+1)) * sum_j (Rbar_j - (k+1)/2)^2 with k-1 degrees of
/// freedom. Needs n >= 2 blocks and k >= 3 methods.
FriedmanResult friedman(const RankTable& table);

/// Upper tail of the chi-square distribution.
double chi_square_sf(double x, double df);

struct MannWhitneyResult {
  double u = 0.0;  // sum of ranks of a minus n_a(n_a+1)/2
  double p_value = 1.0;
  bool exact = false;
};

inline constexpr std::size_t kExactMannWhitneyLimit = 20;

/// Two-sided test. Exact permutation distribution (ties included) when both
/// samples have fewer than 20 values; otherwise the normal approximation
/// with tie and continuity corrections.
MannWhitneyResult mann_whitney(std::span<const double> a, std::span<const double> b);

/// Per method pair (i, j): blocks where i's distances are significantly
/// lower (win), higher (loss), or neither (tie). loss[i][j] == win[j][i].
struct WtlMatrix {
  std::vector<std::vector<std::size_t>> wins;
  std::vector<std::vector<std::size_t>> ties;
  std::vector<std::vector<std::size_t>> losses;
};

/// runs[block][method] holds the replicate distances. `blocks` restricts the
/// tally to a subset (all blocks when empty).
WtlMatrix wtl_matrix(const std::vector<std::vector<std::vector<double>>>& runs, double alpha = 0.05,
                     std::span<const std::size_t> blocks = {});

}  // namespace citegen::stats
