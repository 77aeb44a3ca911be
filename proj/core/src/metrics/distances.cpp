#include "citegen/metrics/distances.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace citegen::metrics {

double ape(double x_synth, double x_real) {
  if (x_real == 0.0) throw MetricError("APE undefined: real value is 0");
  return std::abs(x_synth - x_real) / std::abs(x_real);
}

double wasserstein1(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw MetricError("Wasserstein distance needs two non-empty samples");
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa.size() == sb.size()) {
    double total = 0.0;
    for (std::size_t i = 0; i < sa.size(); ++i) total += std::abs(sa[i] - sb[i]);
    return total / static_cast<double>(sa.size());
  }

  // Sweep the merged support; both CDFs are constant between breakpoints.
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  std::size_t i = 0, j = 0;
  double x = std::min(sa.front(), sb.front());
  double total = 0.0;
  while (i < sa.size() || j < sb.size()) {
    while (i < sa.size() && sa[i] <= x) ++i;
    while (j < sb.size() && sb[j] <= x) ++j;
    if (i == sa.size() && j == sb.size()) break;
    const double next = std::min(i < sa.size() ? sa[i] : sb[j], j < sb.size() ? sb[j] : sa[i]);
    total += std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb) * (next - x);
    x = next;
  }
  return total;
}

double l1(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw MetricError("L1 distance needs vectors of equal length");
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a[i] - b[i]);
  return total;
}

}  // namespace citegen::metrics
