#pragma once

#include <span>
#include <stdexcept>

namespace citegen::metrics {

/// Raised when a statistic or distance is undefined for the given input.
/// The battery records it as a skipped entry.
class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |x_synth - x_real| / |x_real|; throws MetricError when x_real == 0.
double ape(double x_synth, double x_real);

/// Wasserstein-1 distance between two empirical distributions, i.e. the
/// integral of |F_a - F_b|. Inputs need not be sorted or of equal size.
double wasserstein1(std::span<const double> a, std::span<const double> b);

/// Sum of absolute differences; both vectors must have the same length.
double l1(std::span<const double> a, std::span<const double> b);

}  // namespace citegen::metrics
