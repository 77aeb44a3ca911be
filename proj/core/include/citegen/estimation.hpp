#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "citegen/cs_generator.hpp"
#include "citegen/graph.hpp"

namespace citegen {

class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gini coefficient sum_ij |x_i - x_j| / (2 n^2 mean), computed from the
/// sorted values in O(n log n). Zero when every value is zero. Throws on
/// empty input.
double gini(std::span<const double> values);
double gini(std::span<const std::size_t> values);

struct CommunityStats {
  std::size_t size = 0;        // N_i
  double out_total = 0.0;      // Psi_i, total out-degree
  double in_total = 0.0;       // Sigma_i, total in-degree
  double out_sq_total = 0.0;   // sum of squared out-degrees
  double gini = 0.0;           // in-degree Gini G_i
};

enum class RhoClamp {
  kNone,
  kBelowRange,       // raw estimate < epsilon
  kAboveRange,       // raw estimate > 1 - epsilon
  kNoOutEdges,       // Psi_i = 0, estimate undefined
  kZeroDenominator,  // G_i + 1 - G_i N_i = 0
};

const char* to_string(RhoClamp clamp);

struct CommunityFit {
  CommunityStats stats;
  double rho_raw = 0.0;  // before clamping; NaN when undefined
  RhoClamp rho_clamp = RhoClamp::kNone;
  bool sigma2_floored = false;  // closed-form variance came out negative

  bool clamped() const { return rho_clamp != RhoClamp::kNone; }
};

struct EstimateResult {
  CsParams params;
  std::vector<CommunityFit> communities;

  std::vector<CommunityId> clamped_communities() const;
};

/// Closed-form preferentiality from the in-degree Gini:
///   Sigma (2G + N - 2GN) / (Psi (G + 1 - GN)).
double rho_from_gini(double in_total, double out_total, double gini, double size);

/// Recovers the 4k CS parameters from a labelled graph:
///   p = N_i / N, m = Psi_i / (N_i - 1),
///   sigma2 = (sum d_out^2 - N_i m^2) / (N_i - 1),
///   rho from rho_from_gini, clamped to [1e-3, 1 - 1e-3].
/// Every node must carry a label. Communities with fewer than two members
/// abort the estimation with an error naming them.
EstimateResult estimate(const LabeledGraph& graph);

struct RecoveryError {
  double p_abs = 0.0;
  double m_rel = 0.0;
  double rho_abs = 0.0;
  double sigma2_rel = 0.0;
};

struct RoundtripReport {
  EstimateResult fit;
  std::vector<RecoveryError> errors;  // one per community
};

/// generate(params, node_count, seed) followed by estimate().
RoundtripReport roundtrip_report(const CsParams& params, std::size_t node_count, std::uint64_t seed);

}  // namespace citegen
