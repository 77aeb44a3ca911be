#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "citegen/cs_generator.hpp"

namespace citegen {

/// Expected in-degree of the node with local rank `ell` (1 = oldest) in a
/// community of local size `t`:
///   (<a>/nu) * [Gamma(ell-nu) Gamma(t) / (Gamma(ell) Gamma(t-nu)) - 1],
/// evaluated through log-gamma. Requires 1 <= ell <= t and 0 < nu < 1.
double expected_indegree(double ell, double t, double nu, double mean_accidental);

/// Lomax tail (1 + x/lambda)^(-alpha), alpha = 1/nu, lambda = <a>/nu.
double pareto2_ccdf(double x, double nu, double mean_accidental);

struct CcdfRow {
  std::size_t degree = 0;
  double empirical = 0.0;    // fraction of nodes with in-degree >= degree
  double theoretical = 0.0;  // size-weighted mixture of per-community Lomax tails
};

struct TheoryComparison {
  double rho = 0.0;
  DerivedParams derived;
  std::vector<CcdfRow> rows;  // degree 0 .. max observed in-degree + 1
  double ks = 0.0;            // sup over integer degrees >= 1
  double ks_bulk = 0.0;       // same, restricted to degrees below the 99th percentile
  double percentile99 = 0.0;
  double generation_seconds = 0.0;
};

/// Compares the in-degree distribution of `graph` (generated from `params`)
/// with the asymptotic per-community Lomax law. The empirical tail at an
/// integer degree d is P(D >= d); the theoretical one is evaluated at d.
TheoryComparison compare_indegree_to_theory(const LabeledGraph& graph, const CsParams& params);

/// Generates a graph with `k` equal communities sharing (m, rho, sigma2)
/// and compares it with theory.
TheoryComparison validate_theory(double rho, std::size_t node_count, std::size_t k, double m, double sigma2,
                                 std::uint64_t seed);

}  // namespace citegen
