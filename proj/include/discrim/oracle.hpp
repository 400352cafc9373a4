#pragma once

#include <cstddef>

#include "discrim/bounds.hpp"

namespace discrim {

struct OracleOptions {
  double tol = 1e-8;
  std::size_t max_iter = 10000;
};

/// Certified bracket [primal, dual] around the optimal success probability.
///
/// primal is attained by `povm`, a complete measurement on the full space.
/// dual is Tr(certificate), where certificate - p_x rho_x is PSD for every
/// member, so weak duality bounds every measurement by it.
struct OracleResult {
  double primal = 0.0;
  double dual = 0.0;
  double gap = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  Povm povm;
  HermitianOperator certificate;

  double midpoint() const { return 0.5 * (primal + dual); }
};

/// Maximizes sum_x p_x Tr(M_x rho_x) over measurements.
///
/// The primal runs the fixed-point map
///   M_x <- L^+ G_x M_x G_x L^+,  L = (sum_y G_y M_y G_y)^{1/2},  G_x = p_x rho_x,
/// from M_x = 1/N, restoring completeness and positivity after every step.
/// Each iterate yields the dual candidate Herm(sum_x G_x M_x) shifted up by
/// the largest violation of Y >= G_x. Stops once dual - primal <= tol;
/// otherwise returns the best bracket found with converged = false.
OracleResult optimal_success(const Ensemble& e, const OracleOptions& options = {});

struct MinEntropy {
  double value;       // -log2 of the bracket midpoint
  double half_width;  // log2(dual / primal) / 2
};

/// S_min(X|Q) = -log2 P*, the operational form for labelled ensembles.
MinEntropy min_entropy_cond(const Ensemble& e, const OracleOptions& options = {});

struct MonotonicityCheck {
  double s_min;
  double s_cond;
  bool holds;  // s_min <= s_cond + 1e-6
};

/// Compares the conditional min-entropy with the conditional von Neumann entropy.
MonotonicityCheck check_monotonicity(const Ensemble& e, const OracleOptions& options = {});

}  // namespace discrim
