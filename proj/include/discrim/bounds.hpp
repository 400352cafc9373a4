#pragma once

#include <optional>
#include <vector>

#include "discrim/ensemble.hpp"

namespace discrim {

/// Measurement operators, one per ensemble member, summing to `support`.
///
/// For a rank-deficient average state the square-root measurement only
/// resolves the identity on the support; completed_elements() hands the
/// off-support remainder to the first element so the result is a measurement
/// on the whole space. States inside the support never see that remainder.
struct Povm {
  std::vector<HermitianOperator> elements;
  HermitianOperator support;

  std::size_t size() const noexcept { return elements.size(); }
  std::vector<HermitianOperator> completed_elements() const;
  /// ||sum_x M_x - support||_F.
  double completeness_residual() const;
  /// Smallest eigenvalue over all elements.
  double min_eigenvalue() const;
};

inline constexpr double kPovmCompletenessTolerance = 1e-8;
inline constexpr double kPovmPsdTolerance = 1e-9;

/// sum_x p_x Tr(M_x rho_x).
double success_probability(const Ensemble& e, const std::vector<HermitianOperator>& elements);

/// pi_x = p_x rho^{-1/2} rho_x rho^{-1/2}, with the inverse square root taken
/// on the support of rho. Completeness on the support is checked before return.
Povm srm_povm(const Ensemble& e);

double srm_bound(const Ensemble& e);

/// sum_i p_i^2 / sum_j p_j |<psi_i|psi_j>|^2 for pure members only.
double pairwise_bound(const Ensemble& e);

/// (1 + ||p1 rho1 - p2 rho2||_1) / 2, exact for two members.
double helstrom(const Ensemble& e);

}  // namespace discrim
