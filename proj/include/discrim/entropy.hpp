#pragma once

#include <span>
#include <vector>

#include "discrim/ensemble.hpp"

namespace discrim {

// All entropies are in bits.

/// Entropies of an ensemble, all obtained member-wise.
///
/// The joint entropy of the labelled state uses the classical-quantum identity
/// S(XQ) = H(p) + sum_x p_x S(rho_x). Note that the Holevo quantity
/// S(rho) - sum_x p_x S(rho_x) is I(X:Q), not S(XQ); cond is H(p) - holevo.
struct EntropyProfile {
  double h_x;                     // H(p)
  double s_avg;                   // S(sum_x p_x rho_x)
  std::vector<double> s_members;  // S(rho_x)
  double holevo;                  // I(X:Q)
  double cond;                    // S(X|Q)
};

double shannon(std::span<const double> p);

/// Shannon entropy of the spectrum. Eigenvalues in [-1e-10, 0) count as 0.
double von_neumann(const DensityOperator& rho);

EntropyProfile profile(const Ensemble& e);

/// 2^{-S(X|Q)}.
double entropic_bound(const Ensemble& e);

/// 2^{S(rho)} / N, valid when rho is a mixture of N pure states. Throws
/// InconsistentInput when S(rho) > log2 N since no such mixture exists.
double pure_state_bound(const DensityOperator& rho, std::size_t n_states);

/// H(X|Y) = -sum_{x,y} p(x,y) log2 p(x|y).
double conditional_shannon(const ClassicalEnsemble& c);
/// H(X:Y) = H(X) - H(X|Y).
double mutual_information(const ClassicalEnsemble& c);

/// 2^{-H(X|Y)}.
double classical_bound(const ClassicalEnsemble& c);
/// sum_y p(y) max_x p(x|y), the exact optimum for guessing x from y.
double classical_optimum(const ClassicalEnsemble& c);

}  // namespace discrim
