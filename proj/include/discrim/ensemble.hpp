#pragma once

#include <optional>
#include <string>
#include <vector>

#include "discrim/hermitian.hpp"

namespace discrim {

/// One labelled preparation: the state is prepared with probability `prob`.
struct Member {
  double prob;
  DensityOperator state;
  // Kept for pure members so overlaps can be taken exactly.
  std::optional<ComplexVector> vector;
};

/// A finite ensemble {p_x, rho_x} of states on a common Hilbert space.
///
/// The classical-quantum state sum_x p_x |x><x| (x) rho_x is never built;
/// every quantity derived from it works member by member.
class Ensemble {
 public:
  static constexpr double kProbSumTolerance = 1e-10;

  Ensemble(std::vector<Member> members, std::string label = {});

  /// Pure-state ensemble. Vectors must already be unit norm.
  static Ensemble from_vectors(const std::vector<double>& probs,
                               const std::vector<ComplexVector>& vectors, std::string label = {});
  static Ensemble from_states(const std::vector<double>& probs,
                              const std::vector<DensityOperator>& states, std::string label = {});

  Eigen::Index dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Member>& members() const noexcept { return members_; }
  const Member& operator[](std::size_t i) const { return members_[i]; }
  const std::string& label() const noexcept { return label_; }

  std::vector<double> probabilities() const;
  /// True when every member has rank one.
  bool all_pure() const;

 private:
  std::vector<Member> members_;
  std::string label_;
  Eigen::Index dim_ = 0;
};

/// rho = sum_x p_x rho_x.
DensityOperator average_state(const Ensemble& e);

enum class ThreeStateVariant { Original, ReplacedPsi2 };

/// Three equiprobable qutrit states
///   psi1 = sin(t)|0> + cos(t)|2>,  psi2 = |1>,  psi3 = -sin(t)|0> + cos(t)|2>.
/// ReplacedPsi2 uses psi2 = (|0> + |1>)/sqrt(2). One published caption writes
/// the denominator as 2, which is not a unit vector; the normalized form is used.
Ensemble make_three_state(double theta, ThreeStateVariant variant);

/// Four qubit states |0>, sin(t)|0>+cos(t)|1>, |1>, cos(t)|0>-sin(t)|1>
/// with p1 = p3 = q/2 and p2 = p4 = (1-q)/2. Their average is always 1/2.
Ensemble make_four_state(double theta, double q = 0.5);

/// Joint distribution p(x, y) of a label x and a classical observation y.
class ClassicalEnsemble {
 public:
  static constexpr double kSumTolerance = 1e-10;

  Eigen::Index labels() const noexcept { return joint_.rows(); }
  Eigen::Index outcomes() const noexcept { return joint_.cols(); }
  const Eigen::MatrixXd& joint() const noexcept { return joint_; }

  RealVector label_marginal() const;    // p(x)
  RealVector outcome_marginal() const;  // p(y)
  /// p(x|y); columns with p(y) = 0 are left at 0.
  Eigen::MatrixXd label_given_outcome() const;

  /// Diagonal embedding rho_x = sum_y p(y|x)|y><y|. Rows with p(x) = 0 get
  /// the maximally mixed state, which carries no weight.
  Ensemble to_quantum(std::string label = {}) const;

 private:
  friend ClassicalEnsemble make_classical(const Eigen::MatrixXd& joint);
  explicit ClassicalEnsemble(Eigen::MatrixXd joint) : joint_(std::move(joint)) {}

  Eigen::MatrixXd joint_;
};

ClassicalEnsemble make_classical(const Eigen::MatrixXd& joint);

/// Outcome statistics p(x, y) = p_x Tr(E_y rho_x) of measuring the ensemble
/// with the effects {E_y}.
ClassicalEnsemble measurement_statistics(const Ensemble& e,
                                         const std::vector<HermitianOperator>& effects);

}  // namespace discrim
