#include "discrim/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace discrim {

namespace {

constexpr double kProbSlack = 1e-12;

void check_probability(double p, std::size_t index) {
  if (!std::isfinite(p) || p < -kProbSlack || p > 1.0 + kProbSlack) {
    std::ostringstream os;
    os << "member " << index << " has probability " << p << " outside [0, 1]";
    throw Error(ErrorCode::ProbabilityOutOfRange, os.str());
  }
}

void check_counts(std::size_t probs, std::size_t states) {
  if (probs != states) {
    std::ostringstream os;
    os << probs << " probabilities for " << states << " states";
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

}  // namespace

Ensemble::Ensemble(std::vector<Member> members, std::string label)
    : members_(std::move(members)), label_(std::move(label)) {
  if (members_.empty()) {
    throw Error(ErrorCode::InconsistentInput, "ensemble needs at least one member");
  }
  dim_ = members_.front().state.dim();
  double total = 0.0;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const Member& m = members_[i];
    if (m.state.dim() != dim_) {
      std::ostringstream os;
      os << "member " << i << " has dimension " << m.state.dim() << ", expected " << dim_;
      throw Error(ErrorCode::DimensionMismatch, os.str());
    }
    if (m.vector && m.vector->size() != dim_) {
      throw Error(ErrorCode::DimensionMismatch, "state vector length differs from dimension");
    }
    check_probability(m.prob, i);
    total += m.prob;
  }
  if (std::abs(total - 1.0) > kProbSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "probability sum " << total << " differs from 1";
    throw Error(ErrorCode::NotNormalized, os.str());
  }
}

Ensemble Ensemble::from_vectors(const std::vector<double>& probs,
                                const std::vector<ComplexVector>& vectors, std::string label) {
  check_counts(probs.size(), vectors.size());
  std::vector<Member> members;
  members.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    members.push_back({probs[i], DensityOperator::pure(vectors[i]), vectors[i]});
  }
  return Ensemble(std::move(members), std::move(label));
}

Ensemble Ensemble::from_states(const std::vector<double>& probs,
                               const std::vector<DensityOperator>& states, std::string label) {
  check_counts(probs.size(), states.size());
  std::vector<Member> members;
  members.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    members.push_back({probs[i], states[i], std::nullopt});
  }
  return Ensemble(std::move(members), std::move(label));
}

std::vector<double> Ensemble::probabilities() const {
  std::vector<double> p;
  p.reserve(members_.size());
  for (const auto& m : members_) p.push_back(m.prob);
  return p;
}

bool Ensemble::all_pure() const {
  for (const auto& m : members_) {
    if (!m.vector && eig(m.state.op()).rank() != 1) return false;
  }
  return true;
}

DensityOperator average_state(const Ensemble& e) {
  HermitianOperator rho = HermitianOperator::zero(e.dim());
  for (const auto& m : e.members()) rho += m.state.op() * m.prob;
  return DensityOperator(std::move(rho));
}

Ensemble make_three_state(double theta, ThreeStateVariant variant) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  ComplexVector psi1(3), psi2(3), psi3(3);
  psi1 << s, 0.0, c;
  psi3 << -s, 0.0, c;
  if (variant == ThreeStateVariant::Original) {
    psi2 << 0.0, 1.0, 0.0;
  } else {
    psi2 << std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, 0.0;
  }
  const double third = 1.0 / 3.0;
  return Ensemble::from_vectors(
      {third, third, third}, {psi1, psi2, psi3},
      variant == ThreeStateVariant::Original ? "three_state_original" : "three_state_replaced");
}

Ensemble make_four_state(double theta, double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    std::ostringstream os;
    os << "weight q = " << q << " outside [0, 1]";
    throw Error(ErrorCode::ProbabilityOutOfRange, os.str());
  }
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  ComplexVector psi1(2), psi2(2), psi3(2), psi4(2);
  psi1 << 1.0, 0.0;
  psi2 << s, c;
  psi3 << 0.0, 1.0;
  psi4 << c, -s;
  const double a = q / 2.0;
  const double b = (1.0 - q) / 2.0;
  return Ensemble::from_vectors({a, b, a, b}, {psi1, psi2, psi3, psi4}, "four_state");
}

RealVector ClassicalEnsemble::label_marginal() const { return joint_.rowwise().sum(); }

RealVector ClassicalEnsemble::outcome_marginal() const { return joint_.colwise().sum().transpose(); }

Eigen::MatrixXd ClassicalEnsemble::label_given_outcome() const {
  const RealVector py = outcome_marginal();
  Eigen::MatrixXd cond = Eigen::MatrixXd::Zero(labels(), outcomes());
  for (Eigen::Index y = 0; y < outcomes(); ++y) {
    if (py(y) > 0.0) cond.col(y) = joint_.col(y) / py(y);
  }
  return cond;
}

Ensemble ClassicalEnsemble::to_quantum(std::string label) const {
  const RealVector px = label_marginal();
  std::vector<double> probs;
  std::vector<DensityOperator> states;
  for (Eigen::Index x = 0; x < labels(); ++x) {
    probs.push_back(px(x));
    if (px(x) > 0.0) {
      RealVector row = joint_.row(x).transpose() / px(x);
      // Absorb rounding so the trace check sees exactly one.
      row /= row.sum();
      states.push_back(DensityOperator(HermitianOperator::diagonal(row)));
    } else {
      states.push_back(DensityOperator::maximally_mixed(outcomes()));
    }
  }
  return Ensemble::from_states(probs, states, std::move(label));
}

ClassicalEnsemble make_classical(const Eigen::MatrixXd& joint) {
  if (joint.size() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "joint distribution is empty");
  }
  if (!joint.allFinite() || joint.minCoeff() < 0.0) {
    throw Error(ErrorCode::ProbabilityOutOfRange, "joint distribution has negative entries");
  }
  const double total = joint.sum();
  if (std::abs(total - 1.0) > ClassicalEnsemble::kSumTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "joint distribution sums to " << total;
    throw Error(ErrorCode::NotNormalized, os.str());
  }
  return ClassicalEnsemble(joint / total);
}

ClassicalEnsemble measurement_statistics(const Ensemble& e,
                                         const std::vector<HermitianOperator>& effects) {
  Eigen::MatrixXd joint(static_cast<Eigen::Index>(e.size()),
                        static_cast<Eigen::Index>(effects.size()));
  for (std::size_t x = 0; x < e.size(); ++x) {
    for (std::size_t y = 0; y < effects.size(); ++y) {
      joint(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
          std::max(0.0, e[x].prob * trace_product(effects[y], e[x].state.op()));
    }
  }
  // Effects that sum to identity only up to rounding leave the total near 1.
  const double total = joint.sum();
  if (std::abs(total - 1.0) > 1e-8) {
    std::ostringstream os;
    os << "effects do not form a measurement: outcome probabilities sum to " << total;
    throw Error(ErrorCode::NotNormalized, os.str());
  }
  return make_classical(joint / total);
}

}  // namespace discrim
