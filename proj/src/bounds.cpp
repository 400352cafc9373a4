#include "discrim/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace discrim {

std::vector<HermitianOperator> Povm::completed_elements() const {
  std::vector<HermitianOperator> out = elements;
  if (!out.empty()) {
    out.front() += HermitianOperator::identity(support.dim()) - support;
  }
  return out;
}

double Povm::completeness_residual() const {
  HermitianOperator total = HermitianOperator::zero(support.dim());
  for (const auto& m : elements) total += m;
  return (total - support).frobenius_norm();
}

double Povm::min_eigenvalue() const {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& m : elements) lo = std::min(lo, eig(m).min_eigenvalue());
  return lo;
}

double success_probability(const Ensemble& e, const std::vector<HermitianOperator>& elements) {
  if (elements.size() != e.size()) {
    std::ostringstream os;
    os << elements.size() << " measurement elements for " << e.size() << " members";
    throw Error(ErrorCode::WrongMemberCount, os.str());
  }
  double p = 0.0;
  for (std::size_t x = 0; x < e.size(); ++x) {
    p += e[x].prob * trace_product(elements[x], e[x].state.op());
  }
  return p;
}

Povm srm_povm(const Ensemble& e) {
  const DensityOperator rho = average_state(e);
  const HermitianOperator inv_sqrt =
      matfun(rho.op(), [](double w) { return 1.0 / std::sqrt(w); }, true);
  Povm povm{{}, support_projector(rho.op())};
  povm.elements.reserve(e.size());
  for (const auto& m : e.members()) {
    povm.elements.push_back(m.state.op().conjugated(inv_sqrt.matrix()) * m.prob);
  }
  const double residual = povm.completeness_residual();
  if (residual > kPovmCompletenessTolerance) {
    std::ostringstream os;
    os << "square-root measurement misses the support by " << residual;
    throw Error(ErrorCode::ConvergenceFailure, os.str());
  }
  return povm;
}

double srm_bound(const Ensemble& e) {
  const Povm povm = srm_povm(e);
  return success_probability(e, povm.elements);
}

double pairwise_bound(const Ensemble& e) {
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!e[i].vector && eig(e[i].state.op()).rank() != 1) {
      std::ostringstream os;
      os << "member " << i << " is not a pure state";
      throw Error(ErrorCode::MixedStateMember, os.str());
    }
  }
  auto overlap2 = [&e](std::size_t i, std::size_t j) {
    if (i == j) return 1.0;
    if (e[i].vector && e[j].vector) return std::norm(e[i].vector->dot(*e[j].vector));
    return trace_product(e[i].state.op(), e[j].state.op());
  };
  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pi = e[i].prob;
    if (pi <= 0.0) continue;
    double denom = 0.0;
    for (std::size_t j = 0; j < n; ++j) denom += e[j].prob * overlap2(i, j);
    bound += pi * pi / denom;
  }
  return bound;
}

double helstrom(const Ensemble& e) {
  if (e.size() != 2) {
    std::ostringstream os;
    os << "closed form needs exactly 2 members, got " << e.size();
    throw Error(ErrorCode::WrongMemberCount, os.str());
  }
  const HermitianOperator diff = e[0].state.op() * e[0].prob - e[1].state.op() * e[1].prob;
  return 0.5 * (1.0 + trace_norm(diff));
}

}  // namespace discrim
