#include "discrim/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace discrim {

namespace {

constexpr double kClipWindow = 1e-10;
constexpr double kLogSlack = 1e-9;

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

double shannon(std::span<const double> p) {
  double total = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      std::ostringstream os;
      os << "probability " << v << " is negative or not finite";
      throw Error(ErrorCode::ProbabilityOutOfRange, os.str());
    }
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    std::ostringstream os;
    os.precision(17);
    os << "probabilities sum to " << total;
    throw Error(ErrorCode::NotNormalized, os.str());
  }
  double h = 0.0;
  for (double v : p) h -= plogp(v);
  return h;
}

double von_neumann(const DensityOperator& rho) {
  const Spectrum s = eig(rho.op());
  std::vector<double> w(s.eigenvalues.begin(), s.eigenvalues.end());
  double total = 0.0;
  for (double& v : w) {
    if (v < -kClipWindow) {
      std::ostringstream os;
      os << "eigenvalue " << v << " below clipping window";
      throw Error(ErrorCode::InvalidState, os.str());
    }
    if (v < 0.0) v = 0.0;
    total += v;
  }
  // Rounding can move the spectrum sum off 1 by O(1e-16); renormalize so the
  // Shannon validation judges the state, not the eigensolver.
  for (double& v : w) v /= total;
  return shannon(w);
}

EntropyProfile profile(const Ensemble& e) {
  EntropyProfile p;
  const std::vector<double> probs = e.probabilities();
  p.h_x = shannon(probs);
  p.s_avg = von_neumann(average_state(e));
  p.s_members.reserve(e.size());
  double mean_member = 0.0;
  for (const auto& m : e.members()) {
    // Stored vectors mean rank one exactly.
    const double s = m.vector ? 0.0 : von_neumann(m.state);
    p.s_members.push_back(s);
    mean_member += m.prob * s;
  }
  p.holevo = p.s_avg - mean_member;
  p.cond = p.h_x - p.holevo;
  return p;
}

double entropic_bound(const Ensemble& e) {
  // S(X|Q) >= 0 for classical-quantum states; only rounding can push it below.
  return std::exp2(-std::max(0.0, profile(e).cond));
}

double pure_state_bound(const DensityOperator& rho, std::size_t n_states) {
  if (n_states == 0) {
    throw Error(ErrorCode::InconsistentInput, "number of states must be positive");
  }
  const double s = von_neumann(rho);
  const double log_n = std::log2(static_cast<double>(n_states));
  if (s > log_n + kLogSlack) {
    std::ostringstream os;
    os << "entropy " << s << " exceeds log2(" << n_states << ") = " << log_n
       << "; no mixture of that many pure states has this density operator";
    throw Error(ErrorCode::InconsistentInput, os.str());
  }
  return std::min(1.0, std::exp2(s) / static_cast<double>(n_states));
}

double conditional_shannon(const ClassicalEnsemble& c) {
  const Eigen::MatrixXd cond = c.label_given_outcome();
  double h = 0.0;
  for (Eigen::Index x = 0; x < c.labels(); ++x) {
    for (Eigen::Index y = 0; y < c.outcomes(); ++y) {
      const double pxy = c.joint()(x, y);
      if (pxy > 0.0) h -= pxy * std::log2(cond(x, y));
    }
  }
  return h;
}

double mutual_information(const ClassicalEnsemble& c) {
  const RealVector px = c.label_marginal();
  std::vector<double> p(px.begin(), px.end());
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v /= sum;
  return shannon(p) - conditional_shannon(c);
}

double classical_bound(const ClassicalEnsemble& c) { return std::exp2(-conditional_shannon(c)); }

double classical_optimum(const ClassicalEnsemble& c) {
  // p(y) max_x p(x|y) = max_x p(x,y).
  return c.joint().colwise().maxCoeff().sum();
}

}  // namespace discrim
