#include "discrim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include "discrim/entropy.hpp"

namespace discrim {

namespace {

constexpr double kMonotonicitySlack = 1e-6;

HermitianOperator clip_negative(const HermitianOperator& a) {
  return matfun(a, [](double w) { return std::max(w, 0.0); }, false);
}

// Brings a nearly complete PSD family to exact completeness and positivity:
// hand the deficit to every element equally, clip, then rescale by T^{-1/2}
// with T the resulting sum.
std::vector<HermitianOperator> repair(std::vector<HermitianOperator> m, Eigen::Index dim) {
  const auto n = static_cast<double>(m.size());
  HermitianOperator total = HermitianOperator::zero(dim);
  for (const auto& mx : m) total += mx;
  const HermitianOperator share = (HermitianOperator::identity(dim) - total) * (1.0 / n);
  total = HermitianOperator::zero(dim);
  for (auto& mx : m) {
    mx = clip_negative(mx + share);
    total += mx;
  }
  const HermitianOperator scale =
      matfun(total, [](double w) { return 1.0 / std::sqrt(w); }, true);
  for (auto& mx : m) mx = mx.conjugated(scale.matrix());
  return m;
}

struct DualCandidate {
  double value;
  HermitianOperator certificate;
};

DualCandidate dual_from(const std::vector<HermitianOperator>& g,
                        const std::vector<HermitianOperator>& m) {
  const Eigen::Index dim = g.front().dim();
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (std::size_t x = 0; x < g.size(); ++x) sum += g[x].matrix() * m[x].matrix();
  const HermitianOperator y_hat = HermitianOperator::hermitian_part(sum);
  double violation = -std::numeric_limits<double>::infinity();
  for (const auto& gx : g) violation = std::max(violation, eig(gx - y_hat).max_eigenvalue());
  HermitianOperator y = y_hat + HermitianOperator::identity(dim) * std::max(violation, 0.0);
  const double value = y.trace();
  return {value, std::move(y)};
}

double primal_value(const std::vector<HermitianOperator>& g,
                    const std::vector<HermitianOperator>& m) {
  double p = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) p += trace_product(g[x], m[x]);
  return p;
}

}  // namespace

OracleResult optimal_success(const Ensemble& e, const OracleOptions& options) {
  const Eigen::Index dim = e.dim();
  const std::size_t n = e.size();

  std::vector<HermitianOperator> g;
  g.reserve(n);
  for (const auto& mem : e.members()) g.push_back(mem.state.op() * mem.prob);

  std::vector<HermitianOperator> m(
      n, HermitianOperator::identity(dim) * (1.0 / static_cast<double>(n)));

  OracleResult best{
      .primal = -std::numeric_limits<double>::infinity(),
      .dual = std::numeric_limits<double>::infinity(),
      .povm = Povm{m, HermitianOperator::identity(dim)},
      .certificate = HermitianOperator::identity(dim),
  };

  auto absorb = [&](const std::vector<HermitianOperator>& iterate) {
    const double p = primal_value(g, iterate);
    if (p > best.primal) {
      best.primal = p;
      best.povm.elements = iterate;
    }
    DualCandidate d = dual_from(g, iterate);
    if (d.value < best.dual) {
      best.dual = d.value;
      best.certificate = std::move(d.certificate);
    }
    best.gap = best.dual - best.primal;
    return best.gap <= options.tol;
  };

  // Always naming the likeliest label is feasible and pins primal >= max_x p_x,
  // which the fixed-point map only approaches geometrically.
  const auto likeliest = static_cast<std::size_t>(std::distance(
      e.members().begin(),
      std::max_element(e.members().begin(), e.members().end(),
                       [](const Member& a, const Member& b) { return a.prob < b.prob; })));
  std::vector<HermitianOperator> guess(n, HermitianOperator::zero(dim));
  guess[likeliest] = HermitianOperator::identity(dim);
  const bool guess_optimal = absorb(guess);
  if (absorb(m) || guess_optimal) {
    best.converged = true;
    return best;
  }

  for (std::size_t it = 1; it <= options.max_iter; ++it) {
    HermitianOperator spread = HermitianOperator::zero(dim);
    std::vector<HermitianOperator> gmg;
    gmg.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
      gmg.push_back(m[x].conjugated(g[x].matrix()));
      spread += gmg.back();
    }
    const HermitianOperator inv_root =
        matfun(spread, [](double w) { return 1.0 / std::sqrt(w); }, true);
    for (std::size_t x = 0; x < n; ++x) m[x] = gmg[x].conjugated(inv_root.matrix());
    m = repair(std::move(m), dim);

    best.iterations = it;
    if (absorb(m)) {
      best.converged = true;
      break;
    }
  }
  return best;
}

MinEntropy min_entropy_cond(const Ensemble& e, const OracleOptions& options) {
  const OracleResult r = optimal_success(e, options);
  return {-std::log2(r.midpoint()), 0.5 * std::log2(r.dual / r.primal)};
}

MonotonicityCheck check_monotonicity(const Ensemble& e, const OracleOptions& options) {
  const double s_min = min_entropy_cond(e, options).value;
  const double s_cond = profile(e).cond;
  return {s_min, s_cond, s_min <= s_cond + kMonotonicitySlack};
}

}  // namespace discrim
