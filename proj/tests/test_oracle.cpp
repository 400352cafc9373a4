#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "discrim/entropy.hpp"
#include "discrim/oracle.hpp"
#include "support/random_ensembles.hpp"

using namespace discrim;
namespace t = discrim::testing;

namespace {

ComplexVector ket(std::initializer_list<Complex> amps) {
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (Complex a : amps) v(i++) = a;
  return v;
}

const double kH = 1.0 / std::sqrt(2.0);

Ensemble orthogonal_pair() { return Ensemble::from_vectors({0.5, 0.5}, {ket({1, 0}), ket({0, 1})}); }
Ensemble identical_pair() { return Ensemble::from_vectors({0.5, 0.5}, {ket({1, 0}), ket({1, 0})}); }

void check_result_invariants(const Ensemble& e, const OracleResult& r) {
  CHECK(r.primal <= r.dual + 1e-9);
  CHECK(r.gap == doctest::Approx(r.dual - r.primal));
  CHECK(r.gap >= -1e-9);
  // The measurement is complete on the whole space and positive.
  ComplexMatrix total = ComplexMatrix::Zero(e.dim(), e.dim());
  for (const auto& m : r.povm.elements) {
    CHECK(eig(m).min_eigenvalue() >= -1e-9);
    total += m.matrix();
  }
  CHECK((total - ComplexMatrix::Identity(e.dim(), e.dim())).norm() <= 1e-8);
  CHECK(success_probability(e, r.povm.elements) == doctest::Approx(r.primal).epsilon(1e-12));
  // Dual feasibility of the certificate.
  for (const auto& m : e.members())
    CHECK(eig(r.certificate - m.state.op() * m.prob).min_eigenvalue() >= -1e-8);
  CHECK(r.certificate.trace() == doctest::Approx(r.dual).epsilon(1e-12));
}

}  // namespace

TEST_CASE("oracle on closed-form cases") {
  SUBCASE("orthogonal pair") {
    const OracleResult r = optimal_success(orthogonal_pair());
    CHECK(r.converged);
    CHECK(r.primal == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.dual == doctest::Approx(1.0).epsilon(1e-9));
    check_result_invariants(orthogonal_pair(), r);
  }
  SUBCASE("four-state family at pi/3") {
    const Ensemble e = make_four_state(std::numbers::pi / 3);
    const OracleResult r = optimal_success(e);
    CHECK(std::abs(r.primal - 0.5) <= 1e-6);
    CHECK(std::abs(r.dual - 0.5) <= 1e-6);
    check_result_invariants(e, r);
  }
  SUBCASE("|0> versus |+>") {
    const Ensemble e = Ensemble::from_vectors({0.5, 0.5}, {ket({1, 0}), ket({kH, kH})});
    const OracleResult r = optimal_success(e);
    CHECK(std::abs(r.midpoint() - helstrom(e)) <= 1e-6);
    CHECK(std::abs(r.midpoint() - 0.5 * (1 + kH)) <= 1e-6);
    check_result_invariants(e, r);
  }
  SUBCASE("degenerate three-state family at theta = 0") {
    // |2>, |1>, |2>: guess psi2 on |1> and either copy on |2>.
    const Ensemble e = make_three_state(0.0, ThreeStateVariant::Original);
    const OracleResult r = optimal_success(e);
    CHECK(r.converged);
    CHECK(r.midpoint() == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
    check_result_invariants(e, r);
  }
}

TEST_CASE("oracle flags an exhausted iteration budget") {
  t::Rng rng(50);
  const Ensemble e = t::random_ensemble(rng, t::Purity::Mixed, 4, 5, 5, 4);
  const OracleResult r = optimal_success(e, {.tol = 1e-15, .max_iter = 3});
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 3);
  check_result_invariants(e, r);
}

TEST_CASE("conditional min-entropy") {
  CHECK(std::abs(min_entropy_cond(orthogonal_pair()).value) <= 1e-8);
  CHECK(min_entropy_cond(identical_pair()).value == doctest::Approx(1.0).epsilon(1e-8));
  const MinEntropy h = min_entropy_cond(make_four_state(0.9));
  CHECK(std::abs(h.value - 1.0) <= 1e-5);
  CHECK(h.half_width >= 0.0);
  CHECK(h.half_width <= 1e-6);
}

TEST_CASE("min-entropy never exceeds the von Neumann conditional entropy") {
  const MonotonicityCheck a = check_monotonicity(orthogonal_pair());
  CHECK(std::abs(a.s_min) <= 1e-8);
  CHECK(std::abs(a.s_cond) <= 1e-12);
  CHECK(a.holds);

  const MonotonicityCheck b = check_monotonicity(identical_pair());
  CHECK(b.s_min == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(b.s_cond == doctest::Approx(1.0));
  CHECK(b.holds);

  CHECK(check_monotonicity(make_three_state(std::numbers::pi / 5, ThreeStateVariant::Original)).holds);
}

TEST_CASE("oracle properties on random ensembles") {
  t::Rng rng(51);
  int tight = 0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    const Ensemble e = t::random_ensemble(rng, t::Purity::Any);
    const OracleResult r = optimal_success(e);
    CHECK(r.primal <= r.dual + 1e-9);
    if (r.gap <= 1e-6) ++tight;
    const auto probs = e.probabilities();
    CHECK(r.primal >= *std::max_element(probs.begin(), probs.end()) - 1e-9);
    CHECK(entropic_bound(e) <= r.dual + 1e-6);
    CHECK(srm_bound(e) <= r.dual + 1e-6);
    if (e.all_pure()) CHECK(pairwise_bound(e) <= r.dual + 1e-6);
  }
  CHECK(tight >= trials * 95 / 100);
}

TEST_CASE("two-member optimum matches the closed form") {
  t::Rng rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const Ensemble e = t::random_ensemble(rng, t::Purity::Any, 4, 2, 2);
    const OracleResult r = optimal_success(e);
    const double h = helstrom(e);
    CHECK(std::abs(r.midpoint() - h) <= 1e-6);
    CHECK(h >= r.primal - 1e-6);
    CHECK(h <= r.dual + 1e-6);
  }
}
