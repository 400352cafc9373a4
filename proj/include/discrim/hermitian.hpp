#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "discrim/error.hpp"

namespace discrim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tolerance {
// Entrywise |a_ij - conj(a_ji)| admitted by HermitianOperator.
inline constexpr double hermiticity = 1e-10;
// Support cutoff, relative to the largest eigenvalue.
inline constexpr double rank = 1e-10;
// ||A - V diag(w) V^H||_F / max(1, ||A||_F) accepted from the eigensolver.
inline constexpr double eig_residual = 1e-9;
}  // namespace tolerance

/// Largest entrywise deviation from Hermitian symmetry.
double hermiticity_residual(const ComplexMatrix& m);

/// A square complex matrix equal to its conjugate transpose.
///
/// Construction validates finiteness and symmetry, then stores the exact
/// Hermitian part so downstream arithmetic never accumulates the residual.
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& m);

  static HermitianOperator identity(Eigen::Index dim);
  static HermitianOperator zero(Eigen::Index dim);
  static HermitianOperator diagonal(const RealVector& diag);
  /// |v><v| for the given (not necessarily normalized) vector.
  static HermitianOperator outer(const ComplexVector& v);
  /// Symmetrizes without checking; for results of arithmetic known to be Hermitian.
  static HermitianOperator hermitian_part(const ComplexMatrix& m);

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  double trace() const { return m_.trace().real(); }
  double frobenius_norm() const { return m_.norm(); }

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;
  HermitianOperator& operator+=(const HermitianOperator& o);
  /// U A U^H, which stays Hermitian for any square U.
  HermitianOperator conjugated(const ComplexMatrix& u) const;

 private:
  struct Unchecked {};
  HermitianOperator(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

inline HermitianOperator operator*(double s, const HermitianOperator& a) { return a * s; }

struct Spectrum {
  RealVector eigenvalues;     // descending
  ComplexMatrix eigenvectors; // columns, unitary

  Eigen::Index dim() const noexcept { return eigenvalues.size(); }
  double max_eigenvalue() const { return eigenvalues(0); }
  double min_eigenvalue() const { return eigenvalues(eigenvalues.size() - 1); }
  /// Eigenvalues strictly above the relative rank cutoff.
  Eigen::Index rank() const;
};

/// Eigendecomposition with descending eigenvalues. Each eigenvector's first
/// component of non-negligible magnitude is made real and positive.
Spectrum eig(const HermitianOperator& a);

/// V f(diag) V^H. With support_only, eigenvalues at or below the rank cutoff
/// map to 0 and f is never called on them (pseudo-inverse convention).
HermitianOperator matfun(const HermitianOperator& a, const std::function<double(double)>& f,
                         bool support_only);

/// Projector onto the span of eigenvectors above the rank cutoff.
HermitianOperator support_projector(const HermitianOperator& a);

/// Re Tr(ab); throws if the imaginary residue exceeds 1e-9.
double trace_product(const HermitianOperator& a, const HermitianOperator& b);

/// Sum of absolute eigenvalues.
double trace_norm(const HermitianOperator& a);

/// A unit-trace positive semidefinite operator.
class DensityOperator {
 public:
  static constexpr double kTraceTolerance = 1e-10;
  static constexpr double kPsdTolerance = 1e-10;

  explicit DensityOperator(HermitianOperator op);

  static DensityOperator pure(const ComplexVector& unit_vector);
  static DensityOperator maximally_mixed(Eigen::Index dim);

  const HermitianOperator& op() const noexcept { return op_; }
  const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
  Eigen::Index dim() const noexcept { return op_.dim(); }

 private:
  HermitianOperator op_;
};

}  // namespace discrim
