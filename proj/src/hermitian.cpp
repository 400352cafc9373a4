#include "discrim/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace discrim {

namespace {

// Eigenvector components smaller than this are treated as zero when fixing phases.
constexpr double kPhaseComponentFloor = 1e-10;

void require_square(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << "expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

void require_same_dim(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << "operator dimensions differ: " << a.dim() << " vs " << b.dim();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

double support_cutoff(const RealVector& descending) {
  return tolerance::rank * std::max(descending(0), 0.0);
}

bool in_support(double lambda, double cutoff) { return lambda > cutoff && lambda > 0.0; }

}  // namespace

double hermiticity_residual(const ComplexMatrix& m) {
  require_square(m);
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m) {
  require_square(m);
  if (!m.allFinite()) {
    throw Error(ErrorCode::NonFiniteInput, "operator has NaN or infinite entries");
  }
  const double residual = hermiticity_residual(m);
  if (residual > tolerance::hermiticity) {
    std::ostringstream os;
    os << "entrywise asymmetry " << residual << " exceeds " << tolerance::hermiticity;
    throw Error(ErrorCode::NonHermitianInput, os.str());
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim) {
  return {ComplexMatrix::Identity(dim, dim), Unchecked{}};
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
  return {ComplexMatrix::Zero(dim, dim), Unchecked{}};
}

HermitianOperator HermitianOperator::diagonal(const RealVector& diag) {
  return HermitianOperator(ComplexMatrix(diag.cast<Complex>().asDiagonal()));
}

HermitianOperator HermitianOperator::outer(const ComplexVector& v) {
  if (!v.allFinite()) {
    throw Error(ErrorCode::NonFiniteInput, "vector has NaN or infinite entries");
  }
  return hermitian_part(v * v.adjoint());
}

HermitianOperator HermitianOperator::hermitian_part(const ComplexMatrix& m) {
  require_square(m);
  return {0.5 * (m + m.adjoint()), Unchecked{}};
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  require_same_dim(*this, o);
  return {m_ + o.m_, Unchecked{}};
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  require_same_dim(*this, o);
  return {m_ - o.m_, Unchecked{}};
}

HermitianOperator HermitianOperator::operator*(double s) const { return {m_ * s, Unchecked{}}; }

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& o) {
  require_same_dim(*this, o);
  m_ += o.m_;
  return *this;
}

HermitianOperator HermitianOperator::conjugated(const ComplexMatrix& u) const {
  if (u.cols() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "conjugating matrix has wrong column count");
  }
  return hermitian_part(u * m_ * u.adjoint());
}

Eigen::Index Spectrum::rank() const {
  const double cutoff = support_cutoff(eigenvalues);
  return std::count_if(eigenvalues.begin(), eigenvalues.end(),
                       [cutoff](double w) { return in_support(w, cutoff); });
}

Spectrum eig(const HermitianOperator& a) {
  const Eigen::Index n = a.dim();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }

  Spectrum s;
  s.eigenvalues = solver.eigenvalues().reverse();
  s.eigenvectors = solver.eigenvectors().rowwise().reverse();

  for (Eigen::Index k = 0; k < n; ++k) {
    auto col = s.eigenvectors.col(k);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double mag = std::abs(col(i));
      if (mag > kPhaseComponentFloor) {
        col *= std::conj(col(i)) / mag;
        col(i) = mag;
        break;
      }
    }
  }

  const ComplexMatrix rebuilt =
      s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
  const double scale = std::max(1.0, a.frobenius_norm());
  const double residual = (a.matrix() - rebuilt).norm();
  const double orthogonality =
      (s.eigenvectors.adjoint() * s.eigenvectors - ComplexMatrix::Identity(n, n)).norm();
  if (residual > tolerance::eig_residual * scale || orthogonality > tolerance::eig_residual) {
    std::ostringstream os;
    os << "eigendecomposition residual " << residual << ", orthogonality defect " << orthogonality;
    throw Error(ErrorCode::ConvergenceFailure, os.str());
  }
  return s;
}

HermitianOperator matfun(const HermitianOperator& a, const std::function<double(double)>& f,
                         bool support_only) {
  const Spectrum s = eig(a);
  const double cutoff = support_cutoff(s.eigenvalues);
  RealVector fw(s.dim());
  for (Eigen::Index k = 0; k < s.dim(); ++k) {
    const double w = s.eigenvalues(k);
    if (support_only && !in_support(w, cutoff)) {
      fw(k) = 0.0;
      continue;
    }
    fw(k) = f(w);
    if (!std::isfinite(fw(k))) {
      std::ostringstream os;
      os << "function is not finite at eigenvalue " << w;
      throw Error(ErrorCode::DomainError, os.str());
    }
  }
  return HermitianOperator::hermitian_part(s.eigenvectors * fw.cast<Complex>().asDiagonal() *
                                           s.eigenvectors.adjoint());
}

HermitianOperator support_projector(const HermitianOperator& a) {
  return matfun(a, [](double) { return 1.0; }, true);
}

double trace_product(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a, b);
  // Tr(ab) = sum_ij a_ij b_ji, without forming the product.
  const Complex t = (a.matrix().cwiseProduct(b.matrix().transpose())).sum();
  if (std::abs(t.imag()) > 1e-9 * std::max(1.0, std::abs(t.real()))) {
    std::ostringstream os;
    os << "trace of product has imaginary part " << t.imag();
    throw Error(ErrorCode::NonHermitianInput, os.str());
  }
  return t.real();
}

double trace_norm(const HermitianOperator& a) { return eig(a).eigenvalues.cwiseAbs().sum(); }

DensityOperator::DensityOperator(HermitianOperator op) : op_(std::move(op)) {
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    std::ostringstream os;
    os << "trace " << tr << " differs from 1";
    throw Error(ErrorCode::InvalidState, os.str());
  }
  const double min_eig = eig(op_).min_eigenvalue();
  if (min_eig < -kPsdTolerance) {
    std::ostringstream os;
    os << "not positive semidefinite, min eigenvalue " << min_eig;
    throw Error(ErrorCode::InvalidState, os.str());
  }
}

DensityOperator DensityOperator::pure(const ComplexVector& unit_vector) {
  return DensityOperator(HermitianOperator::outer(unit_vector));
}

DensityOperator DensityOperator::maximally_mixed(Eigen::Index dim) {
  return DensityOperator(HermitianOperator::identity(dim) * (1.0 / static_cast<double>(dim)));
}

}  // namespace discrim
