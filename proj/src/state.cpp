#include "wychan/state.hpp"

#include <string>

namespace wychan {

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionMismatch("density matrix must be square and nonempty");
  }
  if (!all_finite(m)) {
    throw NotHermitian("density matrix contains non-finite entries");
  }
  const double skew = (m - m.adjoint()).norm();
  if (!(skew <= hybrid_tol(1e-9, m.norm()))) {
    throw NotHermitian("density matrix hermiticity residual " + std::to_string(skew));
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-9) {
    throw NotUnitTrace("density matrix trace " + std::to_string(tr.real()) + "+" +
                       std::to_string(tr.imag()) + "i");
  }

  EigDecomposition eig = hermitian_eig(m);
  const double min_eval = eig.eigenvalues.minCoeff();
  if (min_eval < -1e-10) {
    throw NotPositiveSemidefinite("density matrix eigenvalue " + std::to_string(min_eval));
  }
  // Zero out eigensolver noise on both sides of zero. Keeping a +1e-17
  // eigenvalue would put sqrt(1e-17) ~ 3e-9 into sqrt(rho) and wreck every
  // downstream quantity on rank-deficient states.
  RealVector evals = eig.eigenvalues;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) < 1e-14) {
      evals(i) = 0.0;
    }
  }
  evals /= evals.sum();  // sum is within 1e-9 of 1, never zero

  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix rho = v * evals.asDiagonal().toDenseMatrix().cast<Complex>() * v.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  ComplexMatrix sqrt =
      v * evals.cwiseSqrt().asDiagonal().toDenseMatrix().cast<Complex>() * v.adjoint();
  sqrt = 0.5 * (sqrt + sqrt.adjoint());
  return DensityMatrix(static_cast<int>(m.rows()), std::move(rho), std::move(sqrt),
                       std::move(evals));
}

DensityMatrix DensityMatrix::from_bloch(const BlochVector& r) {
  double n = r.norm();
  if (n > 1.0 + 1e-12) {
    throw BlochVectorTooLong("|r| = " + std::to_string(n));
  }
  BlochVector v = r;
  if (n > 1.0) {  // within tolerance: clamp onto the sphere
    v.x /= n;
    v.y /= n;
    v.z /= n;
  }
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(0.5 * (1.0 + v.z), 0.0);
  m(0, 1) = Complex(0.5 * v.x, -0.5 * v.y);
  m(1, 0) = Complex(0.5 * v.x, 0.5 * v.y);
  m(1, 1) = Complex(0.5 * (1.0 - v.z), 0.0);
  return from_matrix(m);
}

}  // namespace wychan
