#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>

#include "wychan/errors.hpp"

namespace wychan {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Hybrid absolute/relative tolerance: tol * max(1, scale). Behaves like an
/// absolute tolerance near zero matrices and a relative one for large ones.
inline double hybrid_tol(double tol, double scale) {
  return tol * std::max(1.0, scale);
}

bool all_finite(const ComplexMatrix& m);

// Elementary arithmetic with explicit shape checks. All throw
// DimensionMismatch on incompatible operands.
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(Complex s, const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// ab - ba (skew-symmetric Lie product). Operands must be square and of
/// equal dimension.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// ab + ba (symmetric Jordan product).
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt pairing tr(a^dagger b). Conjugate-symmetric in (a, b).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// sqrt(tr(a^dagger a)) = sqrt of the sum of squared moduli.
double frobenius_norm(const ComplexMatrix& a);

struct EigDecomposition {
  RealVector eigenvalues;      ///< ascending
  ComplexMatrix eigenvectors;  ///< columns orthonormal, paired with eigenvalues
};

/// Spectral decomposition of a Hermitian matrix. The input must be Hermitian
/// within 1e-9 hybrid tolerance and is symmetrized as (a + a^dagger)/2 before
/// the solve. Throws NotHermitian / ConvergenceFailure.
EigDecomposition hermitian_eig(const ComplexMatrix& a);

/// Principal square root of a positive semidefinite matrix,
/// V diag(sqrt(max(lambda, 0))) V^dagger. Eigenvalues in [-1e-10, 0) are
/// treated as numerical noise and clamped; anything below -1e-10 throws
/// NotPositiveSemidefinite.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

/// Kronecker product with a's indices major: (a (x) b)[(i,k),(j,l)] = a(i,j) b(k,l).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace over the second tensor factor of a (d_a*d_b) x (d_a*d_b) matrix,
/// using the same index convention as tensor_product.
ComplexMatrix partial_trace_second(const ComplexMatrix& ab, int dim_b);

ComplexMatrix identity(int d);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix pauli(char axis);  // 'x', 'y' or 'z'

}  // namespace wychan
