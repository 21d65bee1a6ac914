#include "wychan/matrix.hpp"

#include <cmath>
#include <string>

namespace wychan {

namespace {

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": operands " + shape(a) + " and " + shape(b));
  }
}

void require_square_pair(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionMismatch(std::string(op) + ": need equal square operands, got " + shape(a) +
                            " and " + shape(b));
  }
}

}  // namespace

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  return a + b;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "sub");
  return a - b;
}

ComplexMatrix scale(Complex s, const ComplexMatrix& a) {
  return s * a;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: " + shape(a) + " times " + shape(b));
  }
  return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  return a.adjoint();
}

Complex trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("trace: matrix is " + shape(a));
  }
  return a.trace();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square_pair(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square_pair(a, b, "anticommutator");
  return a * b + b * a;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hs_inner");
  return (a.adjoint() * b).trace();
}

double frobenius_norm(const ComplexMatrix& a) {
  return a.norm();
}

EigDecomposition hermitian_eig(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionMismatch("hermitian_eig: matrix is " + shape(a));
  }
  const double skew = (a - a.adjoint()).norm();
  if (!(skew <= hybrid_tol(1e-9, a.norm()))) {
    throw NotHermitian("hermitian_eig: ||a - a^+||_F = " + std::to_string(skew));
  }
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("hermitian_eig: eigensolver did not converge");
  }
  return EigDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  const EigDecomposition eig = hermitian_eig(a);
  const double min_eval = eig.eigenvalues.minCoeff();
  if (min_eval < -1e-10) {
    throw NotPositiveSemidefinite("psd_sqrt: smallest eigenvalue " + std::to_string(min_eval));
  }
  RealVector roots = eig.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  ComplexMatrix s =
      eig.eigenvectors * roots.asDiagonal().toDenseMatrix().cast<Complex>() *
      eig.eigenvectors.adjoint();
  return 0.5 * (s + s.adjoint());
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& ab, int dim_b) {
  if (ab.rows() != ab.cols()) {
    throw DimensionMismatch("partial_trace: matrix is " + shape(ab));
  }
  if (dim_b < 1 || ab.rows() % dim_b != 0) {
    throw DimensionMismatch("partial_trace: dimension " + std::to_string(ab.rows()) +
                            " not divisible by factor " + std::to_string(dim_b));
  }
  const Eigen::Index da = ab.rows() / dim_b;
  ComplexMatrix out = ComplexMatrix::Zero(da, da);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      Complex acc(0.0, 0.0);
      for (Eigen::Index k = 0; k < dim_b; ++k) {
        acc += ab(i * dim_b + k, j * dim_b + k);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix identity(int d) {
  if (d < 1) {
    throw DimensionMismatch("identity: dimension " + std::to_string(d));
  }
  return ComplexMatrix::Identity(d, d);
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  return m;
}

ComplexMatrix pauli(char axis) {
  switch (axis) {
    case 'x':
      return pauli_x();
    case 'y':
      return pauli_y();
    case 'z':
      return pauli_z();
    default:
      throw ParameterOutOfRange(std::string("pauli: unknown axis '") + axis + "'");
  }
}

}  // namespace wychan
