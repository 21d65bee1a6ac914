#pragma once

#include <cmath>

#include "wychan/matrix.hpp"

namespace wychan {

/// Real 3-vector parameterizing a qubit state rho = (I + r.sigma)/2.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

/// Validated quantum state: Hermitian, positive semidefinite, unit trace.
/// Construction symmetrizes the input, clamps eigenvalues in [-1e-10, 0) to
/// zero, renormalizes the trace, and caches the PSD square root, so the held
/// matrix is exactly Hermitian PSD with trace 1 up to rounding.
class DensityMatrix {
 public:
  /// Throws NotHermitian / NotUnitTrace / NotPositiveSemidefinite.
  static DensityMatrix from_matrix(const ComplexMatrix& m);

  /// rho = (I + x sx + y sy + z sz)/2, eigenvalues (1 +- |r|)/2. Vectors
  /// longer than 1 by at most 1e-12 are clamped to the sphere; longer ones
  /// throw BlochVectorTooLong.
  static DensityMatrix from_bloch(const BlochVector& r);

  int dim() const { return dim_; }
  const ComplexMatrix& matrix() const { return rho_; }
  const ComplexMatrix& sqrt_matrix() const { return sqrt_; }
  const RealVector& eigenvalues() const { return evals_; }  // ascending

  double purity() const { return evals_.squaredNorm(); }

 private:
  DensityMatrix(int dim, ComplexMatrix rho, ComplexMatrix sqrt, RealVector evals)
      : dim_(dim), rho_(std::move(rho)), sqrt_(std::move(sqrt)), evals_(std::move(evals)) {}

  int dim_;
  ComplexMatrix rho_;
  ComplexMatrix sqrt_;
  RealVector evals_;
};

}  // namespace wychan
