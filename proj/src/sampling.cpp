#include "wychan/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace wychan {

namespace {

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, RandomStream& rs) {
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      g(i, j) = rs.complex_gaussian();
    }
  }
  return g;
}

/// Thin QR factor with the R-diagonal phases folded in; columns orthonormal
/// and canonical for a given input.
ComplexMatrix phase_fixed_q(const ComplexMatrix& g) {
  const Eigen::Index rows = g.rows();
  const Eigen::Index cols = g.cols();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    const Complex phase = mag > 0.0 ? d / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

}  // namespace

DensityMatrix random_density(int dim, int rank, RandomStream& rs) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw ParameterOutOfRange("random_density: dim " + std::to_string(dim) + ", rank " +
                              std::to_string(rank));
  }
  const ComplexMatrix g = ginibre(dim, rank, rs);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix::from_matrix(rho);
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  RandomStream rs(seed);
  return random_density(dim, rank, rs);
}

ComplexMatrix random_unitary(int n, RandomStream& rs) {
  if (n < 1) {
    throw ParameterOutOfRange("random_unitary: n = " + std::to_string(n));
  }
  return phase_fixed_q(ginibre(n, n, rs));
}

ComplexMatrix random_unitary(int n, std::uint64_t seed) {
  RandomStream rs(seed);
  return random_unitary(n, rs);
}

KrausChannel random_channel(int dim, int n, RandomStream& rs) {
  if (dim < 1 || n < 1) {
    throw ParameterOutOfRange("random_channel: dim " + std::to_string(dim) + ", n " +
                              std::to_string(n));
  }
  const ComplexMatrix isometry = phase_fixed_q(ginibre(static_cast<Eigen::Index>(n) * dim, dim, rs));
  std::vector<ComplexMatrix> ops;
  ops.reserve(n);
  for (int i = 0; i < n; ++i) {
    ops.push_back(isometry.block(static_cast<Eigen::Index>(i) * dim, 0, dim, dim));
  }
  return KrausChannel(std::move(ops), "random(d=" + std::to_string(dim) + ",n=" +
                                          std::to_string(n) + ")");
}

KrausChannel random_channel(int dim, int n, std::uint64_t seed) {
  RandomStream rs(seed);
  return random_channel(dim, n, rs);
}

std::vector<double> random_simplex(int n, RandomStream& rs) {
  if (n < 1) {
    throw ParameterOutOfRange("random_simplex: n = " + std::to_string(n));
  }
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = -std::log(rs.uniform_open());
    total += x;
  }
  for (double& x : w) {
    x /= total;
  }
  return w;
}

KrausChannel random_unital_channel(int dim, int n, RandomStream& rs) {
  const std::vector<double> p = random_simplex(n, rs);
  std::vector<ComplexMatrix> ops;
  ops.reserve(n);
  for (int i = 0; i < n; ++i) {
    ops.push_back(std::sqrt(p[i]) * random_unitary(dim, rs));
  }
  return KrausChannel(std::move(ops), "random_unital(d=" + std::to_string(dim) + ",n=" +
                                          std::to_string(n) + ")");
}

BlochVector random_unit_direction(RandomStream& rs) {
  const double cos_theta = 2.0 * rs.uniform() - 1.0;
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  const double phi = 2.0 * std::numbers::pi * rs.uniform();
  return BlochVector{sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta};
}

BlochVector random_bloch_ball(RandomStream& rs) {
  BlochVector dir = random_unit_direction(rs);
  const double radius = std::cbrt(rs.uniform_open());
  return BlochVector{radius * dir.x, radius * dir.y, radius * dir.z};
}

}  // namespace wychan
