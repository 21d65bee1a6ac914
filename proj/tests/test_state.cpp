#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "wychan/sampling.hpp"
#include "wychan/state.hpp"

using namespace wychan;

TEST_SUITE("state") {

TEST_CASE("maximally mixed qubit") {
  const DensityMatrix rho = DensityMatrix::from_matrix(0.5 * identity(2));
  CHECK(rho.dim() == 2);
  CHECK((rho.sqrt_matrix() - identity(2) / std::sqrt(2.0)).norm() < 1e-12);
  CHECK(rho.purity() == doctest::Approx(0.5));
}

TEST_CASE("pure projector is a fixed point of the square root") {
  ComplexMatrix proj = ComplexMatrix::Zero(2, 2);
  proj(0, 0) = 1.0;
  const DensityMatrix rho = DensityMatrix::from_matrix(proj);
  CHECK((rho.sqrt_matrix() - rho.matrix()).norm() < 1e-12);
  CHECK(rho.purity() == doctest::Approx(1.0));
}

TEST_CASE("validation failures") {
  ComplexMatrix bad_trace = ComplexMatrix::Zero(2, 2);
  bad_trace(0, 0) = 0.9;
  bad_trace(1, 1) = 0.2;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(bad_trace), NotUnitTrace);

  ComplexMatrix skewed = ComplexMatrix::Zero(2, 2);
  skewed(0, 0) = 1.0;
  skewed(0, 1) = Complex(0.0, 0.3);
  skewed(1, 0) = Complex(0.0, 0.3);  // equal entries: i*0.3 both => not hermitian
  CHECK_THROWS_AS(DensityMatrix::from_matrix(skewed), NotHermitian);

  ComplexMatrix indefinite = ComplexMatrix::Zero(2, 2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(indefinite), NotPositiveSemidefinite);

  CHECK_THROWS_AS(DensityMatrix::from_matrix(ComplexMatrix::Zero(2, 3)), DimensionMismatch);

  ComplexMatrix nan_entry = 0.5 * identity(2);
  nan_entry(0, 0) = Complex(std::nan(""), 0.0);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(nan_entry), NotHermitian);
}

TEST_CASE("bloch construction") {
  const DensityMatrix mixed = DensityMatrix::from_bloch(BlochVector{0, 0, 0});
  CHECK((mixed.matrix() - 0.5 * identity(2)).norm() < 1e-12);

  const DensityMatrix north = DensityMatrix::from_bloch(BlochVector{0, 0, 1});
  CHECK(std::abs(north.matrix()(0, 0) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(north.matrix()(1, 1)) < 1e-12);

  // the worked qubit example: transverse radius 1/2, z = 1/2, |r| = 1/sqrt(2)
  const double theta = std::numbers::pi / 4.0;
  const DensityMatrix rho = DensityMatrix::from_bloch(
      BlochVector{0.5 * std::cos(theta), 0.5 * std::sin(theta), 0.5});
  CHECK(std::abs(rho.eigenvalues()(1) - 0.8535533905932737) < 1e-12);
  CHECK(std::abs(rho.eigenvalues()(0) - 0.14644660940672627) < 1e-12);

  CHECK_THROWS_AS(DensityMatrix::from_bloch(BlochVector{1.0 + 1e-6, 0, 0}),
                  BlochVectorTooLong);

  // a hair over the sphere is clamped onto it
  const DensityMatrix clamped = DensityMatrix::from_bloch(BlochVector{1.0 + 5e-13, 0, 0});
  CHECK(clamped.purity() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bloch purity identity (1 + |r|^2)/2") {
  RandomStream rs(31);
  for (int t = 0; t < 50; ++t) {
    const BlochVector r = random_bloch_ball(rs);
    const DensityMatrix rho = DensityMatrix::from_bloch(r);
    CHECK(std::abs(rho.purity() - 0.5 * (1.0 + r.norm() * r.norm())) < 1e-12);
  }
}

TEST_CASE("trace renormalization and sqrt reconstruction") {
  RandomStream rs(32);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = random_density(4, 3, rs);
    CHECK(std::abs(rho.matrix().trace() - Complex(1.0, 0.0)) < 1e-12);
    const ComplexMatrix s = rho.sqrt_matrix();
    CHECK((s * s - rho.matrix()).norm() <= hybrid_tol(1e-9, rho.matrix().norm()));
    CHECK(rho.purity() >= 1.0 / rho.dim() - 1e-9);
    CHECK(rho.purity() <= 1.0 + 1e-9);
  }
}

}  // TEST_SUITE
