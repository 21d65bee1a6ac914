#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wychan/matrix.hpp"
#include "wychan/rng.hpp"
#include "wychan/sampling.hpp"

using namespace wychan;

namespace {

ComplexMatrix random_complex(Eigen::Index rows, Eigen::Index cols, RandomStream& rs) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = rs.complex_gaussian();
    }
  }
  return m;
}

ComplexMatrix random_hermitian(int d, RandomStream& rs) {
  const ComplexMatrix g = random_complex(d, d, rs);
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("elementary arithmetic") {
  const ComplexMatrix eye = identity(2);
  CHECK(trace(eye) == Complex(2.0, 0.0));
  CHECK((matmul(pauli_x(), pauli_x()) - eye).norm() == 0.0);

  RandomStream rs(11);
  const ComplexMatrix a = random_complex(3, 2, rs);
  CHECK((adjoint(adjoint(a)) - a).norm() == 0.0);

  const ComplexMatrix b = random_complex(3, 2, rs);
  CHECK((add(a, b) - (a + b)).norm() == 0.0);
  CHECK((sub(a, b) - (a - b)).norm() == 0.0);
  CHECK((scale(Complex(0.0, 2.0), a) - Complex(0.0, 2.0) * a).norm() == 0.0);

  CHECK_THROWS_AS(add(a, random_complex(2, 2, rs)), DimensionMismatch);
  CHECK_THROWS_AS(matmul(a, a), DimensionMismatch);
  CHECK_THROWS_AS(trace(a), DimensionMismatch);
  CHECK_THROWS_AS(hs_inner(a, random_complex(2, 3, rs)), DimensionMismatch);
}

TEST_CASE("pauli algebra") {
  const Complex two_i(0.0, 2.0);
  CHECK((commutator(pauli_x(), pauli_y()) - two_i * pauli_z()).norm() < 1e-15);
  CHECK((commutator(pauli_x(), pauli_z()) + two_i * pauli_y()).norm() < 1e-15);
  CHECK(anticommutator(pauli_x(), pauli_y()).norm() < 1e-15);
  CHECK((anticommutator(pauli_z(), pauli_z()) - 2.0 * identity(2)).norm() < 1e-15);

  RandomStream rs(12);
  const ComplexMatrix a = random_complex(4, 4, rs);
  CHECK(commutator(a, identity(4)).norm() < 1e-14);
  CHECK((anticommutator(a, identity(4)) - 2.0 * a).norm() < 1e-14);
  CHECK_THROWS_AS(commutator(a, identity(3)), DimensionMismatch);
  CHECK_THROWS_AS(anticommutator(random_complex(2, 3, rs), identity(3)), DimensionMismatch);
}

TEST_CASE("commutator plus anticommutator recovers 2ab") {
  RandomStream rs(13);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_complex(4, 4, rs);
    const ComplexMatrix b = random_complex(4, 4, rs);
    const ComplexMatrix lhs = commutator(a, b) + anticommutator(a, b);
    const ComplexMatrix rhs = 2.0 * matmul(a, b);
    CHECK((lhs - rhs).norm() <= hybrid_tol(1e-14, rhs.norm()));
  }
}

TEST_CASE("hilbert-schmidt inner product and frobenius norm") {
  CHECK(hs_inner(pauli_x(), pauli_x()) == Complex(2.0, 0.0));
  CHECK(std::abs(hs_inner(pauli_x(), pauli_y())) < 1e-15);
  CHECK(frobenius_norm(identity(2)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(frobenius_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
  CHECK(frobenius_norm(pauli_x()) == doctest::Approx(std::sqrt(2.0)));

  RandomStream rs(14);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_complex(3, 3, rs);
    const ComplexMatrix b = random_complex(3, 3, rs);
    const Complex ab = hs_inner(a, b);
    // conjugate symmetry
    CHECK(std::abs(ab - std::conj(hs_inner(b, a))) < 1e-12);
    // norm identity
    const Complex aa = hs_inner(a, a);
    CHECK(std::abs(aa.imag()) < 1e-12);
    CHECK(aa.real() >= 0.0);
    CHECK(std::abs(aa.real() - frobenius_norm(a) * frobenius_norm(a)) < 1e-12);
    // Cauchy-Schwarz
    CHECK(std::norm(ab) <= hs_inner(a, a).real() * hs_inner(b, b).real() + 1e-12);
  }
}

TEST_CASE("frobenius norm is unitarily invariant") {
  RandomStream rs(15);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = random_complex(4, 4, rs);
    const ComplexMatrix u = random_unitary(4, rs);
    const ComplexMatrix v = random_unitary(4, rs);
    CHECK(std::abs(frobenius_norm(u * a * v) - frobenius_norm(a)) < 1e-10);
  }
}

TEST_CASE("hermitian eigendecomposition") {
  ComplexMatrix d31 = ComplexMatrix::Zero(2, 2);
  d31(0, 0) = 3.0;
  d31(1, 1) = 1.0;
  EigDecomposition eig = hermitian_eig(d31);
  CHECK(eig.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(eig.eigenvalues(1) == doctest::Approx(3.0));

  eig = hermitian_eig(pauli_x());
  CHECK(eig.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(eig.eigenvalues(1) == doctest::Approx(1.0));
  // eigenvectors are (1, -+1)/sqrt(2) up to phase
  for (int col = 0; col < 2; ++col) {
    CHECK(std::abs(eig.eigenvectors(0, col)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(eig.eigenvectors(1, col)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  }

  ComplexMatrix skewed = ComplexMatrix::Zero(2, 2);
  skewed(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(skewed), NotHermitian);
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::Zero(2, 3)), DimensionMismatch);
}

TEST_CASE("qubit bloch spectrum matches the characteristic-polynomial closed form") {
  RandomStream rs(16);
  for (int t = 0; t < 30; ++t) {
    const BlochVector r = random_bloch_ball(rs);
    const EigDecomposition eig = hermitian_eig(oracle::bloch_matrix(r.x, r.y, r.z));
    const double n = r.norm();
    CHECK(std::abs(eig.eigenvalues(0) - 0.5 * (1.0 - n)) < 1e-12);
    CHECK(std::abs(eig.eigenvalues(1) - 0.5 * (1.0 + n)) < 1e-12);
  }
}

TEST_CASE("eigendecomposition invariants on random hermitian input") {
  RandomStream rs(17);
  for (int d : {2, 3, 5, 8}) {
    const ComplexMatrix h = random_hermitian(d, rs);
    const EigDecomposition eig = hermitian_eig(h);
    const ComplexMatrix rebuilt =
        eig.eigenvectors * eig.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
        eig.eigenvectors.adjoint();
    CHECK((rebuilt - h).norm() <= hybrid_tol(1e-10, h.norm()));
    CHECK((eig.eigenvectors.adjoint() * eig.eigenvectors - identity(d)).norm() <= 1e-10);
    for (int i = 0; i + 1 < d; ++i) {
      CHECK(eig.eigenvalues(i) <= eig.eigenvalues(i + 1));
    }
  }
}

TEST_CASE("psd square root") {
  CHECK((psd_sqrt(identity(3)) - identity(3)).norm() < 1e-12);

  ComplexMatrix d49 = ComplexMatrix::Zero(2, 2);
  d49(0, 0) = 4.0;
  d49(1, 1) = 9.0;
  ComplexMatrix d23 = ComplexMatrix::Zero(2, 2);
  d23(0, 0) = 2.0;
  d23(1, 1) = 3.0;
  CHECK((psd_sqrt(d49) - d23).norm() < 1e-12);

  // eigenvalue within the clamping window is treated as zero
  ComplexMatrix noisy = ComplexMatrix::Zero(2, 2);
  noisy(0, 0) = 1.0;
  noisy(1, 1) = -5e-11;
  ComplexMatrix root = psd_sqrt(noisy);
  CHECK(std::abs(root(0, 0) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(root(1, 1)) < 1e-12);

  CHECK_THROWS_AS(psd_sqrt(pauli_z()), NotPositiveSemidefinite);
}

TEST_CASE("bloch square root closed form") {
  RandomStream rs(18);
  for (int t = 0; t < 20; ++t) {
    const BlochVector r = random_bloch_ball(rs);
    const ComplexMatrix rho = oracle::bloch_matrix(r.x, r.y, r.z);
    const ComplexMatrix s = psd_sqrt(rho);

    const double n = r.norm();
    const double lp = 0.5 * (1.0 + n);
    const double lm = 0.5 * (1.0 - n);
    const double a = 0.5 * (std::sqrt(lp) + std::sqrt(lm));
    const double b = 0.5 * (std::sqrt(lp) - std::sqrt(lm));
    const ComplexMatrix expected =
        a * identity(2) + (b / n) * (r.x * pauli_x() + r.y * pauli_y() + r.z * pauli_z());
    CHECK((s - expected).norm() < 1e-10);
    CHECK((s * s - rho).norm() <= hybrid_tol(1e-9, rho.norm()));
  }
}

TEST_CASE("square of psd_sqrt reconstructs random PSD input") {
  RandomStream rs(19);
  for (int d : {2, 4, 8}) {
    const ComplexMatrix h = random_hermitian(d, rs);
    const ComplexMatrix psd = h * h;
    const ComplexMatrix s = psd_sqrt(psd);
    CHECK((s * s - psd).norm() <= hybrid_tol(1e-9, psd.norm()));
    CHECK((s - s.adjoint()).norm() < 1e-12);
  }
}

TEST_CASE("tensor product") {
  CHECK((tensor_product(identity(2), identity(2)) - identity(4)).norm() == 0.0);

  ComplexMatrix d12 = ComplexMatrix::Zero(2, 2);
  d12(0, 0) = 1.0;
  d12(1, 1) = 2.0;
  ComplexMatrix d34 = ComplexMatrix::Zero(2, 2);
  d34(0, 0) = 3.0;
  d34(1, 1) = 4.0;
  const ComplexMatrix prod = tensor_product(d12, d34);
  CHECK(prod.rows() == 4);
  CHECK(prod(0, 0) == Complex(3.0, 0.0));
  CHECK(prod(1, 1) == Complex(4.0, 0.0));
  CHECK(prod(2, 2) == Complex(6.0, 0.0));
  CHECK(prod(3, 3) == Complex(8.0, 0.0));

  RandomStream rs(20);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix a = random_complex(3, 3, rs);
    const ComplexMatrix b = random_complex(2, 2, rs);
    CHECK(std::abs(trace(tensor_product(a, b)) - trace(a) * trace(b)) < 1e-12);
  }
}

TEST_CASE("partial trace over the second factor") {
  RandomStream rs(21);
  const ComplexMatrix a = random_complex(3, 3, rs);
  const ComplexMatrix b = random_complex(2, 2, rs);
  const ComplexMatrix reduced = partial_trace_second(tensor_product(a, b), 2);
  CHECK((reduced - trace(b) * a).norm() < 1e-12);

  CHECK_THROWS_AS(partial_trace_second(random_complex(2, 3, rs), 1), DimensionMismatch);
  CHECK_THROWS_AS(partial_trace_second(identity(6), 4), DimensionMismatch);
}

}  // TEST_SUITE
