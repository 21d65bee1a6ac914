#include <cmath>

#include "doctest.h"
#include "wychan/sampling.hpp"

using namespace wychan;

TEST_SUITE("sampling") {

TEST_CASE("random density matrices") {
  // rank 1 is pure
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const DensityMatrix pure = random_density(3, 1, seed);
    CHECK(std::abs(pure.purity() - 1.0) < 1e-10);
  }

  // full rank samples are mixed on average
  double mean_purity = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    mean_purity += random_density(2, 2, seed).purity();
  }
  mean_purity /= 50.0;
  CHECK(mean_purity < 0.95);

  // determinism
  const DensityMatrix a = random_density(4, 2, std::uint64_t{99});
  const DensityMatrix b = random_density(4, 2, std::uint64_t{99});
  CHECK((a.matrix() - b.matrix()).norm() == 0.0);

  CHECK_THROWS_AS(random_density(2, 3, std::uint64_t{1}), ParameterOutOfRange);
  CHECK_THROWS_AS(random_density(0, 0, std::uint64_t{1}), ParameterOutOfRange);
}

TEST_CASE("random unitaries") {
  // n = 1 gives a unit-modulus scalar
  const ComplexMatrix scalar = random_unitary(1, std::uint64_t{5});
  CHECK(std::abs(std::abs(scalar(0, 0)) - 1.0) < 1e-12);

  // unitarity residual stays tiny across sizes and seeds
  for (int n : {2, 4, 8}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const ComplexMatrix u = random_unitary(n, seed);
      CHECK((u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm() <= 1e-10);
    }
  }

  const ComplexMatrix a = random_unitary(3, std::uint64_t{123});
  const ComplexMatrix b = random_unitary(3, std::uint64_t{123});
  CHECK((a - b).norm() == 0.0);

  CHECK_THROWS_AS(random_unitary(0, std::uint64_t{1}), ParameterOutOfRange);
}

TEST_CASE("random channels") {
  // n = 1 is a unitary channel
  const KrausChannel single = random_channel(3, 1, std::uint64_t{11});
  CHECK(single.unitary());

  for (int d : {2, 3, 4}) {
    for (int n : {1, 2, 3, 4}) {
      const KrausChannel c = random_channel(d, n, std::uint64_t(10 * d + n));
      ComplexMatrix acc = ComplexMatrix::Zero(d, d);
      for (const ComplexMatrix& k : c.ops()) {
        acc += k.adjoint() * k;
      }
      CHECK((acc - ComplexMatrix::Identity(d, d)).norm() <= 1e-10);
    }
  }

  RandomStream rs1(7), rs2(7);
  const KrausChannel c1 = random_channel(2, 3, rs1);
  const KrausChannel c2 = random_channel(2, 3, rs2);
  for (std::size_t i = 0; i < c1.kraus_count(); ++i) {
    CHECK((c1.op(i) - c2.op(i)).norm() == 0.0);
  }
}

TEST_CASE("random unital channels and simplex weights") {
  RandomStream rs(13);
  const std::vector<double> p = random_simplex(5, rs);
  double total = 0.0;
  for (double x : p) {
    CHECK(x >= 0.0);
    total += x;
  }
  CHECK(std::abs(total - 1.0) < 1e-12);

  for (int t = 0; t < 20; ++t) {
    const KrausChannel c = random_unital_channel(3, 3, rs);
    CHECK(c.unital());
  }
}

TEST_CASE("ball and sphere sampling") {
  RandomStream rs(17);
  for (int t = 0; t < 100; ++t) {
    const BlochVector dir = random_unit_direction(rs);
    CHECK(std::abs(dir.norm() - 1.0) < 1e-12);
    const BlochVector r = random_bloch_ball(rs);
    CHECK(r.norm() <= 1.0 + 1e-12);
    CHECK(r.norm() > 0.0);
  }
}

TEST_CASE("stream splitting is stable and collision-free across trials") {
  const std::uint64_t master = 20240810;
  CHECK(derive_seed(master, 0) == derive_seed(master, 0));
  CHECK(derive_seed(master, 0) != derive_seed(master, 1));
  CHECK(derive_seed(master, 1) != derive_seed(master + 1, 1));

  RandomStream a = RandomStream::for_trial(master, 3);
  RandomStream b = RandomStream::for_trial(master, 3);
  for (int i = 0; i < 16; ++i) {
    CHECK(a.raw() == b.raw());
  }
}

}  // TEST_SUITE
