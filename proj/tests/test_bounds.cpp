#include <cmath>
#include <numbers>

#include "doctest.h"
#include "wychan/sampling.hpp"
#include "wychan/tau.hpp"
#include "wychan/uncertainty.hpp"

using namespace wychan;

namespace {

DensityMatrix worked_example_state(double theta) {
  return DensityMatrix::from_bloch(
      BlochVector{0.5 * std::cos(theta), 0.5 * std::sin(theta), 0.5});
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("product bound trivial and unitary cases") {
  const DensityMatrix rho = worked_example_state(1.1);
  const KrausChannel id = unitary_channel(identity(2));
  const BoundCheck trivial = lb_product(rho, id, id);
  CHECK(trivial.lhs == 0.0);
  CHECK(trivial.rhs == 0.0);
  CHECK(trivial.satisfied);

  // two unitary channels: rhs reduces to |tr([U, V^+] rho)|^2 / 4
  RandomStream rs(61);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix u = random_unitary(3, rs);
    const ComplexMatrix v = random_unitary(3, rs);
    const DensityMatrix state = random_density(3, 2, rs);
    const BoundCheck b = lb_product(state, unitary_channel(u), unitary_channel(v));
    const ComplexMatrix vd = v.adjoint();
    const double expected =
        0.25 * std::norm(((u * vd - vd * u) * state.matrix()).trace());
    CHECK(std::abs(b.rhs - expected) < 1e-12);
    CHECK(b.slack >= -1e-10);
  }
}

TEST_CASE("product bound across the worked-example theta sweep") {
  const KrausChannel damping = amplitude_damping(0.5);
  const KrausChannel flip = bit_flip(0.5);
  for (int i = 0; i < 181; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / 180.0;
    const BoundCheck b = lb_product(worked_example_state(theta), damping, flip);
    CHECK(b.slack >= -1e-10);
  }
}

TEST_CASE("sum bound equality when both channels coincide") {
  RandomStream rs(62);
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = random_density(2, 2, rs);
    const KrausChannel c = random_channel(2, 2, rs);
    const BoundCheck b = lb_sum(rho, c, c);
    // lhs = 2 Q^2, rhs = 2 tilde_I tilde_J = 2 Q^2: the AM-GM equality case
    CHECK(std::abs(b.slack) < 1e-10);
  }
}

TEST_CASE("sum bound for unitary channels matches the single-pair formula") {
  RandomStream rs(63);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix u = random_unitary(2, rs);
    const ComplexMatrix v = random_unitary(2, rs);
    const DensityMatrix rho = random_density(2, 2, rs);
    const ComplexMatrix s = rho.sqrt_matrix();

    const Complex comm = ((s * u - u * s).adjoint() * (s * v - v * s)).trace();
    const Complex anti = ((s * u + u * s).adjoint() * (s * v + v * s)).trace() -
                         4.0 * (u.adjoint() * rho.matrix()).trace() *
                             (v * rho.matrix()).trace();
    const double expected = 0.5 * std::abs(comm * anti);

    const BoundCheck b = lb_sum(rho, unitary_channel(u), unitary_channel(v));
    CHECK(std::abs(b.rhs - expected) < 1e-12);
    CHECK(b.slack >= -1e-10);
  }
}

TEST_CASE("sum bound across the worked-example sweep and under padding") {
  const KrausChannel damping = amplitude_damping(0.5);
  const KrausChannel flip = bit_flip(0.5);
  for (int i = 0; i < 181; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / 180.0;
    const BoundCheck b = lb_sum(worked_example_state(theta), damping, flip);
    CHECK(b.slack >= -1e-10);
  }

  // different Kraus counts: positional pairing after zero padding
  RandomStream rs(64);
  for (int t = 0; t < 10; ++t) {
    const DensityMatrix rho = random_density(3, 2, rs);
    const KrausChannel a = random_channel(3, 1, rs);
    const KrausChannel b = random_channel(3, 4, rs);
    const BoundCheck check = lb_sum(rho, a, b);
    CHECK(check.slack >= -1e-10);
  }
}

TEST_CASE("closed and centered sum-bound forms agree") {
  RandomStream rs(65);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = random_density(3, 3, rs);
    const KrausChannel a = random_channel(3, 2, rs);
    const KrausChannel b = random_channel(3, 3, rs);
    const SumBoundForms forms = lb_sum_forms(rho, a, b);
    CHECK(std::abs(forms.closed_form - forms.centered_form) < 1e-10);
  }
}

TEST_CASE("triple bound at tau = 1") {
  RandomStream rs(66);
  for (int t = 0; t < 15; ++t) {
    const DensityMatrix rho = random_density(2, 2, rs);
    const KrausChannel a = random_channel(2, 2, rs);
    const KrausChannel b = random_channel(2, 2, rs);
    const KrausChannel c = random_channel(2, 2, rs);
    CHECK(lb_triple(rho, a, b, c, 1.0).slack >= -1e-10);
  }

  // three pauli channels: rhs at tau = 1 is |r_x r_y r_z|
  const auto paulis = pauli_unitary_channels();
  for (int t = 0; t < 15; ++t) {
    const BlochVector r = random_bloch_ball(rs);
    const DensityMatrix rho = DensityMatrix::from_bloch(r);
    const BoundCheck b = lb_triple(rho, paulis[0], paulis[1], paulis[2], 1.0);
    CHECK(std::abs(b.rhs - std::abs(r.x * r.y * r.z)) < 1e-10);
    CHECK(b.slack >= -1e-10);
  }

  // a triple containing the identity channel has vanishing rhs
  const DensityMatrix rho = worked_example_state(0.3);
  const BoundCheck degenerate =
      lb_triple(rho, unitary_channel(identity(2)), paulis[0], paulis[1], 1.0);
  CHECK(degenerate.rhs == 0.0);
  CHECK(degenerate.lhs >= 0.0);
  CHECK(degenerate.satisfied);

  CHECK_THROWS_AS(lb_triple(rho, paulis[0], paulis[1], paulis[2], 0.0), ParameterOutOfRange);
}

TEST_CASE("pauli tight bound equality cases") {
  // |r_a| = 1/sqrt(3): both sides equal 8/27
  const double c = 1.0 / std::sqrt(3.0);
  const BoundCheck eq = pauli_tight_bound(DensityMatrix::from_bloch(BlochVector{c, c, c}));
  CHECK(std::abs(eq.lhs - 8.0 / 27.0) < 1e-12);
  CHECK(std::abs(eq.rhs - 8.0 / 27.0) < 1e-12);
  CHECK(std::abs(eq.slack) < 1e-12);

  // axis states: both sides vanish
  const BoundCheck axis = pauli_tight_bound(DensityMatrix::from_bloch(BlochVector{1, 0, 0}));
  CHECK(axis.lhs < 1e-12);
  CHECK(axis.rhs < 1e-12);
  CHECK(axis.satisfied);

  // maximally mixed: 0 >= 0
  const BoundCheck center = pauli_tight_bound(DensityMatrix::from_bloch(BlochVector{0, 0, 0}));
  CHECK(center.lhs < 1e-12);
  CHECK(center.rhs == 0.0);

  CHECK_THROWS_AS(pauli_tight_bound(random_density(3, 3, std::uint64_t{7})),
                  DimensionMismatch);
}

TEST_CASE("pauli tight bound holds across the bloch ball") {
  RandomStream rs(67);
  for (int t = 0; t < 300; ++t) {
    const BlochVector r = random_bloch_ball(rs);
    CHECK(pauli_tight_bound(DensityMatrix::from_bloch(r)).slack >= -1e-10);
  }
  const GridScanResult scan = pauli_bound_scan(20000);
  CHECK(scan.worst_slack >= -1e-10);
}

TEST_CASE("tau estimation") {
  const auto paulis = pauli_unitary_channels();
  TauConfig cfg;
  cfg.samples = 25000;
  const TauEstimate est = estimate_tau(paulis[0], paulis[1], paulis[2], cfg);
  const double target = 64.0 / (3.0 * std::sqrt(3.0));
  CHECK(est.tau >= target - 1e-9);          // converges from above
  CHECK(est.tau <= target * 1.05);          // and is already close on a 25k grid
  CHECK(est.feasible > 0);
  CHECK(est.minimizer.substr(0, 5) == "bloch");

  // arbitrary triple: at least the geometric-mean guarantee
  RandomStream rs(68);
  const KrausChannel a = random_channel(2, 2, rs);
  const KrausChannel b = random_channel(2, 2, rs);
  const KrausChannel c = random_channel(2, 2, rs);
  TauConfig small;
  small.samples = 2000;
  CHECK(estimate_tau(a, b, c, small).tau >= 1.0 - 1e-6);

  // identity channel in the triple: every denominator vanishes
  CHECK_THROWS_AS(estimate_tau(unitary_channel(identity(2)), a, b, small), NoFeasibleSample);

  // dimension > 2 goes through the ginibre sampler
  const KrausChannel a3 = random_channel(3, 2, rs);
  const KrausChannel b3 = random_channel(3, 2, rs);
  const KrausChannel c3 = random_channel(3, 2, rs);
  const TauEstimate est3 = estimate_tau(a3, b3, c3, small);
  CHECK(est3.tau >= 1.0 - 1e-6);
  CHECK(est3.minimizer.substr(0, 7) == "ginibre");
}

}  // TEST_SUITE
