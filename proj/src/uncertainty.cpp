#include "wychan/uncertainty.hpp"

#include <cmath>
#include <string>

namespace wychan {

namespace {

void require_match(const DensityMatrix& rho, const ComplexMatrix& k, const char* op) {
  if (k.rows() != k.cols() || k.rows() != rho.dim()) {
    throw DimensionMismatch(std::string(op) + ": operator " + std::to_string(k.rows()) + "x" +
                            std::to_string(k.cols()) + " vs state dim " +
                            std::to_string(rho.dim()));
  }
}

void require_match(const DensityMatrix& rho, const KrausChannel& c, const char* op) {
  if (c.dim() != rho.dim()) {
    throw DimensionMismatch(std::string(op) + ": channel dim " + std::to_string(c.dim()) +
                            " vs state dim " + std::to_string(rho.dim()));
  }
}

/// Kraus lists of both channels, zero-padded to equal length for positional
/// pairing.
std::pair<std::vector<ComplexMatrix>, std::vector<ComplexMatrix>> padded_pair(
    const KrausChannel& psi, const KrausChannel& phi) {
  const std::size_t m = std::max(psi.kraus_count(), phi.kraus_count());
  std::vector<ComplexMatrix> ls = psi.ops();
  std::vector<ComplexMatrix> ks = phi.ops();
  ls.resize(m, ComplexMatrix::Zero(psi.dim(), psi.dim()));
  ks.resize(m, ComplexMatrix::Zero(phi.dim(), phi.dim()));
  return {std::move(ls), std::move(ks)};
}

}  // namespace

double clamp_nonnegative(double value, const char* what) {
  if (value >= 0.0) {
    return value;
  }
  if (value >= kClampFloor) {
    return 0.0;
  }
  throw InternalInconsistency(std::string(what) + " = " + std::to_string(value) +
                              " below the noise floor");
}

BoundCheck make_bound(double lhs, double rhs, double tolerance) {
  BoundCheck b;
  b.lhs = lhs;
  b.rhs = rhs;
  b.slack = lhs - rhs;
  b.tolerance = tolerance;
  b.satisfied = b.slack >= -tolerance;
  return b;
}

double skew_info_op(const DensityMatrix& rho, const ComplexMatrix& k) {
  require_match(rho, k, "skew_info_op");
  const ComplexMatrix& s = rho.sqrt_matrix();
  return 0.5 * (s * k - k * s).squaredNorm();
}

double dual_info_op(const DensityMatrix& rho, const ComplexMatrix& k) {
  require_match(rho, k, "dual_info_op");
  const ComplexMatrix& s = rho.sqrt_matrix();
  return 0.5 * (s * k + k * s).squaredNorm();
}

double variance_op(const DensityMatrix& rho, const ComplexMatrix& k) {
  require_match(rho, k, "variance_op");
  const double symmetric = 0.5 * ((k.adjoint() * k + k * k.adjoint()) * rho.matrix())
                                     .trace()
                                     .real();
  const double mean_sq = std::norm((k * rho.matrix()).trace());
  return clamp_nonnegative(symmetric - mean_sq, "variance_op");
}

double skew_info_channel(const DensityMatrix& rho, const KrausChannel& c) {
  require_match(rho, c, "skew_info_channel");
  double total = 0.0;
  for (const ComplexMatrix& k : c.ops()) {
    total += skew_info_op(rho, k);
  }
  return total;
}

double dual_info_channel(const DensityMatrix& rho, const KrausChannel& c) {
  require_match(rho, c, "dual_info_channel");
  double total = 0.0;
  for (const ComplexMatrix& k : c.ops()) {
    total += dual_info_op(rho, k);
  }
  return total;
}

double variance_channel(const DensityMatrix& rho, const KrausChannel& c) {
  require_match(rho, c, "variance_channel");
  double total = 0.0;
  for (const ComplexMatrix& k : c.ops()) {
    total += variance_op(rho, k);
  }
  return total;
}

double classical_uncertainty(const DensityMatrix& rho, const KrausChannel& c) {
  return clamp_nonnegative(variance_channel(rho, c) - skew_info_channel(rho, c),
                           "classical_uncertainty");
}

double quantum_uncertainty(const DensityMatrix& rho, const KrausChannel& c) {
  const double v = variance_channel(rho, c);
  const double cl = clamp_nonnegative(v - skew_info_channel(rho, c), "classical_uncertainty");
  return std::sqrt(clamp_nonnegative(v * v - cl * cl, "quantum_uncertainty radicand"));
}

std::vector<ComplexMatrix> centered_kraus(const DensityMatrix& rho, const KrausChannel& c) {
  require_match(rho, c, "centered_kraus");
  const ComplexMatrix eye = ComplexMatrix::Identity(rho.dim(), rho.dim());
  std::vector<ComplexMatrix> out;
  out.reserve(c.kraus_count());
  for (const ComplexMatrix& k : c.ops()) {
    out.push_back(k - (k * rho.matrix()).trace() * eye);
  }
  return out;
}

double tilde_skew_info(const DensityMatrix& rho, const KrausChannel& c) {
  const ComplexMatrix& s = rho.sqrt_matrix();
  double total = 0.0;
  for (const ComplexMatrix& k : centered_kraus(rho, c)) {
    total += 0.5 * (s * k - k * s).squaredNorm();
  }
  return total;
}

double tilde_dual_info(const DensityMatrix& rho, const KrausChannel& c) {
  const ComplexMatrix& s = rho.sqrt_matrix();
  double total = 0.0;
  for (const ComplexMatrix& k : centered_kraus(rho, c)) {
    total += 0.5 * (s * k + k * s).squaredNorm();
  }
  return total;
}

UncertaintyReport report(const DensityMatrix& rho, const KrausChannel& c) {
  require_match(rho, c, "report");
  UncertaintyReport r;
  r.skew_info = skew_info_channel(rho, c);
  r.dual_info = dual_info_channel(rho, c);
  r.variance = variance_channel(rho, c);
  r.classical = clamp_nonnegative(r.variance - r.skew_info, "classical_uncertainty");
  r.quantum = std::sqrt(clamp_nonnegative(r.variance * r.variance - r.classical * r.classical,
                                          "quantum_uncertainty radicand"));
  r.tilde_skew = tilde_skew_info(rho, c);
  r.tilde_dual = tilde_dual_info(rho, c);
  return r;
}

double commutator_pair_sum(const DensityMatrix& rho, const KrausChannel& a,
                           const KrausChannel& b) {
  require_match(rho, a, "commutator_pair_sum");
  require_match(rho, b, "commutator_pair_sum");
  double total = 0.0;
  for (const ComplexMatrix& l : a.ops()) {
    for (const ComplexMatrix& k : b.ops()) {
      const ComplexMatrix kd = k.adjoint();
      total += std::norm(((l * kd - kd * l) * rho.matrix()).trace());
    }
  }
  return total;
}

BoundCheck lb_product(const DensityMatrix& rho, const KrausChannel& psi,
                      const KrausChannel& phi) {
  const double lhs = quantum_uncertainty(rho, psi) * quantum_uncertainty(rho, phi);
  const double rhs = 0.25 * commutator_pair_sum(rho, psi, phi);
  return make_bound(lhs, rhs);
}

SumBoundForms lb_sum_forms(const DensityMatrix& rho, const KrausChannel& psi,
                           const KrausChannel& phi) {
  require_match(rho, psi, "lb_sum");
  require_match(rho, phi, "lb_sum");
  const ComplexMatrix& s = rho.sqrt_matrix();
  const ComplexMatrix eye = ComplexMatrix::Identity(rho.dim(), rho.dim());
  auto [ls, ks] = padded_pair(psi, phi);
  const std::size_t m = ls.size();

  std::vector<Complex> comm_pair(m), anti_pair(m), comm_pair_c(m), anti_pair_c(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Complex lmean = (ls[i] * rho.matrix()).trace();
    const Complex kmean = (ks[i] * rho.matrix()).trace();
    const ComplexMatrix lc = ls[i] - lmean * eye;
    const ComplexMatrix kc = ks[i] - kmean * eye;

    comm_pair[i] = ((s * ls[i] - ls[i] * s).adjoint() * (s * ks[i] - ks[i] * s)).trace();
    anti_pair[i] = ((s * ls[i] + ls[i] * s).adjoint() * (s * ks[i] + ks[i] * s)).trace() -
                   4.0 * (ls[i].adjoint() * rho.matrix()).trace() * kmean;
    comm_pair_c[i] = ((s * lc - lc * s).adjoint() * (s * kc - kc * s)).trace();
    anti_pair_c[i] = ((s * lc + lc * s).adjoint() * (s * kc + kc * s)).trace();
  }

  SumBoundForms forms;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      forms.closed_form += 0.5 * std::abs(comm_pair[i] * anti_pair[j]);
      forms.centered_form += 0.5 * std::abs(comm_pair_c[i] * anti_pair_c[j]);
    }
  }
  return forms;
}

BoundCheck lb_sum(const DensityMatrix& rho, const KrausChannel& psi, const KrausChannel& phi) {
  const SumBoundForms forms = lb_sum_forms(rho, psi, phi);
  if (std::abs(forms.closed_form - forms.centered_form) >
      hybrid_tol(1e-9, std::abs(forms.closed_form))) {
    throw InternalInconsistency("lb_sum: closed form " + std::to_string(forms.closed_form) +
                                " vs centered form " + std::to_string(forms.centered_form));
  }
  const double qp = quantum_uncertainty(rho, psi);
  const double qf = quantum_uncertainty(rho, phi);
  return make_bound(qp * qp + qf * qf, forms.closed_form);
}

BoundCheck lb_triple(const DensityMatrix& rho, const KrausChannel& psi, const KrausChannel& phi,
                     const KrausChannel& gamma, double tau) {
  if (!(tau > 0.0)) {
    throw ParameterOutOfRange("lb_triple: tau = " + std::to_string(tau));
  }
  const double lhs = quantum_uncertainty(rho, psi) * quantum_uncertainty(rho, phi) *
                     quantum_uncertainty(rho, gamma);
  const double s1 = commutator_pair_sum(rho, psi, phi);
  const double s2 = commutator_pair_sum(rho, psi, gamma);
  const double s3 = commutator_pair_sum(rho, gamma, phi);
  const double rhs = tau / 8.0 * std::sqrt(s1 * s2 * s3);
  return make_bound(lhs, rhs);
}

BoundCheck pauli_tight_bound(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw DimensionMismatch("pauli_tight_bound: state dim " + std::to_string(rho.dim()) +
                            ", need a qubit");
  }
  static const std::array<KrausChannel, 3> paulis = pauli_unitary_channels();
  double lhs = 1.0;
  double traces = 1.0;
  for (const KrausChannel& ch : paulis) {
    lhs *= quantum_uncertainty(rho, ch);
    traces *= (ch.op(0) * rho.matrix()).trace().real();
  }
  const double rhs = 8.0 / (3.0 * std::sqrt(3.0)) * std::abs(traces);
  return make_bound(lhs, rhs);
}

}  // namespace wychan
