#include "wychan/channel.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

namespace wychan {

namespace {

std::string format_q(double q) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", q);
  return buf;
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops, std::string name)
    : ops_(std::move(ops)), name_(std::move(name)) {
  if (ops_.empty()) {
    throw ParameterOutOfRange("channel needs at least one Kraus operator");
  }
  const Eigen::Index d = ops_.front().rows();
  for (const ComplexMatrix& k : ops_) {
    if (k.rows() != k.cols() || k.rows() != d) {
      throw DimensionMismatch("Kraus operators must all be square with equal dimension");
    }
    if (!all_finite(k)) {
      throw ParameterOutOfRange("Kraus operator contains non-finite entries");
    }
  }
  dim_ = static_cast<int>(d);

  ComplexMatrix completeness = ComplexMatrix::Zero(d, d);
  ComplexMatrix dual = ComplexMatrix::Zero(d, d);
  for (const ComplexMatrix& k : ops_) {
    completeness += k.adjoint() * k;
    dual += k * k.adjoint();
  }
  const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
  const double residual = (completeness - eye).norm();
  if (residual > 1e-8) {
    throw NotTracePreserving(name_ + ": completeness residual " + std::to_string(residual));
  }
  unital_ = (dual - eye).norm() <= 1e-8;
  unitary_ = ops_.size() == 1 && (ops_[0].adjoint() * ops_[0] - eye).norm() <= 1e-9;
}

KrausChannel amplitude_damping(double q) {
  if (!(q >= 0.0 && q < 1.0)) {
    throw ParameterOutOfRange("amplitude_damping: q = " + std::to_string(q) +
                              " outside [0, 1)");
  }
  ComplexMatrix l1 = ComplexMatrix::Zero(2, 2);
  l1(0, 0) = 1.0;
  l1(1, 1) = std::sqrt(1.0 - q);
  ComplexMatrix l2 = ComplexMatrix::Zero(2, 2);
  l2(0, 1) = std::sqrt(q);
  return KrausChannel({l1, l2}, "amplitude_damping(q=" + format_q(q) + ")");
}

KrausChannel bit_flip(double q) {
  if (!(q >= 0.0 && q < 1.0)) {
    throw ParameterOutOfRange("bit_flip: q = " + std::to_string(q) + " outside [0, 1)");
  }
  ComplexMatrix k1 = std::sqrt(q) * ComplexMatrix::Identity(2, 2);
  ComplexMatrix k2 = std::sqrt(1.0 - q) * pauli_x();
  return KrausChannel({k1, k2}, "bit_flip(q=" + format_q(q) + ")");
}

KrausChannel unitary_channel(const ComplexMatrix& u, std::string name) {
  if (u.rows() != u.cols() || u.rows() == 0) {
    throw DimensionMismatch("unitary_channel: operator must be square");
  }
  const double residual = (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.rows())).norm();
  if (residual > 1e-9) {
    throw NotUnitary("unitary_channel: ||u^+u - I||_F = " + std::to_string(residual));
  }
  return KrausChannel({u}, std::move(name));
}

std::array<KrausChannel, 3> pauli_unitary_channels() {
  return {unitary_channel(pauli_x(), "pauli-x"), unitary_channel(pauli_y(), "pauli-y"),
          unitary_channel(pauli_z(), "pauli-z")};
}

KrausChannel mix_kraus(const KrausChannel& c, const ComplexMatrix& u) {
  if (u.rows() != u.cols()) {
    throw DimensionMismatch("mix_kraus: mixing matrix must be square");
  }
  const std::size_t m = static_cast<std::size_t>(u.rows());
  if (m < c.kraus_count()) {
    throw DimensionMismatch("mix_kraus: mixing matrix smaller than the Kraus count");
  }
  const double residual = (u.adjoint() * u - ComplexMatrix::Identity(m, m)).norm();
  if (residual > 1e-9) {
    throw NotUnitary("mix_kraus: ||u^+u - I||_F = " + std::to_string(residual));
  }

  std::vector<ComplexMatrix> padded = c.ops();
  padded.resize(m, ComplexMatrix::Zero(c.dim(), c.dim()));
  std::vector<ComplexMatrix> mixed(m, ComplexMatrix::Zero(c.dim(), c.dim()));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      mixed[i] += u(i, j) * padded[j];
    }
  }
  return KrausChannel(std::move(mixed), c.name() + "|mixed");
}

DensityMatrix apply_channel(const KrausChannel& c, const DensityMatrix& rho) {
  if (c.dim() != rho.dim()) {
    throw DimensionMismatch("apply_channel: channel dim " + std::to_string(c.dim()) +
                            " vs state dim " + std::to_string(rho.dim()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const ComplexMatrix& k : c.ops()) {
    out += k * rho.matrix() * k.adjoint();
  }
  return DensityMatrix::from_matrix(out);
}

KrausChannel extend_channel(const KrausChannel& c, int dim_b) {
  if (dim_b < 1) {
    throw ParameterOutOfRange("extend_channel: factor dimension " + std::to_string(dim_b));
  }
  const ComplexMatrix eye = ComplexMatrix::Identity(dim_b, dim_b);
  std::vector<ComplexMatrix> ops;
  ops.reserve(c.kraus_count());
  for (const ComplexMatrix& k : c.ops()) {
    ops.push_back(tensor_product(k, eye));
  }
  return KrausChannel(std::move(ops), c.name() + "*id" + std::to_string(dim_b));
}

}  // namespace wychan
