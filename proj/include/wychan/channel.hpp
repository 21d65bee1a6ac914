#pragma once

#include <array>
#include <string>
#include <vector>

#include "wychan/state.hpp"

namespace wychan {

/// Completely positive trace-preserving map in Kraus form, Phi(rho) =
/// sum_i K_i rho K_i^dagger with sum_i K_i^dagger K_i = I. The operator
/// list order is part of the value: some bounds pair operators positionally.
class KrausChannel {
 public:
  /// Validates squareness, equal dimensions and trace preservation
  /// (completeness residual <= 1e-8 in Frobenius norm).
  explicit KrausChannel(std::vector<ComplexMatrix> ops, std::string name = "channel");

  int dim() const { return dim_; }
  std::size_t kraus_count() const { return ops_.size(); }
  const ComplexMatrix& op(std::size_t i) const { return ops_[i]; }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  const std::string& name() const { return name_; }

  /// sum_i K_i K_i^dagger = I as well (fixes the maximally mixed state).
  bool unital() const { return unital_; }

  /// Exactly one Kraus operator and it is unitary.
  bool unitary() const { return unitary_; }

 private:
  int dim_;
  std::vector<ComplexMatrix> ops_;
  std::string name_;
  bool unital_;
  bool unitary_;
};

/// Kraus operators [[1,0],[0,sqrt(1-q)]] and [[0,sqrt(q)],[0,0]], 0 <= q < 1.
KrausChannel amplitude_damping(double q);

/// Kraus operators sqrt(q) I and sqrt(1-q) sigma_x, 0 <= q < 1. Unital.
KrausChannel bit_flip(double q);

/// Single-Kraus channel rho -> u rho u^dagger. Throws NotUnitary if
/// ||u^dagger u - I||_F > 1e-9.
KrausChannel unitary_channel(const ComplexMatrix& u, std::string name = "unitary");

/// The unitary channels of sigma_x, sigma_y, sigma_z, in that order.
std::array<KrausChannel, 3> pauli_unitary_channels();

/// Replace the Kraus list by K'_i = sum_j u(i,j) K_j with u unitary. When u
/// is larger than the Kraus count, the list is zero-padded first. The result
/// represents the same completely positive map.
KrausChannel mix_kraus(const KrausChannel& c, const ComplexMatrix& u);

/// sum_i K_i rho K_i^dagger, revalidated as a density matrix (eigenvalue
/// clamping and trace renormalization absorb float drift).
DensityMatrix apply_channel(const KrausChannel& c, const DensityMatrix& rho);

/// Tensor-extend by an identity factor: Kraus operators K_i (x) I_{dim_b},
/// acting as Phi (x) Id on the composite system.
KrausChannel extend_channel(const KrausChannel& c, int dim_b);

}  // namespace wychan
