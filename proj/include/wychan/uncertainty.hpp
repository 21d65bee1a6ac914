#pragma once

#include <vector>

#include "wychan/channel.hpp"

namespace wychan {

/// All scalar uncertainty measures of one (state, channel) pair.
///
///   skew_info  I = (1/2) sum_i ||[sqrt(rho), K_i]||_F^2
///   dual_info  J = (1/2) sum_i ||{sqrt(rho), K_i}||_F^2
///   variance   V = sum_i ( (1/2) tr[(K_i^+ K_i + K_i K_i^+) rho] - |tr(K_i rho)|^2 )
///   classical  C = V - I
///   quantum    Q = sqrt(V^2 - C^2) = sqrt(tilde_I * tilde_J)
///
/// tilde_I and tilde_J are the same half-sums evaluated on the centered
/// operators K_i - tr(K_i rho) I; tilde_I = I (shift invariance) and
/// tilde_J = 2V - I hold identically.
struct UncertaintyReport {
  double skew_info = 0.0;
  double dual_info = 0.0;
  double variance = 0.0;
  double classical = 0.0;
  double quantum = 0.0;
  double tilde_skew = 0.0;
  double tilde_dual = 0.0;
};

/// One inequality instance. satisfied <=> slack >= -tolerance.
struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  ///< lhs - rhs
  double tolerance = 0.0;
  bool satisfied = false;
};

inline constexpr double kBoundTolerance = 1e-10;

BoundCheck make_bound(double lhs, double rhs, double tolerance = kBoundTolerance);

double skew_info_op(const DensityMatrix& rho, const ComplexMatrix& k);
double dual_info_op(const DensityMatrix& rho, const ComplexMatrix& k);
double skew_info_channel(const DensityMatrix& rho, const KrausChannel& c);
double dual_info_channel(const DensityMatrix& rho, const KrausChannel& c);
double variance_op(const DensityMatrix& rho, const ComplexMatrix& k);
double variance_channel(const DensityMatrix& rho, const KrausChannel& c);
double classical_uncertainty(const DensityMatrix& rho, const KrausChannel& c);
double quantum_uncertainty(const DensityMatrix& rho, const KrausChannel& c);

/// K_i - tr(K_i rho) I for each operator; tr(K~_i rho) = 0 afterwards.
std::vector<ComplexMatrix> centered_kraus(const DensityMatrix& rho, const KrausChannel& c);

double tilde_skew_info(const DensityMatrix& rho, const KrausChannel& c);
double tilde_dual_info(const DensityMatrix& rho, const KrausChannel& c);

UncertaintyReport report(const DensityMatrix& rho, const KrausChannel& c);

/// sum_{ij} |tr([A_i, B_j^dagger] rho)|^2 over the two full Kraus lists.
double commutator_pair_sum(const DensityMatrix& rho, const KrausChannel& a,
                           const KrausChannel& b);

/// Product-form bound: Q(psi) Q(phi) >= (1/4) sum_{ij} |tr([L_i, K_j^+] rho)|^2.
BoundCheck lb_product(const DensityMatrix& rho, const KrausChannel& psi,
                      const KrausChannel& phi);

/// The summation-form right-hand side evaluated two algebraically equal ways.
/// closed_form: (1/2) sum_{ij} | <[S,L_i]|[S,K_i]> ( <{S,L_j}|{S,K_j}> - 4 <L_j^+><K_j> ) |
/// centered_form: the same with every operator replaced by its centered
/// version and no correction term. The pairing is positional; when the Kraus
/// counts differ, the shorter list is zero-padded.
struct SumBoundForms {
  double closed_form = 0.0;
  double centered_form = 0.0;
};

SumBoundForms lb_sum_forms(const DensityMatrix& rho, const KrausChannel& psi,
                           const KrausChannel& phi);

/// Summation-form bound: Q^2(psi) + Q^2(phi) >= closed_form. The two forms are
/// cross-checked; disagreement beyond 1e-9 throws InternalInconsistency.
BoundCheck lb_sum(const DensityMatrix& rho, const KrausChannel& psi, const KrausChannel& phi);

/// Three-channel bound: Q(psi) Q(phi) Q(gamma) >=
/// (tau/8) sqrt( S(psi,phi) S(psi,gamma) S(gamma,phi) ) with S the pairwise
/// commutator double sums. tau = 1 is the plain geometric-mean bound.
BoundCheck lb_triple(const DensityMatrix& rho, const KrausChannel& psi,
                     const KrausChannel& phi, const KrausChannel& gamma, double tau = 1.0);

/// Tightened qubit bound for the three Pauli unitary channels:
/// Q(sx) Q(sy) Q(sz) >= (8/(3 sqrt 3)) |r_x r_y r_z|, with equality on
/// |r_x|=|r_y|=|r_z|=1/sqrt(3) and on the |r_a|=1 axes. Requires dim 2.
BoundCheck pauli_tight_bound(const DensityMatrix& rho);

inline constexpr double kClampFloor = -1e-12;

/// Clamp policy for provably nonnegative quantities: values in
/// [kClampFloor, 0) are float noise and become 0; anything lower throws
/// InternalInconsistency (an implementation bug, not noise).
double clamp_nonnegative(double value, const char* what);

}  // namespace wychan
