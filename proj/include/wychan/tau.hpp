#pragma once

#include <cstdint>
#include <string>

#include "wychan/campaign.hpp"
#include "wychan/uncertainty.hpp"

namespace wychan {

/// Deterministic Bloch-ball grid: radial shells k/shells (k = 1..shells,
/// the outermost exactly on the sphere) times an inclusive polar grid and a
/// periodic azimuthal grid.
struct BlochGrid {
  int shells = 10;
  int thetas = 100;
  int phis = 100;

  static BlochGrid for_total(long requested);
  long total() const { return static_cast<long>(shells) * thetas * phis; }
  BlochVector point(long index) const;
};

struct TauConfig {
  long samples = 100000;
  std::uint64_t seed = 0;  ///< used only for dim > 2 (Ginibre sampling)
};

struct TauEstimate {
  double tau = 0.0;        ///< 8 * min over sampled states of lhs/denominator
  double min_lhs = 0.0;    ///< Q(psi) Q(phi) Q(gamma) at the minimizer
  double min_denominator = 0.0;
  long samples = 0;
  long feasible = 0;       ///< samples with denominator > 1e-12
  std::string minimizer;   ///< human-readable description of the minimizing state
};

/// Numerical estimate of the tightening constant for the three-channel
/// product bound: minimizes lhs/denominator over sampled states, where the
/// denominator is the tau = 1 right-hand side (1/8) sqrt of the product of
/// the three pairwise commutator double sums, and scales by 8. Qubit
/// channels are scanned over a Bloch grid; larger dimensions use seeded
/// Ginibre states. Throws NoFeasibleSample when the denominator vanishes on
/// every sampled state.
TauEstimate estimate_tau(const KrausChannel& psi, const KrausChannel& phi,
                         const KrausChannel& gamma, const TauConfig& cfg,
                         Execution exec = Execution::parallel);

struct GridScanResult {
  long points = 0;
  double worst_slack = 0.0;
  BlochVector worst_point;
};

/// Evaluate pauli_tight_bound on every point of a Bloch grid of at least
/// `requested` points and report the minimum slack.
GridScanResult pauli_bound_scan(long requested, Execution exec = Execution::parallel);

}  // namespace wychan
