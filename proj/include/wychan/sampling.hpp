#pragma once

#include <cstdint>
#include <vector>

#include "wychan/channel.hpp"
#include "wychan/rng.hpp"

namespace wychan {

/// Parameters for one sampling campaign.
struct SampleConfig {
  int dimension = 2;
  int kraus_count = 2;
  int rank = 2;  ///< state rank, <= dimension
  int trials = 1;
  std::uint64_t seed = 0;
};

/// Ginibre state: rho = G G^dagger / tr(G G^dagger) with G a d x rank matrix
/// of independent standard complex Gaussians.
DensityMatrix random_density(int dim, int rank, RandomStream& rs);
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);

/// Haar unitary: QR of a complex Ginibre matrix with the R-diagonal phases
/// folded into Q (the phase-fixed convention).
ComplexMatrix random_unitary(int n, RandomStream& rs);
ComplexMatrix random_unitary(int n, std::uint64_t seed);

/// Haar-isometry channel: an (n d) x d matrix with orthonormal columns,
/// sliced into n square blocks. Trace preservation holds by construction.
KrausChannel random_channel(int dim, int n, RandomStream& rs);
KrausChannel random_channel(int dim, int n, std::uint64_t seed);

/// Convex mixture of n Haar unitaries, K_i = sqrt(p_i) U_i with p drawn from
/// the simplex. Unital by construction.
KrausChannel random_unital_channel(int dim, int n, RandomStream& rs);

/// n nonnegative weights summing to 1 (normalized exponentials).
std::vector<double> random_simplex(int n, RandomStream& rs);

/// Uniform direction on the unit sphere.
BlochVector random_unit_direction(RandomStream& rs);

/// Uniform point in the closed unit ball, radius bounded away from zero.
BlochVector random_bloch_ball(RandomStream& rs);

}  // namespace wychan
