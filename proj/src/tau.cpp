#include "wychan/tau.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wychan {

namespace {

constexpr double kFeasibleDenominator = 1e-12;

double triple_lhs(const DensityMatrix& rho, const KrausChannel& psi, const KrausChannel& phi,
                  const KrausChannel& gamma) {
  return quantum_uncertainty(rho, psi) * quantum_uncertainty(rho, phi) *
         quantum_uncertainty(rho, gamma);
}

double triple_denominator(const DensityMatrix& rho, const KrausChannel& psi,
                          const KrausChannel& phi, const KrausChannel& gamma) {
  const double s1 = commutator_pair_sum(rho, psi, phi);
  const double s2 = commutator_pair_sum(rho, psi, gamma);
  const double s3 = commutator_pair_sum(rho, gamma, phi);
  return std::sqrt(s1 * s2 * s3) / 8.0;
}

std::string describe_bloch(const BlochVector& r) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "bloch(%.12g, %.12g, %.12g)", r.x, r.y, r.z);
  return buf;
}

}  // namespace

BlochGrid BlochGrid::for_total(long requested) {
  BlochGrid g;
  g.shells = 10;
  long per_shell = (requested + g.shells - 1) / g.shells;
  if (per_shell < 4) {
    per_shell = 4;
  }
  const int ang = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(per_shell))));
  g.thetas = std::max(2, ang);
  g.phis = std::max(2, ang);
  return g;
}

BlochVector BlochGrid::point(long index) const {
  const long per_shell = static_cast<long>(thetas) * phis;
  const long shell = index / per_shell;
  const long rem = index % per_shell;
  const long ti = rem / phis;
  const long pi_idx = rem % phis;
  const double radius = static_cast<double>(shell + 1) / shells;
  const double theta =
      thetas > 1 ? static_cast<double>(ti) * std::numbers::pi / (thetas - 1) : 0.0;
  const double phi = static_cast<double>(pi_idx) * 2.0 * std::numbers::pi / phis;
  const double st = std::sin(theta);
  return BlochVector{radius * st * std::cos(phi), radius * st * std::sin(phi),
                     radius * std::cos(theta)};
}

TauEstimate estimate_tau(const KrausChannel& psi, const KrausChannel& phi,
                         const KrausChannel& gamma, const TauConfig& cfg, Execution exec) {
  if (psi.dim() != phi.dim() || psi.dim() != gamma.dim()) {
    throw DimensionMismatch("estimate_tau: channel dimensions differ");
  }
  if (cfg.samples < 1) {
    throw ParameterOutOfRange("estimate_tau: samples " + std::to_string(cfg.samples));
  }
  const int dim = psi.dim();
  const bool qubit = dim == 2;
  const BlochGrid grid = qubit ? BlochGrid::for_total(cfg.samples) : BlochGrid{};
  const long total = qubit ? grid.total() : cfg.samples;

  // One ratio per sample; infeasible samples (vanishing denominator) are
  // marked +inf and skipped by the argmin.
  std::vector<double> ratios(static_cast<std::size_t>(total),
                             std::numeric_limits<double>::infinity());
  bool failed = false;

  auto evaluate = [&](long i) {
    const DensityMatrix rho = qubit
                                  ? DensityMatrix::from_bloch(grid.point(i))
                                  : random_density(dim, dim, derive_seed(cfg.seed, i));
    const double den = triple_denominator(rho, psi, phi, gamma);
    if (den > kFeasibleDenominator) {
      ratios[static_cast<std::size_t>(i)] = triple_lhs(rho, psi, phi, gamma) / den;
    }
  };

  if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256)
#endif
    for (long i = 0; i < total; ++i) {
      try {
        evaluate(i);
      } catch (...) {
        failed = true;
      }
    }
  } else {
    for (long i = 0; i < total; ++i) {
      evaluate(i);
    }
  }
  if (failed) {
    for (long i = 0; i < total; ++i) {
      evaluate(i);  // serial replay surfaces the typed error deterministically
    }
  }

  long best = -1;
  long feasible = 0;
  for (long i = 0; i < total; ++i) {
    const double r = ratios[static_cast<std::size_t>(i)];
    if (std::isfinite(r)) {
      ++feasible;
      if (best < 0 || r < ratios[static_cast<std::size_t>(best)]) {
        best = i;
      }
    }
  }
  if (best < 0) {
    throw NoFeasibleSample("estimate_tau: denominator identically zero across all sampled states");
  }

  const DensityMatrix minimizer = qubit
                                      ? DensityMatrix::from_bloch(grid.point(best))
                                      : random_density(dim, dim, derive_seed(cfg.seed, best));
  TauEstimate est;
  est.tau = 8.0 * ratios[static_cast<std::size_t>(best)];
  est.min_lhs = triple_lhs(minimizer, psi, phi, gamma);
  est.min_denominator = triple_denominator(minimizer, psi, phi, gamma);
  est.samples = total;
  est.feasible = feasible;
  est.minimizer = qubit ? describe_bloch(grid.point(best))
                        : "ginibre(seed=" + std::to_string(cfg.seed) + ", index=" +
                              std::to_string(best) + ")";
  return est;
}

GridScanResult pauli_bound_scan(long requested, Execution exec) {
  if (requested < 1) {
    throw ParameterOutOfRange("pauli_bound_scan: requested " + std::to_string(requested));
  }
  const BlochGrid grid = BlochGrid::for_total(requested);
  const long total = grid.total();
  std::vector<double> slacks(static_cast<std::size_t>(total), 0.0);

  if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256)
#endif
    for (long i = 0; i < total; ++i) {
      slacks[static_cast<std::size_t>(i)] =
          pauli_tight_bound(DensityMatrix::from_bloch(grid.point(i))).slack;
    }
  } else {
    for (long i = 0; i < total; ++i) {
      slacks[static_cast<std::size_t>(i)] =
          pauli_tight_bound(DensityMatrix::from_bloch(grid.point(i))).slack;
    }
  }

  long worst = 0;
  for (long i = 1; i < total; ++i) {
    if (slacks[static_cast<std::size_t>(i)] < slacks[static_cast<std::size_t>(worst)]) {
      worst = i;
    }
  }
  GridScanResult res;
  res.points = total;
  res.worst_slack = slacks[static_cast<std::size_t>(worst)];
  res.worst_point = grid.point(worst);
  return res;
}

}  // namespace wychan
