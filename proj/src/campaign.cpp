#include "wychan/campaign.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "wychan/uncertainty.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wychan {

namespace {

double abs_dev(double a, double b) {
  return std::abs(a - b);
}

/// Closed-form qubit skew information for rho = (I + r.sigma)/2 and operator
/// n.sigma: (|r|^2 - (r.n)^2) / (1 + sqrt(1 - |r|^2)). Analytic counterpart
/// of the eigendecomposition path.
double qubit_skew_closed_form(const BlochVector& r, const BlochVector& n) {
  const double r2 = r.x * r.x + r.y * r.y + r.z * r.z;
  const double dot = r.x * n.x + r.y * n.y + r.z * n.z;
  return (r2 - dot * dot) / (1.0 + std::sqrt(std::max(0.0, 1.0 - r2)));
}

ComplexMatrix direction_operator(const BlochVector& n) {
  return n.x * pauli_x() + n.y * pauli_y() + n.z * pauli_z();
}

// --- trial bodies -----------------------------------------------------------
//
// Every body draws all of its objects from the per-trial stream, so trials
// are independent and replayable from the derived seed alone. Inequality
// slacks are lhs - rhs; equality slacks are -|deviation|.

double trial_theorem1(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho = random_density(cfg.dimension, cfg.rank, rs);
  const KrausChannel psi = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const KrausChannel phi = random_channel(cfg.dimension, cfg.kraus_count, rs);
  return lb_product(rho, psi, phi).slack;
}

double trial_theorem2(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho = random_density(cfg.dimension, cfg.rank, rs);
  const KrausChannel psi = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const KrausChannel phi = random_channel(cfg.dimension, cfg.kraus_count, rs);
  return lb_sum(rho, psi, phi).slack;
}

double trial_triple(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho = random_density(cfg.dimension, cfg.rank, rs);
  const KrausChannel psi = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const KrausChannel phi = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const KrausChannel gamma = random_channel(cfg.dimension, cfg.kraus_count, rs);
  return lb_triple(rho, psi, phi, gamma, 1.0).slack;
}

double trial_unital_complementarity(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho = random_density(cfg.dimension, cfg.rank, rs);
  const KrausChannel c = random_unital_channel(cfg.dimension, cfg.kraus_count, rs);
  const double i = skew_info_channel(rho, c);
  const double j = dual_info_channel(rho, c);
  double slack = -abs_dev(i + j, 2.0);
  slack = std::min(slack, i);        // 0 <= I
  slack = std::min(slack, 1.0 - i);  // I <= 1
  slack = std::min(slack, j - 1.0);  // 1 <= J
  slack = std::min(slack, 2.0 - j);  // J <= 2
  return slack;
}

double trial_kraus_invariance(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho = random_density(cfg.dimension, cfg.rank, rs);
  const KrausChannel c = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const ComplexMatrix u = random_unitary(static_cast<int>(c.kraus_count()), rs);
  const UncertaintyReport a = report(rho, c);
  const UncertaintyReport b = report(rho, mix_kraus(c, u));
  double dev = abs_dev(a.skew_info, b.skew_info);
  dev = std::max(dev, abs_dev(a.dual_info, b.dual_info));
  dev = std::max(dev, abs_dev(a.variance, b.variance));
  dev = std::max(dev, abs_dev(a.classical, b.classical));
  dev = std::max(dev, abs_dev(a.quantum, b.quantum));
  return -dev;
}

// Conjugate the whole state-channel pair by a unitary: rho -> U rho U^+ and
// K_i -> U K_i U^+ (the channel acting in the rotated frame).
double trial_unitary_covariance(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho = random_density(cfg.dimension, cfg.rank, rs);
  const KrausChannel c = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const ComplexMatrix u = random_unitary(cfg.dimension, rs);
  std::vector<ComplexMatrix> rotated;
  rotated.reserve(c.kraus_count());
  for (const ComplexMatrix& k : c.ops()) {
    rotated.push_back(u * k * u.adjoint());
  }
  const DensityMatrix rho_u =
      DensityMatrix::from_matrix(u * rho.matrix() * u.adjoint());
  const KrausChannel c_u(std::move(rotated), c.name() + "|rotated");
  return -abs_dev(skew_info_channel(rho_u, c_u), skew_info_channel(rho, c));
}

double trial_convexity_skew(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho1 = random_density(cfg.dimension, cfg.rank, rs);
  const DensityMatrix rho2 = random_density(cfg.dimension, cfg.rank, rs);
  const KrausChannel c = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const double lambda = rs.uniform();
  const DensityMatrix mix = DensityMatrix::from_matrix(lambda * rho1.matrix() +
                                                       (1.0 - lambda) * rho2.matrix());
  return lambda * skew_info_channel(rho1, c) + (1.0 - lambda) * skew_info_channel(rho2, c) -
         skew_info_channel(mix, c);
}

double trial_concavity_variance(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho1 = random_density(cfg.dimension, cfg.rank, rs);
  const DensityMatrix rho2 = random_density(cfg.dimension, cfg.rank, rs);
  const KrausChannel c = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const double lambda = rs.uniform();
  const DensityMatrix mix = DensityMatrix::from_matrix(lambda * rho1.matrix() +
                                                       (1.0 - lambda) * rho2.matrix());
  return variance_channel(mix, c) - lambda * variance_channel(rho1, c) -
         (1.0 - lambda) * variance_channel(rho2, c);
}

double trial_concavity_classical(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho1 = random_density(cfg.dimension, cfg.rank, rs);
  const DensityMatrix rho2 = random_density(cfg.dimension, cfg.rank, rs);
  const KrausChannel c = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const double lambda = rs.uniform();
  const DensityMatrix mix = DensityMatrix::from_matrix(lambda * rho1.matrix() +
                                                       (1.0 - lambda) * rho2.matrix());
  return classical_uncertainty(mix, c) - lambda * classical_uncertainty(rho1, c) -
         (1.0 - lambda) * classical_uncertainty(rho2, c);
}

double trial_nonnegativity(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho = random_density(cfg.dimension, cfg.rank, rs);
  const KrausChannel c = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const UncertaintyReport r = report(rho, c);
  double slack = r.skew_info;
  slack = std::min(slack, r.dual_info);
  slack = std::min(slack, r.variance);
  slack = std::min(slack, r.classical);
  slack = std::min(slack, r.quantum);
  slack = std::min(slack, r.tilde_skew);
  slack = std::min(slack, r.tilde_dual);
  return slack;
}

double trial_sandwich(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho = random_density(cfg.dimension, cfg.rank, rs);
  const KrausChannel c = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const UncertaintyReport r = report(rho, c);
  return std::min(r.quantum - r.skew_info,
                  (2.0 * r.variance - r.skew_info) - r.quantum);
}

double trial_tensor_equality(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho_a = random_density(cfg.dimension, cfg.rank, rs);
  const DensityMatrix rho_b = random_density(2, 2, rs);
  const KrausChannel c = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const DensityMatrix joint =
      DensityMatrix::from_matrix(tensor_product(rho_a.matrix(), rho_b.matrix()));
  return -abs_dev(skew_info_channel(joint, extend_channel(c, 2)), skew_info_channel(rho_a, c));
}

double trial_partial_trace(const SampleConfig& cfg, RandomStream& rs) {
  const int db = 2;
  const int joint_dim = cfg.dimension * db;
  const int joint_rank = std::min(2 * cfg.rank, joint_dim);
  const DensityMatrix joint = random_density(joint_dim, joint_rank, rs);
  const KrausChannel c = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const DensityMatrix reduced =
      DensityMatrix::from_matrix(partial_trace_second(joint.matrix(), db));
  return skew_info_channel(joint, extend_channel(c, db)) - skew_info_channel(reduced, c);
}

double trial_identities(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho = random_density(cfg.dimension, cfg.rank, rs);
  const KrausChannel phi = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const KrausChannel psi = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const UncertaintyReport r = report(rho, phi);
  const SumBoundForms forms = lb_sum_forms(rho, psi, phi);
  double dev = abs_dev(r.tilde_skew, r.skew_info);
  dev = std::max(dev, abs_dev(r.tilde_dual, 2.0 * r.variance - r.skew_info));
  dev = std::max(dev, abs_dev(r.quantum * r.quantum, r.tilde_skew * r.tilde_dual));
  dev = std::max(dev, abs_dev(forms.closed_form, forms.centered_form));
  return -dev;
}

double trial_qubit_closed_form(const SampleConfig& /*cfg*/, RandomStream& rs) {
  const BlochVector r = random_bloch_ball(rs);
  const BlochVector n = random_unit_direction(rs);
  const DensityMatrix rho = DensityMatrix::from_bloch(r);
  return -abs_dev(skew_info_op(rho, direction_operator(n)), qubit_skew_closed_form(r, n));
}

double trial_pure_state(const SampleConfig& cfg, RandomStream& rs) {
  const DensityMatrix rho = random_density(cfg.dimension, 1, rs);
  const KrausChannel c = random_channel(cfg.dimension, cfg.kraus_count, rs);
  const UncertaintyReport r = report(rho, c);
  double dev = std::abs(r.classical);
  dev = std::max(dev, abs_dev(r.quantum, r.variance));
  dev = std::max(dev, abs_dev(r.variance, r.skew_info));
  return -dev;
}

struct PropertyDef {
  const char* name;
  double tolerance;
  double (*fn)(const SampleConfig&, RandomStream&);
};

constexpr PropertyDef kProperties[] = {
    {"theorem1", 1e-10, trial_theorem1},
    {"theorem2", 1e-10, trial_theorem2},
    {"triple-tau1", 1e-10, trial_triple},
    {"unital-complementarity", 1e-10, trial_unital_complementarity},
    {"kraus-invariance", 1e-10, trial_kraus_invariance},
    {"unitary-covariance", 1e-10, trial_unitary_covariance},
    {"convexity-I", 1e-10, trial_convexity_skew},
    {"concavity-V", 1e-10, trial_concavity_variance},
    {"concavity-C", 1e-10, trial_concavity_classical},
    {"nonnegativity", 1e-10, trial_nonnegativity},
    {"sandwich", 1e-10, trial_sandwich},
    {"tensor-equality", 1e-10, trial_tensor_equality},
    {"partial-trace", 1e-10, trial_partial_trace},
    {"identities", 1e-10, trial_identities},
    {"qubit-closed-form", 1e-10, trial_qubit_closed_form},
    {"pure-state", 1e-10, trial_pure_state},
};

const PropertyDef& find_property(const std::string& name) {
  for (const PropertyDef& p : kProperties) {
    if (name == p.name) {
      return p;
    }
  }
  throw UnknownProperty("unknown property '" + name + "'");
}

void validate_config(const SampleConfig& cfg) {
  if (cfg.dimension < 1 || cfg.kraus_count < 1 || cfg.rank < 1 || cfg.rank > cfg.dimension ||
      cfg.trials < 1) {
    throw ParameterOutOfRange("sample config: dim " + std::to_string(cfg.dimension) +
                              ", kraus " + std::to_string(cfg.kraus_count) + ", rank " +
                              std::to_string(cfg.rank) + ", trials " +
                              std::to_string(cfg.trials));
  }
}

}  // namespace

const std::vector<std::string>& campaign_properties() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const PropertyDef& p : kProperties) {
      v.emplace_back(p.name);
    }
    return v;
  }();
  return names;
}

double campaign_tolerance(const std::string& property) {
  return find_property(property).tolerance;
}

double campaign_trial(const std::string& property, const SampleConfig& cfg,
                      std::uint64_t trial_index) {
  validate_config(cfg);
  const PropertyDef& def = find_property(property);
  RandomStream rs = RandomStream::for_trial(cfg.seed, trial_index);
  return def.fn(cfg, rs);
}

double campaign_replay(const std::string& property, const SampleConfig& cfg,
                       std::uint64_t trial_seed) {
  validate_config(cfg);
  const PropertyDef& def = find_property(property);
  RandomStream rs(trial_seed);
  return def.fn(cfg, rs);
}

CampaignReport run_campaign(const std::string& property, const SampleConfig& cfg,
                            Execution exec) {
  validate_config(cfg);
  const PropertyDef& def = find_property(property);
  const int trials = cfg.trials;
  std::vector<double> slacks(static_cast<std::size_t>(trials), 0.0);
  bool failed = false;

  if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int i = 0; i < trials; ++i) {
      try {
        RandomStream rs = RandomStream::for_trial(cfg.seed, static_cast<std::uint64_t>(i));
        slacks[static_cast<std::size_t>(i)] = def.fn(cfg, rs);
      } catch (...) {
        failed = true;  // replayed serially below to surface the typed error
      }
    }
  } else {
    for (int i = 0; i < trials; ++i) {
      RandomStream rs = RandomStream::for_trial(cfg.seed, static_cast<std::uint64_t>(i));
      slacks[static_cast<std::size_t>(i)] = def.fn(cfg, rs);
    }
  }

  if (failed) {
    for (int i = 0; i < trials; ++i) {
      RandomStream rs = RandomStream::for_trial(cfg.seed, static_cast<std::uint64_t>(i));
      slacks[static_cast<std::size_t>(i)] = def.fn(cfg, rs);
    }
  }

  CampaignReport rep;
  rep.property = property;
  rep.trials_run = trials;
  rep.tolerance = def.tolerance;
  rep.worst_slack = slacks[0];
  for (int i = 0; i < trials; ++i) {
    const double s = slacks[static_cast<std::size_t>(i)];
    rep.worst_slack = std::min(rep.worst_slack, s);
    if (s < -def.tolerance) {
      rep.violations.push_back(
          Violation{i, derive_seed(cfg.seed, static_cast<std::uint64_t>(i)), s});
    }
  }
  return rep;
}

}  // namespace wychan
