// Command-line front end: uncertainty reports, bound verification, sweep CSVs,
// sampling campaigns and tau estimation over problem files.

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wychan/campaign.hpp"
#include "wychan/problem.hpp"
#include "wychan/sweep.hpp"
#include "wychan/tau.hpp"
#include "wychan/uncertainty.hpp"

namespace {

using namespace wychan;

// Exit codes (also documented in the README):
//   0 success / all PASS        5 dimension error
//   2 parse error               6 sweep parameter inapplicable
//   3 validation error          7 unknown property
//   4 relation/channel arity    8 degenerate denominator
enum ExitCode {
  kOk = 0,
  kFail = 1,
  kParse = 2,
  kValidation = 3,
  kArity = 4,
  kDimension = 5,
  kSweep = 6,
  kUnknownProperty = 7,
  kDegenerate = 8,
};

std::string pass_fail(bool ok) {
  return ok ? "PASS" : "FAIL";
}

void print_bound(const std::string& label, const BoundCheck& b) {
  std::cout << "relation=" << label << " lhs=" << format12(b.lhs) << " rhs=" << format12(b.rhs)
            << " slack=" << format12(b.slack) << " result=" << pass_fail(b.satisfied) << "\n";
}

int cmd_info(const std::string& input, Execution /*exec*/) {
  const Problem problem = load_problem_file(input);
  const DensityMatrix rho = build_state(problem.state);
  std::cout << "state: dim=" << rho.dim() << " purity=" << format12(rho.purity()) << "\n";

  bool all_ok = true;
  for (std::size_t idx = 0; idx < problem.channels.size(); ++idx) {
    const KrausChannel c = build_channel(problem.channels[idx]);
    const UncertaintyReport r = report(rho, c);
    std::cout << "channel " << idx + 1 << ": " << c.name() << " [kraus=" << c.kraus_count()
              << " unital=" << (c.unital() ? "yes" : "no") << "]\n";
    std::cout << "  I       = " << format12(r.skew_info) << "\n";
    std::cout << "  J       = " << format12(r.dual_info) << "\n";
    std::cout << "  V       = " << format12(r.variance) << "\n";
    std::cout << "  C       = " << format12(r.classical) << "\n";
    std::cout << "  Q       = " << format12(r.quantum) << "\n";
    std::cout << "  tilde_I = " << format12(r.tilde_skew) << "\n";
    std::cout << "  tilde_J = " << format12(r.tilde_dual) << "\n";

    const double tol = kBoundTolerance;
    const bool c_ok = std::abs(r.classical - (r.variance - r.skew_info)) <= tol;
    const bool ti_ok = std::abs(r.tilde_skew - r.skew_info) <= tol;
    const bool tj_ok = std::abs(r.tilde_dual - (2.0 * r.variance - r.skew_info)) <= tol;
    const bool q_ok =
        std::abs(r.quantum - std::sqrt(std::max(0.0, r.tilde_skew * r.tilde_dual))) <= tol;
    const bool sandwich_ok = r.quantum >= r.skew_info - tol &&
                             r.quantum <= 2.0 * r.variance - r.skew_info + tol;
    std::cout << "  C=V-I " << pass_fail(c_ok) << " | tilde_I=I " << pass_fail(ti_ok)
              << " | tilde_J=2V-I " << pass_fail(tj_ok) << " | Q=sqrt(tilde_I*tilde_J) "
              << pass_fail(q_ok) << " | I<=Q<=2V-I " << pass_fail(sandwich_ok) << "\n";
    all_ok = all_ok && c_ok && ti_ok && tj_ok && q_ok && sandwich_ok;
  }
  return all_ok ? kOk : kFail;
}

int cmd_verify(const std::string& input, const std::string& relation, double tau) {
  const Problem problem = load_problem_file(input);
  const DensityMatrix rho = build_state(problem.state);
  const std::size_t n = problem.channels.size();

  auto channel = [&](std::size_t i) { return build_channel(problem.channels[i]); };

  BoundCheck bound;
  if (relation == "product" || relation == "sum") {
    if (n != 2) {
      throw ArityMismatch("relation '" + relation + "' needs exactly 2 channels, got " +
                          std::to_string(n));
    }
    bound = relation == "product" ? lb_product(rho, channel(0), channel(1))
                                  : lb_sum(rho, channel(0), channel(1));
  } else if (relation == "triple") {
    if (n != 3) {
      throw ArityMismatch("relation 'triple' needs exactly 3 channels, got " +
                          std::to_string(n));
    }
    bound = lb_triple(rho, channel(0), channel(1), channel(2), tau);
  } else if (relation == "pauli") {
    if (n != 0) {
      throw ArityMismatch("relation 'pauli' takes no channels, got " + std::to_string(n));
    }
    bound = pauli_tight_bound(rho);
  } else {
    throw ParameterOutOfRange("unknown relation '" + relation + "'");
  }
  print_bound(relation, bound);
  return bound.satisfied ? kOk : kFail;
}

int cmd_scan(const std::string& input, const std::string& param, std::optional<double> start,
             std::optional<double> stop, std::optional<int> points, std::optional<double> fixed,
             const std::string& output, Execution exec) {
  const Problem problem = load_problem_file(input);
  SweepSpec spec;
  if (param == "theta") {
    spec.parameter = SweepParam::theta;
    spec.start = start.value_or(0.0);
    spec.stop = stop.value_or(2.0 * std::numbers::pi);
    spec.points = points.value_or(181);
  } else if (param == "q") {
    spec.parameter = SweepParam::q;
    spec.start = start.value_or(0.0);
    spec.stop = stop.value_or(0.99);
    spec.points = points.value_or(100);
  } else {
    throw ParameterOutOfRange("unknown sweep parameter '" + param + "'");
  }
  spec.fixed = fixed;

  const std::vector<SweepRow> rows = run_sweep(problem, spec, exec);
  std::ofstream out(output);
  if (!out) {
    throw ParseError("cannot open output file '" + output + "'");
  }
  write_sweep_csv(out, rows);
  std::cout << "wrote " << rows.size() << " rows to " << output << "\n";
  return kOk;
}

int cmd_sample(const std::string& property, const SampleConfig& cfg, Execution exec) {
  const CampaignReport rep = run_campaign(property, cfg, exec);
  std::cout << "property=" << rep.property << " trials=" << rep.trials_run
            << " tolerance=" << format12(rep.tolerance)
            << " violations=" << rep.violations.size()
            << " worst_slack=" << format12(rep.worst_slack) << "\n";
  for (const Violation& v : rep.violations) {
    std::cout << "violation trial=" << v.trial_index << " seed=" << v.trial_seed
              << " slack=" << format12(v.slack) << "\n";
  }
  return rep.violations.empty() ? kOk : kFail;
}

int cmd_tau(const std::string& input, long grid, std::uint64_t seed, Execution exec) {
  const Problem problem = load_problem_file(input);
  if (problem.channels.size() != 3) {
    throw ArityMismatch("tau estimation needs exactly 3 channels, got " +
                        std::to_string(problem.channels.size()));
  }
  TauConfig cfg;
  cfg.samples = grid;
  cfg.seed = seed;
  const TauEstimate est = estimate_tau(build_channel(problem.channels[0]),
                                       build_channel(problem.channels[1]),
                                       build_channel(problem.channels[2]), cfg, exec);
  std::cout << "tau_estimate=" << format12(est.tau) << " samples=" << est.samples
            << " feasible=" << est.feasible << " min_state=" << est.minimizer
            << " lhs=" << format12(est.min_lhs)
            << " denominator=" << format12(est.min_denominator) << "\n";
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Skew-information uncertainty measures and bounds for quantum channels"};
  app.require_subcommand(1);

  std::string input;
  std::string relation = "product";
  std::string param = "theta";
  std::string output = "sweep.csv";
  std::string property;
  std::optional<double> start, stop, fixed;
  std::optional<int> points;
  double tau = 1.0;
  long grid = 100000;
  bool serial = false;
  SampleConfig cfg;
  cfg.dimension = 2;
  cfg.kraus_count = 2;
  cfg.rank = 0;  // 0 = match dimension
  cfg.trials = 1000;
  cfg.seed = 1;

  CLI::App* info = app.add_subcommand("info", "print the uncertainty report per channel");
  info->add_option("--input", input, "problem file")->required();

  CLI::App* verify = app.add_subcommand("verify", "check one uncertainty relation");
  verify->add_option("--input", input, "problem file")->required();
  verify->add_option("--relation", relation, "product|sum|triple|pauli")->required();
  verify->add_option("--tau", tau, "tightening constant for the triple relation");

  CLI::App* scan = app.add_subcommand("scan", "parameter sweep to CSV");
  scan->add_option("--input", input, "problem file")->required();
  scan->add_option("--param", param, "theta|q")->required();
  scan->add_option("--start", start, "grid start");
  scan->add_option("--stop", stop, "grid stop (inclusive)");
  scan->add_option("--points", points, "grid size (>= 2)");
  scan->add_option("--fixed", fixed, "override the non-swept parameter");
  scan->add_option("--output", output, "CSV output path")->required();
  scan->add_flag("--serial", serial, "run the serial reference path");

  CLI::App* sample = app.add_subcommand("sample", "run a property campaign");
  sample->add_option("property", property, "property name")->required();
  sample->add_option("--dim", cfg.dimension, "state/channel dimension");
  sample->add_option("--kraus", cfg.kraus_count, "Kraus operators per channel");
  sample->add_option("--rank", cfg.rank, "state rank (default: dimension)");
  sample->add_option("--trials", cfg.trials, "number of trials");
  sample->add_option("--seed", cfg.seed, "campaign master seed");
  sample->add_flag("--serial", serial, "run the serial reference path");

  CLI::App* tau_cmd = app.add_subcommand("tau", "estimate the three-channel tightening constant");
  tau_cmd->add_option("--input", input, "problem file with 3 channels")->required();
  tau_cmd->add_option("--grid", grid, "number of sampled states");
  tau_cmd->add_option("--seed", cfg.seed, "sampling seed (dim > 2)");
  tau_cmd->add_flag("--serial", serial, "run the serial reference path");

  CLI11_PARSE(app, argc, argv);
  const Execution exec = serial ? Execution::serial : Execution::parallel;

  if (info->parsed()) {
    return cmd_info(input, exec);
  }
  if (verify->parsed()) {
    return cmd_verify(input, relation, tau);
  }
  if (scan->parsed()) {
    return cmd_scan(input, param, start, stop, points, fixed, output, exec);
  }
  if (sample->parsed()) {
    if (cfg.rank <= 0) {
      cfg.rank = cfg.dimension;
    }
    return cmd_sample(property, cfg, exec);
  }
  if (tau_cmd->parsed()) {
    return cmd_tau(input, grid, cfg.seed, exec);
  }
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ArityMismatch& e) {
    std::cerr << "arity error: " << e.what() << "\n";
    return kArity;
  } catch (const DimensionMismatch& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kDimension;
  } catch (const SweepInapplicable& e) {
    std::cerr << "sweep error: " << e.what() << "\n";
    return kSweep;
  } catch (const UnknownProperty& e) {
    std::cerr << "unknown property: " << e.what() << "\n";
    return kUnknownProperty;
  } catch (const NoFeasibleSample& e) {
    std::cerr << "degenerate denominator: " << e.what() << "\n";
    return kDegenerate;
  } catch (const Error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
