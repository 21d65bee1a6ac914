#pragma once

#include <string>
#include <vector>

#include "wychan/sampling.hpp"

namespace wychan {

/// Which loop implementation to run. Results are identical either way (each
/// trial draws from its own substream); serial is the reference path kept for
/// testing and benchmarking against the OpenMP one.
enum class Execution { serial, parallel };

struct Violation {
  int trial_index = 0;
  std::uint64_t trial_seed = 0;  ///< replayable via campaign_replay
  double slack = 0.0;
};

struct CampaignReport {
  std::string property;
  int trials_run = 0;
  double tolerance = 0.0;
  double worst_slack = 0.0;
  std::vector<Violation> violations;  ///< every trial with slack < -tolerance
};

/// Names accepted by run_campaign / the CLI `sample` command.
const std::vector<std::string>& campaign_properties();

/// Tolerance the named property is checked at. Throws UnknownProperty.
double campaign_tolerance(const std::string& property);

/// Slack of trial `index` of the campaign (>= -tolerance means pass).
/// Inequalities report lhs - rhs; equalities report -|deviation|.
double campaign_trial(const std::string& property, const SampleConfig& cfg,
                      std::uint64_t trial_index);

/// Replay a single trial from the recorded per-trial seed; bit-identical to
/// the in-campaign evaluation.
double campaign_replay(const std::string& property, const SampleConfig& cfg,
                       std::uint64_t trial_seed);

CampaignReport run_campaign(const std::string& property, const SampleConfig& cfg,
                            Execution exec = Execution::parallel);

}  // namespace wychan
