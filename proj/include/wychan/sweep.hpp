#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wychan/campaign.hpp"
#include "wychan/problem.hpp"

namespace wychan {

enum class SweepParam { theta, q };

/// One-parameter sweep over an inclusive [start, stop] grid.
/// theta rebuilds the Bloch state as (t cos, t sin, r_z) keeping the file
/// state's transverse radius t and z component; q rebuilds both channels.
/// `fixed` optionally overrides the other parameter (the channels' q for a
/// theta sweep, the state's azimuth for a q sweep); when absent the problem
/// file's values are used as-is.
struct SweepSpec {
  SweepParam parameter = SweepParam::theta;
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
  std::optional<double> fixed;
};

struct SweepRow {
  double param = 0.0;
  double q1 = 0.0;       ///< Q of the first channel
  double q2 = 0.0;       ///< Q of the second channel
  double product = 0.0;  ///< q1 * q2
  double sum = 0.0;      ///< q1^2 + q2^2
  double lb1 = 0.0;      ///< product-form bound rhs
  double lb2 = 0.0;      ///< summation-form bound rhs
};

/// Requires exactly two channels (ArityMismatch otherwise) and an applicable
/// parameter (SweepInapplicable otherwise).
std::vector<SweepRow> run_sweep(const Problem& problem, const SweepSpec& spec,
                                Execution exec = Execution::parallel);

/// Header `param,Q1,Q2,product,sum,LB1,LB2`, one row per grid point, every
/// value printed with 12 significant digits. Byte-stable for fixed inputs.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// %.12g rendering used for all numeric CLI/CSV output.
std::string format12(double value);

}  // namespace wychan
