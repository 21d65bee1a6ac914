// Timing comparison of the serial reference loops against the OpenMP ones.
// The two paths must produce identical results (each trial/grid point draws
// from its own substream), so the run also cross-checks them.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "wychan/campaign.hpp"
#include "wychan/problem.hpp"
#include "wychan/sweep.hpp"
#include "wychan/tau.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace wychan;

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

int g_mismatches = 0;

void report(const char* name, double t_serial, double t_parallel, bool identical) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   results %s\n", name,
              t_serial, t_parallel, t_serial / t_parallel, identical ? "identical" : "DIFFER");
  if (!identical) {
    ++g_mismatches;
  }
}

void bench_campaign() {
  SampleConfig cfg;
  cfg.dimension = 3;
  cfg.kraus_count = 3;
  cfg.rank = 3;
  cfg.trials = 4000;
  cfg.seed = 42;

  double t0 = now();
  const CampaignReport serial = run_campaign("theorem2", cfg, Execution::serial);
  double t1 = now();
  const CampaignReport parallel = run_campaign("theorem2", cfg, Execution::parallel);
  double t2 = now();
  const bool same = serial.worst_slack == parallel.worst_slack &&
                    serial.violations.size() == parallel.violations.size();
  report("campaign theorem2 (4k)", t1 - t0, t2 - t1, same);
}

void bench_pauli_grid() {
  const long points = 400000;
  double t0 = now();
  const GridScanResult serial = pauli_bound_scan(points, Execution::serial);
  double t1 = now();
  const GridScanResult parallel = pauli_bound_scan(points, Execution::parallel);
  double t2 = now();
  report("pauli bound grid (400k)", t1 - t0, t2 - t1,
         serial.worst_slack == parallel.worst_slack);
}

void bench_tau() {
  const auto paulis = pauli_unitary_channels();
  TauConfig cfg;
  cfg.samples = 100000;
  double t0 = now();
  const TauEstimate serial = estimate_tau(paulis[0], paulis[1], paulis[2], cfg, Execution::serial);
  double t1 = now();
  const TauEstimate parallel =
      estimate_tau(paulis[0], paulis[1], paulis[2], cfg, Execution::parallel);
  double t2 = now();
  report("tau grid (100k)", t1 - t0, t2 - t1, serial.tau == parallel.tau);
}

void bench_sweep() {
  Problem problem;
  problem.state.kind = StateSpec::Kind::bloch;
  const double theta = std::numbers::pi / 4.0;
  problem.state.r = BlochVector{0.5 * std::cos(theta), 0.5 * std::sin(theta), 0.5};
  ChannelSpec ad;
  ad.kind = ChannelSpec::Kind::amplitude_damping;
  ad.q = 0.5;
  ChannelSpec bf;
  bf.kind = ChannelSpec::Kind::bit_flip;
  bf.q = 0.5;
  problem.channels = {ad, bf};

  SweepSpec spec;
  spec.parameter = SweepParam::theta;
  spec.start = 0.0;
  spec.stop = 2.0 * std::numbers::pi;
  spec.points = 20001;

  double t0 = now();
  const auto serial = run_sweep(problem, spec, Execution::serial);
  double t1 = now();
  const auto parallel = run_sweep(problem, spec, Execution::parallel);
  double t2 = now();
  bool same = serial.size() == parallel.size();
  for (std::size_t i = 0; same && i < serial.size(); ++i) {
    same = serial[i].q1 == parallel[i].q1 && serial[i].lb1 == parallel[i].lb1 &&
           serial[i].lb2 == parallel[i].lb2;
  }
  report("theta sweep (20k rows)", t1 - t0, t2 - t1, same);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; 'parallel' runs the same serial loop\n");
#endif
  bench_campaign();
  bench_pauli_grid();
  bench_tau();
  bench_sweep();
  return g_mismatches == 0 ? 0 : 1;
}
