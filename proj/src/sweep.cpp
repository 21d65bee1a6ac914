#include "wychan/sweep.hpp"

#include <cmath>
#include <cstdio>

#include "wychan/uncertainty.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wychan {

namespace {

struct SweepContext {
  const Problem* problem;
  SweepParam parameter;
  double transverse = 0.0;  // theta sweep: kept transverse Bloch radius
  double z = 0.0;
};

BlochVector bloch_at_angle(double transverse, double z, double theta) {
  return BlochVector{transverse * std::cos(theta), transverse * std::sin(theta), z};
}

SweepRow evaluate_point(const SweepContext& ctx, double value) {
  DensityMatrix rho = [&] {
    if (ctx.parameter == SweepParam::theta) {
      return DensityMatrix::from_bloch(bloch_at_angle(ctx.transverse, ctx.z, value));
    }
    return build_state(ctx.problem->state);
  }();

  auto channel_at = [&](const ChannelSpec& spec) {
    if (ctx.parameter == SweepParam::q && channel_has_q(spec)) {
      return build_channel(with_q(spec, value));
    }
    return build_channel(spec);
  };
  const KrausChannel c1 = channel_at(ctx.problem->channels[0]);
  const KrausChannel c2 = channel_at(ctx.problem->channels[1]);

  SweepRow row;
  row.param = value;
  row.q1 = quantum_uncertainty(rho, c1);
  row.q2 = quantum_uncertainty(rho, c2);
  row.product = row.q1 * row.q2;
  row.sum = row.q1 * row.q1 + row.q2 * row.q2;
  row.lb1 = lb_product(rho, c1, c2).rhs;
  row.lb2 = lb_sum(rho, c1, c2).rhs;
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const Problem& problem, const SweepSpec& spec, Execution exec) {
  if (problem.channels.size() != 2) {
    throw ArityMismatch("sweep needs exactly 2 channels, got " +
                        std::to_string(problem.channels.size()));
  }
  if (!(spec.start < spec.stop) || spec.points < 2) {
    throw ParameterOutOfRange("sweep grid: start " + std::to_string(spec.start) + ", stop " +
                              std::to_string(spec.stop) + ", points " +
                              std::to_string(spec.points));
  }

  // Resolve the swept/fixed configuration up front so parameter errors
  // surface before any evaluation.
  Problem base = problem;
  SweepContext ctx;
  ctx.parameter = spec.parameter;
  if (spec.parameter == SweepParam::theta) {
    if (base.state.kind != StateSpec::Kind::bloch) {
      throw SweepInapplicable("theta sweep needs a bloch-kind state");
    }
    ctx.transverse = std::hypot(base.state.r.x, base.state.r.y);
    ctx.z = base.state.r.z;
    if (spec.fixed) {
      for (ChannelSpec& c : base.channels) {
        if (!channel_has_q(c)) {
          throw SweepInapplicable("fixed q given but channel '" +
                                  build_channel(c).name() + "' has no q parameter");
        }
        c = with_q(c, *spec.fixed);
      }
    }
  } else {
    for (const ChannelSpec& c : base.channels) {
      if (!channel_has_q(c)) {
        throw SweepInapplicable("q sweep needs q-parameterized channels");
      }
    }
    if (spec.fixed) {
      if (base.state.kind != StateSpec::Kind::bloch) {
        throw SweepInapplicable("fixed theta given but the state is not bloch-kind");
      }
      const double t = std::hypot(base.state.r.x, base.state.r.y);
      base.state.r = bloch_at_angle(t, base.state.r.z, *spec.fixed);
    }
  }
  ctx.problem = &base;

  const int points = spec.points;
  const double step = (spec.stop - spec.start) / (points - 1);
  std::vector<SweepRow> rows(static_cast<std::size_t>(points));
  bool failed = false;

  if (exec == Execution::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < points; ++i) {
      try {
        rows[static_cast<std::size_t>(i)] = evaluate_point(ctx, spec.start + i * step);
      } catch (...) {
        failed = true;
      }
    }
  } else {
    for (int i = 0; i < points; ++i) {
      rows[static_cast<std::size_t>(i)] = evaluate_point(ctx, spec.start + i * step);
    }
  }
  if (failed) {
    for (int i = 0; i < points; ++i) {
      rows[static_cast<std::size_t>(i)] = evaluate_point(ctx, spec.start + i * step);
    }
  }
  return rows;
}

std::string format12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "param,Q1,Q2,product,sum,LB1,LB2\n";
  for (const SweepRow& r : rows) {
    os << format12(r.param) << ',' << format12(r.q1) << ',' << format12(r.q2) << ','
       << format12(r.product) << ',' << format12(r.sum) << ',' << format12(r.lb1) << ','
       << format12(r.lb2) << '\n';
  }
}

}  // namespace wychan
