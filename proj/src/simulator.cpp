#include "shiftlab/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "shiftlab/parallel.hpp"
#include "shiftlab/shift_ops.hpp"

namespace shiftlab {

double TrajectoryPoint::cesaro() const { return cesaro_log == kNegInf ? 0.0 : std::exp(cesaro_log); }

double TrajectoryPoint::power_over_n() const {
  if (power_log == kNegInf) return 0.0;
  return std::exp(power_log - std::log(static_cast<double>(n)));
}

std::vector<double> TrajectoryRecord::series(std::size_t k, Series s) const {
  std::vector<double> out;
  for (const auto& p : points) {
    if (p.k != k) continue;
    switch (s) {
      case Series::Cesaro: out.push_back(p.cesaro_log); break;
      case Series::Power: out.push_back(p.power_log); break;
      case Series::PowerOverN:
        out.push_back(p.power_log == kNegInf ? kNegInf : p.power_log - std::log(static_cast<double>(p.n)));
        break;
    }
  }
  return out;
}

TrajectoryRecord run_trajectory(const ShiftOperatorSpec& op, const FiniteVector& x0, const std::vector<std::size_t>& k_list,
                                std::size_t n_max, std::string x0_description) {
  if (n_max < 2) throw PreconditionError("trajectory needs n_max >= 2");
  TrajectoryRecord t;
  t.op_description = op.describe();
  t.x0_description = std::move(x0_description);
  t.k_list = k_list;
  t.n_max = n_max;
  t.points.resize(n_max * k_list.size());
  op.w.prefetch(x0.size() + n_max + 2);
  parallel_for(n_max, [&](std::size_t i) {
    const std::size_t n = i + 1;
    const std::size_t width = iterate(op, x0, n).support_end();
    for (std::size_t j = 0; j < k_list.size(); ++j) {
      TrajectoryPoint& p = t.points[i * k_list.size() + j];
      p.n = n;
      p.k = k_list[j];
      p.cesaro_log = cesaro_seminorm_log(op, x0, n, p.k);
      p.power_log = iterate_seminorm_log(op, x0, n, p.k);
      p.support_width = width;
    }
  });
  return t;
}

namespace {

void put(std::ostream& os, double v) {
  if (v == kInf) os << "inf";
  else os << v;
}

}  // namespace

void write_csv(const TrajectoryRecord& t, std::ostream& os) {
  os << "n,k,cesaro_seminorm,power_over_n_seminorm,support_width\n";
  const auto old = os.precision(17);
  for (const auto& p : t.points) {
    os << p.n << ',' << p.k << ',';
    put(os, p.cesaro());
    os << ',';
    put(os, p.power_over_n());
    os << ',' << p.support_width << '\n';
  }
  os.precision(old);
}

const char* to_string(ConvergenceKind k) {
  switch (k) {
    case ConvergenceKind::ConvergesToZero: return "ConvergesToZero";
    case ConvergenceKind::ConvergesToNonzero: return "ConvergesToNonzero";
    case ConvergenceKind::Bounded: return "Bounded";
    case ConvergenceKind::Diverges: return "Diverges";
    case ConvergenceKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

ConvergenceClass classify(const std::vector<double>& y, double tol) {
  ConvergenceClass c;
  const std::size_t N = y.size();
  if (N < 8) return c;
  const std::size_t len = N / 4;
  // blocks [b*len, (b+1)*len), the last one absorbing the remainder
  double bmax[4], bmin[4];
  for (int b = 0; b < 4; ++b) {
    const std::size_t lo = b * len, hi = b == 3 ? N : (b + 1) * len;
    bmax[b] = kNegInf;
    bmin[b] = kInf;
    for (std::size_t i = lo; i < hi; ++i) {
      bmax[b] = std::max(bmax[b], y[i]);
      bmin[b] = std::min(bmin[b], y[i]);
    }
  }
  std::vector<double> xs, ys;
  for (std::size_t i = 2 * len; i < N; ++i) {
    xs.push_back(std::log(static_cast<double>(i + 1)));
    ys.push_back(y[i]);
  }
  c.rate = fit_slope(xs, ys);
  if (std::isnan(bmax[3])) return c;
  if (bmax[3] == kNegInf || (bmax[0] > kNegInf && bmax[3] < std::log(tol) + bmax[0])) {
    c.kind = ConvergenceKind::ConvergesToZero;
    return c;
  }
  if (bmax[3] == kInf || (c.rate > 0.05 && bmax[3] > bmax[2] && bmax[2] > bmax[1])) {
    c.kind = ConvergenceKind::Diverges;
    return c;
  }
  if (bmin[3] > kNegInf && bmax[3] - bmin[3] <= 1e-3 && std::fabs(bmax[3] - bmax[2]) <= 1e-3) {
    c.kind = ConvergenceKind::ConvergesToNonzero;
    return c;
  }
  const double earlier = std::max({bmax[0], bmax[1], bmax[2]});
  if (bmax[3] <= earlier + 1e-12 || c.rate <= 0.0) c.kind = ConvergenceKind::Bounded;
  return c;
}

ConvergenceClass classify(const TrajectoryRecord& t, std::size_t k, TrajectoryRecord::Series s, double tol) {
  return classify(t.series(k, s), tol);
}

FiniteVector mixed_probe() { return FiniteVector({1.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.25}); }

std::vector<double> forward_limit_sequence(const ShiftOperatorSpec& op, std::size_t r, std::size_t k,
                                           std::size_t n_max) {
  std::vector<double> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double win = forward_kernel(op.w, r, n).log_magnitude();
    out.push_back(win == kNegInf ? kNegInf
                                 : win + op.space.matrix.log_entry(r + n, k) - std::log(static_cast<double>(n)));
  }
  return out;
}

std::size_t CrossValidation::hard_mismatches() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CrossCheck& c) { return c.hard_mismatch; }));
}

std::size_t CrossValidation::soft_mismatches() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CrossCheck& c) { return c.soft_mismatch; }));
}

CrossValidation cross_validate(const ShiftOperatorSpec& op, const PropertyReport& report, std::size_t n_max,
                               std::size_t k_count) {
  CrossValidation cv;
  cv.op_description = op.describe();
  struct Probe {
    std::string name;
    FiniteVector x;
  };
  const std::vector<Probe> probes = {
      {"e_0", basis_vector(0)}, {"e_3", basis_vector(3)}, {"e_10", basis_vector(10)}, {"mixed", mixed_probe()}};
  std::vector<std::size_t> ks;
  for (std::size_t k = 0; k < k_count; ++k) ks.push_back(k);
  std::vector<TrajectoryRecord> traj(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) traj[i] = run_trajectory(op, probes[i].x, ks, n_max, probes[i].name);

  const Outcome me = report.mean_ergodic.outcome;
  const Outcome pb = report.power_bounded.outcome;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t k : ks) {
      CrossCheck c;
      c.probe = probes[i].name;
      c.k = k;
      c.series = "cesaro";
      c.kind = classify(traj[i], k, TrajectoryRecord::Series::Cesaro).kind;
      c.verdict_property = "mean_ergodic";
      c.verdict = me;
      if (me == Outcome::Holds) {
        c.hard_mismatch = c.kind == ConvergenceKind::Diverges;
        c.soft_mismatch = c.kind == ConvergenceKind::Inconclusive;
      }
      cv.checks.push_back(c);

      CrossCheck d;
      d.probe = probes[i].name;
      d.k = k;
      d.series = "power";
      d.kind = classify(traj[i], k, TrajectoryRecord::Series::Power).kind;
      d.verdict_property = "power_bounded";
      d.verdict = pb;
      if (pb == Outcome::Holds) {
        d.hard_mismatch = d.kind == ConvergenceKind::Diverges;
        d.soft_mismatch = d.kind == ConvergenceKind::Inconclusive;
      }
      cv.checks.push_back(d);
    }
  }
  return cv;
}

CrossValidation cross_validate(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  return cross_validate(op, full_report(op, b));
}

}  // namespace shiftlab
