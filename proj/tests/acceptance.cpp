// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "shiftlab/catalog.hpp"
#include "shiftlab/json_report.hpp"
#include "shiftlab/simulator.hpp"

using namespace shiftlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double rel_err(double a, double b) {
  if (a == b) return 0.0;
  if (std::isinf(a) || std::isinf(b)) return kInf;
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

FiniteVector random_vector(std::mt19937_64& rng, std::size_t len) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(len);
  for (auto& v : c) v = u(rng);
  return FiniteVector(c);
}

SpaceSpec random_power_series(std::mt19937_64& rng) {
  const ExponentSequence al = rng() % 2 ? ExponentSequence::linear() : ExponentSequence::logarithmic();
  return make_power_series_space(al, rng() % 2 ? PowerSeriesType::Infinite : PowerSeriesType::Finite, PNorm::finite(1));
}

WeightSequence random_oracle_weight(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  switch (rng() % 5) {
    case 0: return WeightSequence::constant(-2.0 + 4.0 * u(rng));
    case 1: return WeightSequence::polynomial(-1.0 + 3.0 * u(rng));
    case 2: return WeightSequence::sqrt_shifted();
    case 3: return WeightSequence::sqrt_index();
    default: return WeightSequence::reciprocal_factorial();
  }
}

void criterion_oracle() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240501);
  double worst = 0.0;
  int bad = 0;
  for (int c = 0; c < 500; ++c) {
    const ShiftOperatorSpec op{rng() % 2 ? ShiftKind::Backward : ShiftKind::Forward, random_oracle_weight(rng),
                               random_power_series(rng)};
    const FiniteVector x = random_vector(rng, 1 + rng() % 10);
    const std::size_t m = 1 + rng() % 50, n = 1 + rng() % 50, k = rng() % 7;
    const double e1 = rel_err(iterate_seminorm(op, x, m, k), seminorm(iterate(op, x, m), k, op.space));
    const double e2 = rel_err(cesaro_seminorm(op, x, n, k), seminorm(cesaro_mean(op, x, n), k, op.space));
    worst = std::max({worst, e1, e2});
    if (!(e1 <= 1e-10 && e2 <= 1e-10)) ++bad;
  }
  const double s = seconds_since(t0);
  report(1, "closed-form/oracle equivalence", bad == 0 && s < 10.0,
         fmt("500 cases, %.0f over 1e-10, max rel err %.2e, %.2f s", bad, worst, s));
}

void criterion_cesaro_identity() {
  std::mt19937_64 rng(77);
  double worst = 0.0;
  for (int c = 0; c < 200; ++c) {
    const ShiftOperatorSpec op{rng() % 2 ? ShiftKind::Backward : ShiftKind::Forward, random_oracle_weight(rng),
                               random_power_series(rng)};
    const FiniteVector x = random_vector(rng, 1 + rng() % 10);
    const std::size_t n = 2 + rng() % 40;
    const FiniteVector lhs = iterate(op, x, n).scaled(1.0 / n);
    const FiniteVector a = cesaro_mean(op, x, n);
    const FiniteVector b = cesaro_mean(op, x, n - 1).scaled((n - 1.0) / n);
    for (std::size_t i = 0; i < std::max({lhs.size(), a.size(), b.size()}); ++i) {
      const double scale = std::max({1.0, std::fabs(a[i]), std::fabs(b[i])});
      worst = std::max(worst, std::fabs(lhs[i] - (a[i] - b[i])) / scale);
    }
  }
  report(2, "Cesaro identity", worst <= 1e-12, fmt("200 cases, max scaled deviation %.2e", worst));
}

std::vector<EntryVerification> run_catalog() {
  std::vector<EntryVerification> out;
  for (const auto& e : catalog_entries()) out.push_back(verify_entry(e, TruncationBudget{}));
  return out;
}

std::string catalog_text;

void criterion_catalog() {
  const auto t0 = Clock::now();
  const auto rows = run_catalog();
  const double s = seconds_since(t0);
  catalog_text = dump(catalog_json(rows, TruncationBudget{}));
  std::size_t contra = 0;
  std::string missing;
  auto want = [&](const std::string& entry, const char* prop, bool ok) {
    if (!ok) missing += " " + entry + "." + prop;
  };
  for (const auto& r : rows) {
    contra += r.contradictions();
    const PropertyReport& p = r.report;
    if (r.name.rfind("delta0", 0) == 0 || r.name.rfind("volterra", 0) == 0) {
      want(r.name, "power_bounded", p.power_bounded.holds());
      want(r.name, "mean_ergodic", p.mean_ergodic.holds());
    } else if (r.name.rfind("ddz", 0) == 0) {
      want(r.name, "topologizable", p.topologizable.holds());
      want(r.name, "mean_ergodic", p.mean_ergodic.fails());
      want(r.name, "power_bounded", !p.power_bounded.holds());
    } else {
      want(r.name, "topologizable", p.topologizable.fails());
    }
  }
  std::string detail = fmt("%.0f contradictions, %.2f s", static_cast<double>(contra), s);
  if (!missing.empty()) detail += "; not as expected:" + missing;
  report(3, "verdict table", contra == 0 && missing.empty() && s < 60.0, detail);
}

void criterion_continuity() {
  const TruncationBudget b;
  const auto lin = ExponentSequence::linear();
  const SpaceSpec inf = make_power_series_space(lin, PowerSeriesType::Infinite, PNorm::finite(1));
  const SpaceSpec fin = make_power_series_space(lin, PowerSeriesType::Finite, PNorm::finite(1));
  const auto e2 = WeightSequence::exp_alpha(2.0, lin);
  const auto em = WeightSequence::exp_alpha(-1.0, lin);
  auto cont = [&](const WeightSequence& w, const SpaceSpec& s) {
    return check_continuity_power_series({ShiftKind::Backward, w, s}, b).outcome;
  };
  const bool gates = cont(e2, inf) == Outcome::Holds && cont(e2, fin) == Outcome::Fails &&
                     cont(em, inf) == Outcome::Holds && cont(em, fin) == Outcome::Holds;
  const SpaceSpec s = make_power_series_space(ExponentSequence::logarithmic(), PowerSeriesType::Infinite, PNorm::finite(1));
  const Verdict v = check_continuity_power_series({ShiftKind::Backward, WeightSequence::sqrt_shifted(), s}, b);
  const double est = v.estimate.value_or(std::nan(""));
  report(4, "continuity gates", gates && std::fabs(est - 0.5) <= 0.02,
         std::string("exp(2a): ") + to_string(cont(e2, inf)) + "/" + to_string(cont(e2, fin)) +
             ", exp(-a): " + to_string(cont(em, inf)) + "/" + to_string(cont(em, fin)) +
             fmt(", sqrt estimate %.4f", est));
}

void criterion_divergence() {
  const TruncationBudget b;
  const auto& e = catalog_entry("ddz-infinite");
  // sup over r <= n_max, n <= r of ||T^[n] e_r||_0 / ||e_r||_0
  double best = kNegInf;
  std::size_t at = 0;
  for (std::size_t r = 1; r <= b.n_max; r = r < 64 ? r + 1 : r * 2) {
    const double q = cesaro_seminorm_log(e.op, basis_vector(r), r, 0) - seminorm_log(basis_vector(r), 0, e.op.space);
    if (q > best) {
      best = q;
      at = r;
    }
    if (q > std::log(1e6) && at == r) break;
  }
  const PropertyReport p = full_report(e.op, b);
  const bool ok = best > std::log(1e6) && p.cesaro_bounded.fails() && p.cesaro_bounded.witness.has_value();
  report(5, "divergence detection", ok,
         fmt("quantity %.3g at r=%.0f, ", std::exp(best), static_cast<double>(at)) + "cesaro_bounded " +
             to_string(p.cesaro_bounded.outcome) + (p.cesaro_bounded.witness ? " with witness" : " without witness"));
}

ShiftOperatorSpec random_operator(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SpaceSpec space = [&] {
    const PNorm ps[] = {PNorm::zero(), PNorm::finite(1), PNorm::finite(2), PNorm::infinity()};
    switch (rng() % 5) {
      case 0: return make_koethe_space(KoetheMatrix::ones(), ps[rng() % 4]);
      case 1: return make_koethe_space(KoetheMatrix::polynomial(), ps[rng() % 4]);
      case 2: return make_power_series_space(ExponentSequence::power(0.5 + 1.5 * u(rng)),
                                             rng() % 2 ? PowerSeriesType::Infinite : PowerSeriesType::Finite,
                                             PNorm::finite(1));
      default: return random_power_series(rng);
    }
  }();
  WeightSequence w = [&] {
    switch (rng() % 7) {
      case 0: return WeightSequence::constant(3.0 * u(rng));
      case 1: return WeightSequence::polynomial(-2.0 + 4.0 * u(rng));
      case 2: return WeightSequence::exp_alpha(-1.0 + 2.0 * u(rng), ExponentSequence::linear());
      case 3: return WeightSequence::reciprocal_factorial();
      case 4: return WeightSequence::sqrt_shifted();
      case 5: return WeightSequence::sqrt_index();
      default: {
        std::vector<double> t(1 << 16);
        for (auto& x : t) x = 0.5 + u(rng);
        return WeightSequence::table(t, "random table");
      }
    }
  }();
  return {rng() % 2 ? ShiftKind::Backward : ShiftKind::Forward, std::move(w), std::move(space)};
}

void criterion_implications() {
  const auto t0 = Clock::now();
  std::size_t checked = 0, violations = 0;
  std::string where;
  auto audit = [&](const PropertyReport& r) {
    ++checked;
    const bool bad = (r.power_bounded.holds() && r.topologizable.fails()) ||
                     (r.mean_ergodic.holds() && r.cesaro_bounded.fails()) || !r.consistent();
    if (bad) {
      ++violations;
      where += " [" + r.operator_description + "]";
    }
  };
  for (const auto& e : catalog_entries()) audit(full_report(e.op, TruncationBudget{}));
  std::mt19937_64 rng(4242);
  const TruncationBudget small = TruncationBudget{}.scaled(0.25);
  for (int i = 0; i < 50; ++i) audit(full_report(random_operator(rng), small));
  report(6, "implication consistency", violations == 0,
         fmt("%.0f reports, %.0f violations, %.1f s", static_cast<double>(checked), static_cast<double>(violations),
             seconds_since(t0)) + where);
}

void criterion_cross_validation() {
  std::size_t hard = 0, soft = 0;
  for (const auto& e : catalog_entries()) {
    const CrossValidation cv = cross_validate(e.op, TruncationBudget{});
    hard += cv.hard_mismatches();
    soft += cv.soft_mismatches();
  }
  double worst = kNegInf;
  for (const char* name : {"volterra-infinite", "volterra-finite"})
    for (std::size_t r = 0; r <= 5; ++r)
      for (std::size_t k = 0; k <= 3; ++k) {
        const auto s = forward_limit_sequence(catalog_entry(name).op, r, k, 200);
        worst = std::max(worst, s.back());
      }
  report(7, "simulator cross-validation", hard == 0 && worst < std::log(1e-8),
         fmt("%.0f hard / %.0f soft mismatches, largest forward-limit term at n=200: %.2e", static_cast<double>(hard),
             static_cast<double>(soft), std::exp(worst)));
}

void criterion_determinism() {
  const std::string again = dump(catalog_json(run_catalog(), TruncationBudget{}));
  report(8, "determinism", !catalog_text.empty() && again == catalog_text,
         fmt("%.0f bytes, identical: ", static_cast<double>(again.size())) + (again == catalog_text ? "yes" : "no"));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion_oracle,      criterion_cesaro_identity,
                                                    criterion_catalog,     criterion_continuity,
                                                    criterion_divergence,  criterion_implications,
                                                    criterion_cross_validation, criterion_determinism};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), "exception", false, e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
