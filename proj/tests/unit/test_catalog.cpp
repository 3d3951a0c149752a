#include <doctest.h>

#include <cmath>

#include "shiftlab/catalog.hpp"

using namespace shiftlab;

TEST_CASE("catalog has the eight entries") {
  const auto es = catalog_entries();
  CHECK(es.size() == 8);
  CHECK(catalog_entry("volterra-infinite").op.kind == ShiftKind::Forward);
  CHECK_THROWS_AS(catalog_entry("no-such-entry"), Error);
}

TEST_CASE("closed-form log products") {
  CHECK(analytic_log_product(catalog_entry("ddz-infinite"), 0, 3) == doctest::Approx(std::log(6.0)));
  CHECK(analytic_log_product(catalog_entry("volterra-infinite"), 2, 2) == doctest::Approx(std::log(1.0 / 12.0)));
  CHECK(analytic_log_product(catalog_entry("sqrt-backward-s"), 0, 4) == doctest::Approx(0.5 * std::log(24.0)));
  CHECK(analytic_log_product(catalog_entry("delta0-finite"), 17, 40) == 0.0);
}

TEST_CASE("closed forms agree with prefix sums") {
  for (const auto& e : catalog_entries())
    for (std::size_t n = 0; n <= 500; n += 7)
      for (std::size_t m = 1; n + m <= 500; m += 11) {
        const double a = analytic_log_product(e, n, m);
        const double p = prefix_log_product(e, n, m);
        CHECK_MESSAGE(std::fabs(a - p) <= 1e-9 * std::max(1.0, std::fabs(a)), e.name);
      }
}

TEST_CASE("verification of single entries") {
  const TruncationBudget b;
  const auto v = verify_entry(catalog_entry("volterra-infinite"), b);
  CHECK(v.contradictions() == 0);
  CHECK(v.report.power_bounded.holds());
  const auto d = verify_entry(catalog_entry("ddz-finite"), b);
  CHECK(d.contradictions() == 0);
  CHECK(d.report.mean_ergodic.fails());
}

TEST_CASE("backward shift of ones on the disc is not power bounded") {
  // z^N: the N-th Cesaro mean has size about 1/(N(1-rho)), which no rho'^N dominates
  const auto v = verify_entry(catalog_entry("delta0-finite"), TruncationBudget{});
  CHECK(v.report.continuity.holds());
  CHECK(v.report.power_bounded.fails());
  CHECK(v.report.cesaro_bounded.fails());
  CHECK(v.report.mean_ergodic.fails());
  CHECK(v.contradictions() == 3);
}

TEST_CASE("expectation comparison") {
  PropertyReport r;
  r.continuity.outcome = Outcome::Holds;
  r.power_bounded.outcome = Outcome::Inconclusive;
  r.mean_ergodic.outcome = Outcome::Holds;
  const auto rows = compare_expectations(r, {{"continuity", Expectation::Holds},
                                             {"power_bounded", Expectation::Holds},
                                             {"mean_ergodic", Expectation::NotHolds},
                                             {"topologizable", Expectation::Unspecified}});
  CHECK(rows[0].status == RowStatus::Match);
  CHECK(rows[1].status == RowStatus::Warning);
  CHECK(rows[2].status == RowStatus::Contradiction);
  CHECK(rows[3].status == RowStatus::Unchecked);
}
