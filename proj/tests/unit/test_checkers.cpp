#include <doctest.h>

#include <cmath>

#include "shiftlab/checkers.hpp"

using namespace shiftlab;

namespace {

const ExponentSequence kLin = ExponentSequence::linear();
const ExponentSequence kLog = ExponentSequence::logarithmic();
const SpaceSpec kEntire = make_power_series_space(kLin, PowerSeriesType::Infinite, PNorm::finite(1));
const SpaceSpec kDisc = make_power_series_space(kLin, PowerSeriesType::Finite, PNorm::finite(1));
const SpaceSpec kS = make_power_series_space(kLog, PowerSeriesType::Infinite, PNorm::finite(1));
const TruncationBudget kB{};

ShiftOperatorSpec back(WeightSequence w, const SpaceSpec& s) { return {ShiftKind::Backward, std::move(w), s}; }
ShiftOperatorSpec fwd(WeightSequence w, const SpaceSpec& s) { return {ShiftKind::Forward, std::move(w), s}; }

}  // namespace

TEST_CASE("continuity on the sweep") {
  CHECK(check_continuity(back(WeightSequence::polynomial(1.0), kEntire), kB).holds());
  CHECK(check_continuity(back(WeightSequence::zero(), kDisc), kB).holds());
  const Verdict v = check_continuity(back(WeightSequence::exp_exp(), kEntire), kB);
  CHECK(v.fails());
  CHECK(v.witness.has_value());
}

TEST_CASE("continuity on power series spaces") {
  const auto e2 = WeightSequence::exp_alpha(2.0, kLin);
  const Verdict inf = check_continuity_power_series(back(e2, kEntire), kB);
  CHECK(inf.holds());
  REQUIRE(inf.estimate.has_value());
  CHECK(*inf.estimate == doctest::Approx(2.0).epsilon(0.01));
  CHECK(check_continuity_power_series(back(e2, kDisc), kB).fails());
  const auto em = WeightSequence::exp_alpha(-1.0, kLin);
  CHECK(check_continuity_power_series(back(em, kEntire), kB).holds());
  CHECK(check_continuity_power_series(back(em, kDisc), kB).holds());
  const Verdict sq = check_continuity_power_series(back(WeightSequence::sqrt_shifted(), kS), kB);
  CHECK(sq.holds());
  REQUIRE(sq.estimate.has_value());
  CHECK(std::fabs(*sq.estimate - 0.5) < 0.02);
}

TEST_CASE("power series fast path needs a tagged space") {
  const SpaceSpec plain = make_koethe_space(KoetheMatrix::polynomial(), PNorm::finite(1));
  CHECK_THROWS_AS(check_continuity_power_series(back(WeightSequence::constant(1.0), plain), kB), PreconditionError);
  CHECK_THROWS_AS(check_power_bounded_power_series(back(WeightSequence::sqrt_shifted(), kS), kB), PreconditionError);
}

TEST_CASE("topologizable") {
  CHECK(check_topologizable(back(WeightSequence::polynomial(1.0), kEntire), kB).holds());
  const Verdict ones = check_topologizable(back(WeightSequence::constant(1.0), kEntire), kB);
  CHECK(ones.holds());
  for (const auto& c : ones.certificates) CHECK(c.l <= c.k);
  CHECK(check_topologizable(back(WeightSequence::sqrt_shifted(), kS), kB).fails());
  CHECK(check_topologizable_power_series(back(WeightSequence::polynomial(1.0), kEntire), kB).holds());
  CHECK(check_topologizable_power_series(back(WeightSequence::sqrt_shifted(), kS), kB).fails());
  CHECK(check_topologizable_power_series(back(WeightSequence::constant(1.0), kDisc), kB).holds());
}

TEST_CASE("power bounded") {
  CHECK(check_power_bounded(back(WeightSequence::constant(1.0), kEntire), kB).holds());
  CHECK(check_power_bounded(fwd(WeightSequence::reciprocal_factorial(), kDisc), kB).holds());
  CHECK(check_power_bounded(back(WeightSequence::constant(2.0), kDisc), kB).fails());
  CHECK(check_power_bounded_power_series(fwd(WeightSequence::reciprocal_factorial(), kEntire), kB).holds());
  CHECK(check_power_bounded_power_series(back(WeightSequence::constant(1.0), kEntire), kB).holds());
  CHECK(check_power_bounded_power_series(fwd(WeightSequence::reciprocal_factorial(), kDisc), kB).holds());
}

TEST_CASE("Cesaro bounded") {
  CHECK(check_cesaro_bounded(back(WeightSequence::constant(1.0), kEntire), kB).holds());
  CHECK(check_cesaro_bounded(back(WeightSequence::zero(), kEntire), kB).holds());
  const Verdict d = check_cesaro_bounded_power_series(back(WeightSequence::polynomial(1.0), kEntire), kB);
  CHECK(d.fails());
  CHECK(d.witness.has_value());
}

TEST_CASE("mean ergodic") {
  CHECK(check_mean_ergodic(back(WeightSequence::constant(1.0), kEntire), kB).holds());
  CHECK(check_mean_ergodic_power_series(back(WeightSequence::polynomial(1.0), kDisc), kB).fails());
  CHECK(check_mean_ergodic_power_series(fwd(WeightSequence::reciprocal_factorial(), kEntire), kB).holds());
}

TEST_CASE("zero operator has every property") {
  for (const SpaceSpec* s : {&kEntire, &kDisc}) {
    const PropertyReport r = full_report(back(WeightSequence::zero(), *s), kB);
    for (const char* p : {"continuity", "topologizable", "power_bounded", "cesaro_bounded", "mean_ergodic"})
      CHECK_MESSAGE(r.get(p).holds(), p);
  }
}

TEST_CASE("Montel") {
  CHECK(check_montel(kEntire, kB).holds());
  CHECK(check_montel(KoetheMatrix::ones(), kB).fails());
  const Verdict poly = check_montel(KoetheMatrix::polynomial(), kB);
  CHECK(poly.holds());
  for (const auto& c : poly.certificates) CHECK(c.l == c.k + 1);
}

TEST_CASE("full report rows") {
  const PropertyReport d0 = full_report(back(WeightSequence::constant(1.0), kEntire), kB);
  for (const char* p : {"continuity", "topologizable", "power_bounded", "cesaro_bounded", "mean_ergodic"})
    CHECK_MESSAGE(d0.get(p).holds(), p);
  const PropertyReport dd = full_report(back(WeightSequence::polynomial(1.0), kEntire), kB);
  CHECK(dd.continuity.holds());
  CHECK(dd.topologizable.holds());
  CHECK(dd.power_bounded.fails());
  CHECK(dd.mean_ergodic.fails());
  REQUIRE(dd.mean_ergodic.witness.has_value());
  CHECK(dd.mean_ergodic.witness->k.has_value());
  CHECK(dd.mean_ergodic.witness->l.has_value());
  CHECK(dd.mean_ergodic.witness->n.has_value());
  const PropertyReport sq = full_report(back(WeightSequence::sqrt_shifted(), kS), kB);
  CHECK(sq.topologizable.fails());
  CHECK(sq.power_bounded.fails());
  CHECK(sq.mean_ergodic.fails());
  CHECK(d0.consistent());
  CHECK(dd.consistent());
  CHECK(sq.consistent());
}

TEST_CASE("discontinuous operator fails everything") {
  const PropertyReport r = full_report(back(WeightSequence::exp_exp(), kEntire), kB);
  CHECK(r.continuity.fails());
  CHECK(r.mean_ergodic.fails());
  CHECK(r.power_bounded.fails());
}
