#include <doctest.h>

#include <cmath>

#include "shiftlab/sweep.hpp"

using namespace shiftlab;

TEST_CASE("levels double and respect the cap") {
  TruncationBudget b;
  b.n_max = 10;
  b.m_max = 5;
  b.doublings = 3;
  const LevelBounds lv = make_levels(b);
  REQUIRE(lv.levels() == 4);
  CHECK(lv.n_bound[3] == 80);
  CHECK(lv.m_bound[3] == 40);
  CHECK(lv.level_of(11, 1) == 1);
  CHECK(make_levels(b, 40).levels() == 2);
}

TEST_CASE("sparse grid is sorted and contains the ends") {
  const auto g = sparse_grid(0, 100000, {777});
  CHECK(g.front() == 0);
  CHECK(g.back() == 100000);
  CHECK(std::is_sorted(g.begin(), g.end()));
  CHECK(std::find(g.begin(), g.end(), 777u) != g.end());
  CHECK(g.size() < 1000);
}

TEST_CASE("limsup estimate of simple sequences") {
  TruncationBudget b;
  const auto one = estimate_limsup([](std::size_t n) { return 1.0 - 1.0 / (n + 1.0); }, 1, 1 << 20);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(judge_limsup(one, LimsupTest::Finite, b) == Outcome::Holds);
  CHECK(judge_limsup(one, LimsupTest::NonPositive, b) == Outcome::Fails);
  const auto grow = estimate_limsup([](std::size_t n) { return std::log(n + 1.0); }, 1, 1 << 20);
  CHECK(judge_limsup(grow, LimsupTest::Finite, b) == Outcome::Fails);
  const auto neg = estimate_limsup([](std::size_t) { return -0.5; }, 1, 1 << 20);
  CHECK(judge_limsup(neg, LimsupTest::Negative, b) == Outcome::Holds);
  const auto zero = estimate_limsup([](std::size_t n) { return -1.0 / (n + 1.0); }, 1, 1 << 20);
  CHECK(judge_limsup(zero, LimsupTest::NonPositive, b) == Outcome::Holds);
  CHECK(judge_limsup(zero, LimsupTest::Negative, b) != Outcome::Holds);
}

TEST_CASE("least squares slope") {
  CHECK(fit_slope({0, 1, 2, 3}, {1, 3, 5, 7}) == doctest::Approx(2.0));
  CHECK(fit_slope({0}, {1}) == 0.0);
}

TEST_CASE("superior limit along n+m") {
  TruncationBudget b;
  const auto inv = limsup_along_n_plus_m([](std::size_t n, std::size_t m) { return 1.0 / double(n + m); }, b);
  CHECK(inv.estimate.value == doctest::Approx(0.0).epsilon(1e-4));
  CHECK(inv.estimate.value < 1e-4);
  const auto frac = limsup_along_n_plus_m([](std::size_t n, std::size_t m) { return double(m) / double(n + m); }, b);
  CHECK(frac.estimate.value == doctest::Approx(1.0));
  CHECK(frac.arg_n == 0);
  const auto c = limsup_along_n_plus_m([](std::size_t, std::size_t) { return 2.5; }, b);
  CHECK(c.estimate.value == doctest::Approx(2.5));
}

TEST_CASE("exists-l decision on synthetic profiles") {
  TruncationBudget b;
  auto profile = [](std::vector<double> v) {
    LevelProfile p(v.size());
    for (std::size_t s = 0; s < v.size(); ++s) p.offer(s, v[s], s, 0);
    p.accumulate();
    return p;
  };
  // l = 0 grows, l = 1 is flat
  std::vector<std::vector<LevelProfile>> per_l{{profile({0, 1, 2, 3, 4, 5})}, {profile({1, 1, 1, 1, 1, 1})}};
  const KDecision d = decide_exists_l(0, per_l, b);
  CHECK(d.outcome == Outcome::Holds);
  CHECK(d.l == 1u);
  std::vector<std::vector<LevelProfile>> all_grow{{profile({0, 1, 2, 3, 4, 5})}, {profile({0, 0.7, 1.4, 2.1, 2.8, 3.5})}};
  CHECK(decide_exists_l(0, all_grow, b).outcome == Outcome::Fails);
  std::vector<std::vector<LevelProfile>> few{{profile({0, 0, 0})}};
  CHECK(decide_exists_l(0, few, b).outcome == Outcome::Inconclusive);
}

TEST_CASE("budget validation and scaling") {
  TruncationBudget b;
  CHECK_NOTHROW(b.validate());
  TruncationBudget bad = b;
  bad.growth_tol = 0.0;
  CHECK_THROWS(bad.validate());
  const TruncationBudget h = b.scaled(0.5);
  CHECK(h.n_max == 1000);
  CHECK(h.m_max == 100);
  CHECK(h.k_max == b.k_max);
}
