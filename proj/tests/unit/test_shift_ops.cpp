#include <doctest.h>

#include <cmath>
#include <random>

#include "shiftlab/shift_ops.hpp"

using namespace shiftlab;

namespace {

const SpaceSpec kEntire = make_power_series_space(ExponentSequence::linear(), PowerSeriesType::Infinite, PNorm::finite(1));
const SpaceSpec kDisc = make_power_series_space(ExponentSequence::linear(), PowerSeriesType::Finite, PNorm::finite(1));

ShiftOperatorSpec back(WeightSequence w, const SpaceSpec& s = kEntire) { return {ShiftKind::Backward, std::move(w), s}; }
ShiftOperatorSpec fwd(WeightSequence w, const SpaceSpec& s = kEntire) { return {ShiftKind::Forward, std::move(w), s}; }

void check_vec(const FiniteVector& got, std::vector<double> want, double tol = 1e-14) {
  const std::size_t n = std::max(got.size(), want.size());
  want.resize(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(tol));
}

FiniteVector random_vector(std::mt19937_64& rng, std::size_t len) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(len);
  for (auto& v : c) v = u(rng);
  return FiniteVector(c);
}

}  // namespace

TEST_CASE("single application") {
  check_vec(apply(back(WeightSequence::polynomial(1.0)), basis_vector(2)), {0, 2});
  check_vec(apply(fwd(WeightSequence::identity()), basis_vector(1)), {0, 0, 2});
  CHECK(apply(back(WeightSequence::polynomial(3.0)), basis_vector(0)).is_zero());
}

TEST_CASE("iterates") {
  check_vec(iterate(back(WeightSequence::polynomial(1.0)), basis_vector(3), 2), {0, 6});
  check_vec(iterate(fwd(WeightSequence::reciprocal_factorial()), basis_vector(0), 3), {0, 0, 0, 1.0 / 6.0});
  const FiniteVector x({1, -2, 3});
  check_vec(iterate(back(WeightSequence::polynomial(1.0)), x, 0), x.coefficients());
  // differentiation three times on z^3
  check_vec(iterate(back(WeightSequence::polynomial(1.0)), basis_vector(3), 3), {6});
}

TEST_CASE("iterate seminorm examples") {
  CHECK(iterate_seminorm(back(WeightSequence::constant(1.0)), basis_vector(3), 2, 1) ==
        doctest::Approx(std::exp(2.0)));
  CHECK(iterate_seminorm(fwd(WeightSequence::reciprocal_factorial(), kDisc), basis_vector(0), 3, 0) ==
        doctest::Approx(std::exp(-4.0) / 6.0).epsilon(1e-14));
}

TEST_CASE("Cesaro mean examples") {
  check_vec(cesaro_mean(back(WeightSequence::constant(1.0)), basis_vector(2), 3), {1.0 / 3, 1.0 / 3});
  check_vec(cesaro_mean(fwd(WeightSequence::constant(1.0)), basis_vector(0), 2), {0, 0.5, 0.5});
  const auto op = fwd(WeightSequence::sqrt_shifted());
  const FiniteVector x({0.5, 1, -1});
  check_vec(cesaro_mean(op, x, 1), apply(op, x).coefficients());
}

TEST_CASE("Cesaro seminorm on the backward shift of ones") {
  const auto op = back(WeightSequence::constant(1.0));
  const double want = (std::exp(1.0) + std::exp(2.0) + std::exp(3.0) + std::exp(4.0) + std::exp(5.0)) / 10.0;
  CHECK(cesaro_seminorm(op, basis_vector(5), 10, 1) == doctest::Approx(want).epsilon(1e-14));
  CHECK(want == doctest::Approx(23.32).epsilon(1e-3));
}

TEST_CASE("zero weight annihilates") {
  const auto op = back(WeightSequence::zero());
  for (std::size_t n = 1; n < 5; ++n)
    for (std::size_t k = 0; k < 3; ++k) CHECK(cesaro_seminorm(op, FiniteVector({1, 2, 3}), n, k) == 0.0);
}

TEST_CASE("closed forms agree with direct evaluation") {
  std::mt19937_64 rng(11);
  const WeightSequence ws[] = {WeightSequence::constant(1.7), WeightSequence::polynomial(1.0),
                               WeightSequence::sqrt_shifted(), WeightSequence::reciprocal_factorial(),
                               WeightSequence::table({1, -2, 0.5, 3, -1, 2, 2, 0.25, 1, 1, 4, -3, 1, 1, 1, 1, 1, 1, 1, 1,
                                                      1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})};
  for (const auto& w : ws) {
    for (const SpaceSpec* s : {&kEntire, &kDisc}) {
      for (ShiftKind kind : {ShiftKind::Backward, ShiftKind::Forward}) {
        const ShiftOperatorSpec op{kind, w, *s};
        for (int t = 0; t < 4; ++t) {
          const FiniteVector x = random_vector(rng, 8);
          const std::size_t m = 1 + rng() % 12, k = rng() % 5;
          const double direct = seminorm(iterate(op, x, m), k, *s);
          CHECK(iterate_seminorm(op, x, m, k) == doctest::Approx(direct).epsilon(1e-10));
          const double dc = seminorm(cesaro_mean(op, x, m), k, *s);
          CHECK(cesaro_seminorm(op, x, m, k) == doctest::Approx(dc).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("Cesaro identity holds coordinatewise") {
  std::mt19937_64 rng(5);
  for (ShiftKind kind : {ShiftKind::Backward, ShiftKind::Forward}) {
    const ShiftOperatorSpec op{kind, WeightSequence::sqrt_shifted(), kEntire};
    for (int t = 0; t < 20; ++t) {
      const FiniteVector x = random_vector(rng, 10);
      const std::size_t n = 2 + rng() % 20;
      const FiniteVector lhs = iterate(op, x, n).scaled(1.0 / n);
      const FiniteVector a = cesaro_mean(op, x, n);
      const FiniteVector b = cesaro_mean(op, x, n - 1).scaled((n - 1.0) / n);
      const FiniteVector rhs = a - b;
      // error measured against the terms being subtracted
      for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i)
        CHECK(std::fabs(lhs[i] - rhs[i]) <= 1e-12 * std::max({1.0, std::fabs(a[i]), std::fabs(b[i])}));
    }
  }
}

TEST_CASE("semigroup and homogeneity") {
  std::mt19937_64 rng(3);
  for (ShiftKind kind : {ShiftKind::Backward, ShiftKind::Forward}) {
    const ShiftOperatorSpec op{kind, WeightSequence::polynomial(0.5), kDisc};
    for (int t = 0; t < 20; ++t) {
      const FiniteVector x = random_vector(rng, 12);
      const std::size_t a = rng() % 6, b = rng() % 6;
      const FiniteVector lhs = iterate(op, iterate(op, x, a), b);
      const FiniteVector rhs = iterate(op, x, a + b);
      for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i)
        CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-13));
      const FiniteVector s1 = iterate(op, x.scaled(-3.0), a + 1);
      const FiniteVector s2 = iterate(op, x, a + 1).scaled(-3.0);
      for (std::size_t i = 0; i < std::max(s1.size(), s2.size()); ++i)
        CHECK(s1[i] == doctest::Approx(s2[i]).epsilon(1e-13));
    }
  }
}

TEST_CASE("diagonal conjugation intertwines weighted shifts") {
  // D B_w = B_v D with D = diag(d_n), v_n = w_n d_n / d_{n+1}
  std::vector<double> d(30), w(30), v(30);
  for (std::size_t n = 0; n < 30; ++n) {
    d[n] = std::tgamma(n + 1.0);
    w[n] = 1.0 + 0.1 * n;
  }
  for (std::size_t n = 0; n + 1 < 30; ++n) v[n] = w[n] * d[n] / d[n + 1];
  v[29] = 1.0;
  const ShiftOperatorSpec bw = back(WeightSequence::table(w));
  const ShiftOperatorSpec bv = back(WeightSequence::table(v));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const FiniteVector x = random_vector(rng, 20);
    std::vector<double> dx(20);
    for (std::size_t n = 0; n < 20; ++n) dx[n] = d[n] * x[n];
    const FiniteVector lhs = iterate(bw, x, 3);
    const FiniteVector rhs = iterate(bv, FiniteVector(dx), 3);
    for (std::size_t n = 0; n < 17; ++n) CHECK(d[n] * lhs[n] == doctest::Approx(rhs[n]).epsilon(1e-12));
  }
}

TEST_CASE("forward kernel and backward kernel") {
  const auto w = WeightSequence::polynomial(1.0);
  CHECK(backward_kernel(w, 3, 2).value() == doctest::Approx(3.0 * 2.0));
  CHECK(backward_kernel(w, 1, 3).is_zero());
  CHECK(forward_kernel(w, 0, 3).value() == doctest::Approx(2.0 * 3.0 * 4.0));
}
