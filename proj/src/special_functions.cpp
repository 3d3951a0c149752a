#include "shiftlab/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "shiftlab/sequences.hpp"

namespace shiftlab {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos(double x) {
  // Gamma(x) = sqrt(2 pi) t^(x-1/2) e^-t A(x), t = x + 6.5
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + 7.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(a);
}

double stirling(double x) {
  // B_{2j} / (2j (2j-1) x^{2j-1}), j = 1..7
  static constexpr std::array<double, 7> c = {1.0 / 12.0,          -1.0 / 360.0,  1.0 / 1260.0,
                                              -1.0 / 1680.0,       1.0 / 1188.0,  -691.0 / 360360.0,
                                              1.0 / 156.0};
  const double r = 1.0 / x;
  const double r2 = r * r;
  double s = 0.0;
  for (std::size_t j = c.size(); j-- > 0;) s = s * r2 + c[j];
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + s * r;
}

}  // namespace

double log_gamma(double x) {
  if (std::isnan(x)) return x;
  if (x <= 0.0) throw PreconditionError("log_gamma needs x > 0");
  if (x == kInf) return kInf;
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) {
    // reflection
    return std::log(std::numbers::pi / std::fabs(std::sin(std::numbers::pi * x))) - log_gamma(1.0 - x);
  }
  if (x < 10.0) return lanczos(x);
  return stirling(x);
}

double log_factorial(std::size_t n) { return log_gamma(static_cast<double>(n) + 1.0); }

double log_rising(std::size_t n, std::size_t m) {
  if (m == 0) return 0.0;
  if (m <= 32) {
    double s = 0.0;
    for (std::size_t j = 1; j <= m; ++j) s += std::log(static_cast<double>(n + j));
    return s;
  }
  return log_gamma(static_cast<double>(n + m) + 1.0) - log_gamma(static_cast<double>(n) + 1.0);
}

}  // namespace shiftlab
