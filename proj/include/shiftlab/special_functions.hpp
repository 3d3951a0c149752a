#pragma once

#include <cstddef>

namespace shiftlab {

/// ln Gamma(x) for x > 0. Lanczos (g = 7) below 10, Stirling series above.
double log_gamma(double x);

/// ln n!
double log_factorial(std::size_t n);

/// ln((n+m)! / n!) = ln((n+1)(n+2)...(n+m))
double log_rising(std::size_t n, std::size_t m);

}  // namespace shiftlab
