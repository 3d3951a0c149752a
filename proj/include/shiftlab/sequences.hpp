#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftlab/lazy_sequence.hpp"
#include "shiftlab/log_real.hpp"

namespace shiftlab {

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a criterion is applied outside its hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised when a finite table is queried past its last row.
class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class ExponentSequence;

/// Real weight sequence (w_n) backed by a generator with memoized
/// log-magnitude prefix sums, so that any window product
/// prod_{j=n}^{n+m-1} w_j is an O(1) query.
class WeightSequence {
 public:
  using Generator = std::function<LogReal(std::size_t)>;

  WeightSequence(std::string name, Generator gen, std::size_t length = kUnbounded);

  static WeightSequence constant(double c);
  static WeightSequence zero() { return constant(0.0); }
  /// w_n = (n+1)^theta
  static WeightSequence polynomial(double theta);
  /// w_n = n  (so w_0 = 0)
  static WeightSequence identity();
  /// w_n = exp(gamma * alpha_n)
  static WeightSequence exp_alpha(double gamma, const ExponentSequence& alpha);
  /// w_n = 1 / max(1, n)
  static WeightSequence reciprocal_factorial();
  /// w_n = sqrt(n+1)
  static WeightSequence sqrt_shifted();
  /// w_n = sqrt(n)
  static WeightSequence sqrt_index();
  /// w_n = exp(exp(n)); ln w_n overflows to +inf past n ~ 709.
  static WeightSequence exp_exp();
  static WeightSequence table(std::vector<double> values, std::string name = "table");

  const std::string& name() const { return impl_->name; }
  /// Number of defined entries (kUnbounded for generator families).
  std::size_t length() const { return impl_->length; }

  LogReal at(std::size_t n) const;
  double value(std::size_t n) const { return at(n).value(); }
  double log_abs(std::size_t n) const { return at(n).log_magnitude(); }

  /// prod_{j=n}^{n+m-1} w_j in log form; m = 0 gives one.
  LogReal window(std::size_t n, std::size_t m) const;
  /// ln|prod_{j=n}^{n+m-1} w_j|; -inf when a zero weight lies in the window.
  double window_log(std::size_t n, std::size_t m) const { return window(n, m).log_magnitude(); }

  /// True when no w_j with j < n is negative.
  bool nonnegative_below(std::size_t n) const;
  /// True when w_j = 0 for all j < n.
  bool zero_below(std::size_t n) const;

  /// Precompute entries [0, n) so later reads in worker threads take the lock-free path.
  void prefetch(std::size_t n) const;

 private:
  struct Entry {
    double log_abs = kNegInf;  // ln|w_i|
    int sign = 0;
    double prefix_hi = 0.0;  // compensated sum of finite ln|w_j|, j < i
    double prefix_lo = 0.0;
    std::uint32_t zeros = 0;  // #{j < i : w_j = 0}
    std::uint32_t negatives = 0;
    std::uint32_t infinities = 0;  // #{j < i : ln|w_j| = +inf}
  };
  struct Impl {
    std::string name;
    Generator gen;
    std::size_t length;
    ChunkedMemo<Entry> memo;
    Impl(std::string n, Generator g, std::size_t len);
  };
  const Entry& entry(std::size_t i) const;

  std::shared_ptr<const Impl> impl_;
};

enum class ExponentFamily { Linear, Logarithmic, Power, Table, Custom };

/// Monotonically increasing exponent sequence alpha_n >= 0 with alpha_n -> inf.
class ExponentSequence {
 public:
  using Generator = std::function<double(std::size_t)>;

  ExponentSequence(ExponentFamily family, std::string name, Generator gen,
                   std::size_t length = kUnbounded, double theta = 1.0);

  /// alpha_n = n + 1
  static ExponentSequence linear();
  /// alpha_n = ln(n + 1)
  static ExponentSequence logarithmic();
  /// alpha_n = (n + 1)^theta
  static ExponentSequence power(double theta);
  static ExponentSequence table(std::vector<double> values, std::string name = "table");

  ExponentFamily family() const { return impl_->family; }
  const std::string& name() const { return impl_->name; }
  double theta() const { return impl_->theta; }
  std::size_t length() const { return impl_->length; }

  double operator()(std::size_t n) const;

  /// Checks nonnegativity, monotonicity on [0, n) and growth alpha_{2N} > alpha_N at sampled N.
  /// Throws Error on violation.
  void validate(std::size_t n = 4096) const;

  void prefetch(std::size_t n) const;

 private:
  struct Impl {
    ExponentFamily family;
    std::string name;
    Generator gen;
    std::size_t length;
    double theta;
    ChunkedMemo<double> memo;
    Impl(ExponentFamily f, std::string n, Generator g, std::size_t len, double th);
  };
  std::shared_ptr<const Impl> impl_;
};

const char* to_string(ExponentFamily f);

}  // namespace shiftlab
