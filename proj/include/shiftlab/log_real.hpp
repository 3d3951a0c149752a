#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace shiftlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Signed real stored as (sign, ln|x|). Zero is {0, -inf}.
class LogReal {
 public:
  constexpr LogReal() = default;

  static LogReal from_log(double log_magnitude, int sign = 1) {
    if (sign == 0 || log_magnitude == kNegInf) return LogReal{};
    return LogReal{log_magnitude, sign > 0 ? 1 : -1};
  }

  static LogReal from_value(double v) {
    if (v == 0.0) return LogReal{};
    return LogReal{std::log(std::fabs(v)), v > 0 ? 1 : -1};
  }

  static constexpr LogReal zero() { return LogReal{}; }
  static constexpr LogReal one() { return LogReal{0.0, 1}; }

  constexpr double log_magnitude() const { return log_mag_; }
  constexpr int sign() const { return sign_; }
  constexpr bool is_zero() const { return sign_ == 0; }

  /// exp(log|x|) with sign; saturates to +-inf.
  double value() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(log_mag_); }

  LogReal abs() const { return sign_ == 0 ? LogReal{} : LogReal{log_mag_, 1}; }

  friend LogReal operator*(LogReal a, LogReal b) {
    if (a.sign_ == 0 || b.sign_ == 0) return LogReal{};
    return LogReal{a.log_mag_ + b.log_mag_, a.sign_ * b.sign_};
  }
  friend LogReal operator/(LogReal a, LogReal b) {
    // 0/0 := 0; a/0 := +inf for a != 0.
    if (a.sign_ == 0) return LogReal{};
    if (b.sign_ == 0) return LogReal{kInf, a.sign_};
    return LogReal{a.log_mag_ - b.log_mag_, a.sign_ * b.sign_};
  }
  friend bool operator==(LogReal a, LogReal b) {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.log_mag_ == b.log_mag_);
  }

 private:
  constexpr LogReal(double lm, int s) : log_mag_(lm), sign_(s) {}

  double log_mag_ = kNegInf;
  int sign_ = 0;
};

/// ln(sum exp(x_i)) with max extraction. Empty or all -inf gives -inf.
inline double log_sum_exp(std::span<const double> xs) {
  double hi = kNegInf;
  for (double x : xs) hi = std::max(hi, x);
  if (hi == kNegInf || hi == kInf) return hi;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

/// Streaming log-sum-exp; rescales when a larger term arrives.
class LogSumAccumulator {
 public:
  void add(double log_term) {
    if (log_term == kNegInf) return;
    if (log_term == kInf) {
      ref_ = kInf;
      return;
    }
    if (ref_ == kInf) return;
    if (log_term > ref_) {
      sum_ = sum_ * std::exp(ref_ - log_term) + 1.0;
      ref_ = log_term;
    } else {
      sum_ += std::exp(log_term - ref_);
    }
  }
  double log_value() const {
    if (ref_ == kNegInf || ref_ == kInf) return ref_;
    return ref_ + std::log(sum_);
  }

 private:
  double ref_ = kNegInf;
  double sum_ = 0.0;
};

/// Signed streaming sum of terms sign*exp(log_mag), kept as mantissa*exp(ref).
/// Cancellation is performed in plain arithmetic on the rescaled mantissa.
class SignedLogAccumulator {
 public:
  void add(LogReal t) {
    if (t.is_zero()) return;
    const double lm = t.log_magnitude();
    if (lm == kInf) {
      saturated_ = true;
      return;
    }
    if (ref_ == kNegInf) {
      ref_ = lm;
      sum_ = t.sign();
      comp_ = 0.0;
      return;
    }
    if (lm > ref_ + 32.0) {
      const double scale = std::exp(ref_ - lm);
      sum_ *= scale;
      comp_ *= scale;
      ref_ = lm;
    }
    // Kahan-Babuska compensated addition
    const double term = t.sign() * std::exp(lm - ref_);
    const double s = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term))
      comp_ += (sum_ - s) + term;
    else
      comp_ += (term - s) + sum_;
    sum_ = s;
  }
  LogReal value() const {
    if (saturated_) return LogReal::from_log(kInf, 1);
    const double total = sum_ + comp_;
    if (total == 0.0 || ref_ == kNegInf) return LogReal::zero();
    return LogReal::from_log(ref_ + std::log(std::fabs(total)), total > 0 ? 1 : -1);
  }

 private:
  double ref_ = kNegInf;
  double sum_ = 0.0;
  double comp_ = 0.0;
  bool saturated_ = false;
};

}  // namespace shiftlab
