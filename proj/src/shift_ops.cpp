#include "shiftlab/shift_ops.hpp"

#include <cmath>
#include <vector>

namespace shiftlab {

namespace {

double to_log_or_zero(double v) { return v == 0.0 ? kNegInf : std::log(std::fabs(v)); }

double finish(double log_value) { return log_value == kNegInf ? 0.0 : std::exp(log_value); }

void require_n(std::size_t n) {
  if (n == 0) throw PreconditionError("Cesaro mean needs n >= 1");
}

}  // namespace

const char* to_string(ShiftKind kind) { return kind == ShiftKind::Backward ? "backward" : "forward"; }

std::string ShiftOperatorSpec::describe() const {
  return std::string(to_string(kind)) + " shift, w=" + w.name() + " on " + space.describe();
}

LogReal backward_kernel(const WeightSequence& w, std::size_t r, std::size_t m) {
  if (m > r) return LogReal::zero();
  return w.window(r - m, m);
}

LogReal forward_kernel(const WeightSequence& w, std::size_t r, std::size_t m) { return w.window(r + 1, m); }

FiniteVector apply(const ShiftOperatorSpec& op, const FiniteVector& x) { return iterate(op, x, 1); }

FiniteVector iterate(const ShiftOperatorSpec& op, const FiniteVector& x, std::size_t m) {
  if (m == 0) return x;
  const std::size_t len = x.support_end();
  if (op.backward()) {
    if (len <= m) return FiniteVector();
    std::vector<double> y(len - m, 0.0);
    for (std::size_t n = 0; n + m < len; ++n) {
      const double xv = x[n + m];
      if (xv == 0.0) continue;
      y[n] = (LogReal::from_value(xv) * op.w.window(n, m)).value();
    }
    return FiniteVector(std::move(y));
  }
  std::vector<double> y(len + m, 0.0);
  for (std::size_t r = 0; r < len; ++r) {
    const double xv = x[r];
    if (xv == 0.0) continue;
    // (F^m x)_{r+m} = x_r prod_{s=1}^m w_{r+s}
    y[r + m] = (LogReal::from_value(xv) * forward_kernel(op.w, r, m)).value();
  }
  return FiniteVector(std::move(y));
}

double iterate_seminorm_log(const ShiftOperatorSpec& op, const FiniteVector& x, std::size_t m, std::size_t k) {
  const std::size_t len = x.support_end();
  const KoetheMatrix& a = op.space.matrix;
  std::vector<double> terms;
  terms.reserve(len);
  for (std::size_t n = 0; n < len; ++n) {
    const double xl = to_log_or_zero(x[n]);
    if (xl == kNegInf) continue;
    if (op.backward()) {
      if (n < m) continue;
      const LogReal win = backward_kernel(op.w, n, m);
      if (win.is_zero()) continue;
      terms.push_back(xl + win.log_magnitude() + a.log_entry(n - m, k));
    } else {
      const LogReal win = forward_kernel(op.w, n, m);
      if (win.is_zero()) continue;
      terms.push_back(xl + win.log_magnitude() + a.log_entry(n + m, k));
    }
  }
  return combine_log_terms(terms, op.space.p);
}

double iterate_seminorm(const ShiftOperatorSpec& op, const FiniteVector& x, std::size_t m, std::size_t k) {
  return finish(iterate_seminorm_log(op, x, m, k));
}

FiniteVector cesaro_mean(const ShiftOperatorSpec& op, const FiniteVector& x, std::size_t n) {
  require_n(n);
  const std::size_t len = x.support_end();
  const std::size_t out = op.backward() ? len : len + n;
  std::vector<double> y(out, 0.0);
  const LogReal inv_n = LogReal::from_log(-std::log(static_cast<double>(n)));
  for (std::size_t j = 0; j < out; ++j) {
    SignedLogAccumulator acc;
    for (std::size_t m = 1; m <= n; ++m) {
      if (op.backward()) {
        if (j + m >= len) break;
        const double xv = x[j + m];
        if (xv != 0.0) acc.add(LogReal::from_value(xv) * op.w.window(j, m));
      } else {
        if (m > j) break;
        const double xv = x[j - m];
        if (xv != 0.0) acc.add(LogReal::from_value(xv) * forward_kernel(op.w, j - m, m));
      }
    }
    y[j] = (acc.value() * inv_n).value();
  }
  return FiniteVector(std::move(y));
}

double cesaro_seminorm_log(const ShiftOperatorSpec& op, const FiniteVector& x, std::size_t n, std::size_t k) {
  require_n(n);
  const std::size_t len = x.support_end();
  const std::size_t out = op.backward() ? len : len + n;
  const double log_n = std::log(static_cast<double>(n));
  const KoetheMatrix& a = op.space.matrix;
  std::vector<double> terms;
  terms.reserve(out);
  for (std::size_t j = 0; j < out; ++j) {
    SignedLogAccumulator acc;
    for (std::size_t m = 1; m <= n; ++m) {
      if (op.backward()) {
        // prod_{t=0}^{m-1} w_{j+t} x_{j+m}
        if (j + m >= len) break;
        const double xv = x[j + m];
        if (xv != 0.0) acc.add(LogReal::from_value(xv) * op.w.window(j, m));
      } else {
        // prod_{t=0}^{m-1} w_{j-t} x_{j-m}
        if (m > j) break;
        const double xv = x[j - m];
        if (xv != 0.0) acc.add(LogReal::from_value(xv) * op.w.window(j - m + 1, m));
      }
    }
    const LogReal s = acc.value();
    if (s.is_zero()) continue;
    const double aj = a.log_entry(j, k);
    if (aj == kNegInf) continue;
    terms.push_back(s.log_magnitude() + aj - log_n);
  }
  return combine_log_terms(terms, op.space.p);
}

double cesaro_seminorm(const ShiftOperatorSpec& op, const FiniteVector& x, std::size_t n, std::size_t k) {
  return finish(cesaro_seminorm_log(op, x, n, k));
}

}  // namespace shiftlab
