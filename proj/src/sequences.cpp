#include "shiftlab/sequences.hpp"

#include <cmath>
#include <string>

namespace shiftlab {

namespace {

std::string fmt_double(double v) {
  std::string s = std::to_string(v);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

WeightSequence::Impl::Impl(std::string n, Generator g, std::size_t len)
    : name(std::move(n)),
      gen(std::move(g)),
      length(len),
      memo([this](std::size_t i, const ChunkedMemo<Entry>& m) {
        Entry e;
        if (i > 0) {
          const Entry& prev = m.raw(i - 1);
          e.prefix_hi = prev.prefix_hi;
          e.prefix_lo = prev.prefix_lo;
          e.zeros = prev.zeros;
          e.negatives = prev.negatives;
          e.infinities = prev.infinities;
          if (prev.sign == 0) {
            ++e.zeros;
          } else {
            if (prev.sign < 0) ++e.negatives;
            if (prev.log_abs == kInf) {
              ++e.infinities;
            } else {
              // Kahan-Babuska step
              const double t = e.prefix_hi + prev.log_abs;
              if (std::fabs(e.prefix_hi) >= std::fabs(prev.log_abs))
                e.prefix_lo += (e.prefix_hi - t) + prev.log_abs;
              else
                e.prefix_lo += (prev.log_abs - t) + e.prefix_hi;
              e.prefix_hi = t;
            }
          }
        }
        if (i < length) {
          const LogReal w = gen(i);
          e.log_abs = w.log_magnitude();
          e.sign = w.sign();
        }
        return e;
      }) {}

WeightSequence::WeightSequence(std::string name, Generator gen, std::size_t length)
    : impl_(std::make_shared<Impl>(std::move(name), std::move(gen), length)) {}

const WeightSequence::Entry& WeightSequence::entry(std::size_t i) const {
  if (impl_->length != kUnbounded && i > impl_->length)
    throw OutOfRangeError("weight table '" + impl_->name + "' has " + std::to_string(impl_->length) +
                          " rows; index " + std::to_string(i) + " requested");
  return impl_->memo.at(i);
}

LogReal WeightSequence::at(std::size_t n) const {
  if (impl_->length != kUnbounded && n >= impl_->length)
    throw OutOfRangeError("weight table '" + impl_->name + "' has " + std::to_string(impl_->length) +
                          " rows; index " + std::to_string(n) + " requested");
  const Entry& e = entry(n);
  return LogReal::from_log(e.log_abs, e.sign);
}

LogReal WeightSequence::window(std::size_t n, std::size_t m) const {
  if (m == 0) return LogReal::one();
  const Entry& a = entry(n);
  const Entry& b = entry(n + m);
  if (b.zeros != a.zeros) return LogReal::zero();
  const int sign = ((b.negatives - a.negatives) & 1u) ? -1 : 1;
  if (b.infinities != a.infinities) return LogReal::from_log(kInf, sign);
  double lm;
  if (m <= 16) {
    lm = 0.0;
    for (std::size_t j = n; j < n + m; ++j) lm += impl_->memo.raw(j).log_abs;
  } else {
    lm = (b.prefix_hi - a.prefix_hi) + (b.prefix_lo - a.prefix_lo);
  }
  return LogReal::from_log(lm, sign);
}

bool WeightSequence::nonnegative_below(std::size_t n) const { return entry(n).negatives == 0; }

bool WeightSequence::zero_below(std::size_t n) const { return entry(n).zeros == n; }

void WeightSequence::prefetch(std::size_t n) const {
  if (impl_->length != kUnbounded && n > impl_->length + 1) n = impl_->length + 1;
  impl_->memo.ensure(n);
}

WeightSequence WeightSequence::constant(double c) {
  const LogReal v = LogReal::from_value(c);
  return WeightSequence("constant(" + fmt_double(c) + ")", [v](std::size_t) { return v; });
}

WeightSequence WeightSequence::polynomial(double theta) {
  return WeightSequence("polynomial(" + fmt_double(theta) + ")", [theta](std::size_t n) {
    return LogReal::from_log(theta * std::log(static_cast<double>(n) + 1.0));
  });
}

WeightSequence WeightSequence::identity() {
  return WeightSequence("identity", [](std::size_t n) {
    return n == 0 ? LogReal::zero() : LogReal::from_log(std::log(static_cast<double>(n)));
  });
}

WeightSequence WeightSequence::exp_alpha(double gamma, const ExponentSequence& alpha) {
  return WeightSequence("exp-alpha(" + fmt_double(gamma) + "," + alpha.name() + ")",
                        [gamma, alpha](std::size_t n) { return LogReal::from_log(gamma * alpha(n)); },
                        alpha.length());
}

WeightSequence WeightSequence::reciprocal_factorial() {
  return WeightSequence("reciprocal-factorial", [](std::size_t n) {
    return n <= 1 ? LogReal::one() : LogReal::from_log(-std::log(static_cast<double>(n)));
  });
}

WeightSequence WeightSequence::sqrt_shifted() {
  return WeightSequence("sqrt-shifted", [](std::size_t n) {
    return LogReal::from_log(0.5 * std::log(static_cast<double>(n) + 1.0));
  });
}

WeightSequence WeightSequence::sqrt_index() {
  return WeightSequence("sqrt", [](std::size_t n) {
    return n == 0 ? LogReal::zero() : LogReal::from_log(0.5 * std::log(static_cast<double>(n)));
  });
}

WeightSequence WeightSequence::exp_exp() {
  return WeightSequence("exp-exp", [](std::size_t n) {
    return LogReal::from_log(std::exp(static_cast<double>(n)));
  });
}

WeightSequence WeightSequence::table(std::vector<double> values, std::string name) {
  const std::size_t len = values.size();
  auto data = std::make_shared<const std::vector<double>>(std::move(values));
  return WeightSequence(std::move(name), [data](std::size_t n) { return LogReal::from_value((*data)[n]); },
                        len);
}

// ---------------------------------------------------------------------------

ExponentSequence::Impl::Impl(ExponentFamily f, std::string n, Generator g, std::size_t len, double th)
    : family(f),
      name(std::move(n)),
      gen(std::move(g)),
      length(len),
      theta(th),
      memo([this](std::size_t i, const ChunkedMemo<double>&) { return gen(i); }) {}

ExponentSequence::ExponentSequence(ExponentFamily family, std::string name, Generator gen,
                                   std::size_t length, double theta)
    : impl_(std::make_shared<Impl>(family, std::move(name), std::move(gen), length, theta)) {}

ExponentSequence ExponentSequence::linear() {
  return ExponentSequence(ExponentFamily::Linear, "n+1",
                          [](std::size_t n) { return static_cast<double>(n) + 1.0; });
}

ExponentSequence ExponentSequence::logarithmic() {
  return ExponentSequence(ExponentFamily::Logarithmic, "ln(n+1)",
                          [](std::size_t n) { return std::log1p(static_cast<double>(n)); });
}

ExponentSequence ExponentSequence::power(double theta) {
  if (!(theta > 0.0)) throw Error("power exponent sequence needs theta > 0");
  return ExponentSequence(
      ExponentFamily::Power, "(n+1)^" + fmt_double(theta),
      [theta](std::size_t n) { return std::pow(static_cast<double>(n) + 1.0, theta); }, kUnbounded,
      theta);
}

ExponentSequence ExponentSequence::table(std::vector<double> values, std::string name) {
  const std::size_t len = values.size();
  if (len == 0) throw Error("exponent table '" + name + "' is empty");
  auto data = std::make_shared<const std::vector<double>>(std::move(values));
  ExponentSequence seq(ExponentFamily::Table, std::move(name),
                       [data](std::size_t n) { return (*data)[n]; }, len);
  seq.validate(len);
  return seq;
}

double ExponentSequence::operator()(std::size_t n) const {
  if (impl_->length != kUnbounded && n >= impl_->length)
    throw OutOfRangeError("exponent table '" + impl_->name + "' has " + std::to_string(impl_->length) +
                          " rows; index " + std::to_string(n) + " requested");
  return impl_->memo.at(n);
}

void ExponentSequence::validate(std::size_t n) const {
  if (impl_->length != kUnbounded) n = std::min(n, impl_->length);
  double prev = kNegInf;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = (*this)(i);
    if (!(a >= 0.0) || !std::isfinite(a))
      throw Error("exponent sequence '" + name() + "' has invalid value at index " + std::to_string(i));
    if (a < prev)
      throw Error("exponent sequence '" + name() + "' is not monotonically increasing at index " +
                  std::to_string(i));
    prev = a;
  }
  // alpha_n -> inf: sampled growth alpha_{2N} > alpha_N
  for (std::size_t probe = 8; 2 * probe < n; probe *= 2) {
    if (!((*this)(2 * probe) > (*this)(probe)))
      throw Error("exponent sequence '" + name() + "' does not grow between indices " +
                  std::to_string(probe) + " and " + std::to_string(2 * probe));
  }
}

void ExponentSequence::prefetch(std::size_t n) const {
  if (impl_->length != kUnbounded) n = std::min(n, impl_->length);
  impl_->memo.ensure(n);
}

const char* to_string(ExponentFamily f) {
  switch (f) {
    case ExponentFamily::Linear: return "linear";
    case ExponentFamily::Logarithmic: return "logarithmic";
    case ExponentFamily::Power: return "power";
    case ExponentFamily::Table: return "table";
    case ExponentFamily::Custom: return "custom";
  }
  return "custom";
}

}  // namespace shiftlab
