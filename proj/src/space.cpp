#include "shiftlab/space.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace shiftlab {

PNorm PNorm::finite(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error("p must be 0, >= 1, or inf");
  return PNorm(p);
}

PNorm PNorm::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw Error("cannot parse p value '" + text + "'");
  if (v == 0.0) return zero();
  return finite(v);
}

std::string PNorm::to_string() const {
  if (is_infinity()) return "inf";
  std::ostringstream os;
  os << p_;
  return os.str();
}

KoetheMatrix::KoetheMatrix(std::string name, Generator log_entry, bool columns_increasing_in_n,
                           bool columns_decreasing_in_n, std::size_t rows)
    : name_(std::move(name)),
      gen_(std::move(log_entry)),
      increasing_(columns_increasing_in_n),
      decreasing_(columns_decreasing_in_n),
      rows_(rows) {}

double KoetheMatrix::entry(std::size_t n, std::size_t k) const { return std::exp(gen_(n, k)); }

KoetheMatrix KoetheMatrix::ones() {
  return KoetheMatrix("ones", [](std::size_t, std::size_t) { return 0.0; }, true, true);
}

KoetheMatrix KoetheMatrix::polynomial() {
  return KoetheMatrix(
      "polynomial",
      [](std::size_t n, std::size_t k) { return static_cast<double>(k) * std::log1p(static_cast<double>(n)); },
      true, false);
}

KoetheMatrix KoetheMatrix::infinite_type(const ExponentSequence& alpha) {
  return KoetheMatrix(
      "exp(k*alpha_n), alpha=" + alpha.name(),
      [alpha](std::size_t n, std::size_t k) { return static_cast<double>(k) * alpha(n); }, true, false,
      alpha.length());
}

KoetheMatrix KoetheMatrix::finite_type(const ExponentSequence& alpha) {
  return KoetheMatrix(
      "exp(-alpha_n/(k+1)), alpha=" + alpha.name(),
      [alpha](std::size_t n, std::size_t k) { return -alpha(n) / (static_cast<double>(k) + 1.0); }, false,
      true, alpha.length());
}

void KoetheMatrix::validate(std::size_t n_probe, std::size_t k_probe) const {
  n_probe = std::min(n_probe, rows_);
  for (std::size_t n = 0; n < n_probe; ++n) {
    bool positive = false;
    double prev = kNegInf;
    for (std::size_t k = 0; k <= k_probe; ++k) {
      const double v = gen_(n, k);
      if (std::isnan(v) || v == kInf)
        throw Error("Köthe matrix '" + name_ + "' has invalid entry at (" + std::to_string(n) + "," +
                    std::to_string(k) + ")");
      if (v < prev)
        throw Error("Köthe matrix '" + name_ + "' is not monotone in k at row " + std::to_string(n));
      prev = v;
      positive = positive || v > kNegInf;
    }
    if (!positive)
      throw Error("Köthe matrix '" + name_ + "' has no positive entry in row " + std::to_string(n));
  }
}

const char* to_string(PowerSeriesType t) { return t == PowerSeriesType::Finite ? "finite" : "infinite"; }

std::string SpaceSpec::describe() const {
  std::string s;
  if (power_series) {
    s = std::string(power_series->type == PowerSeriesType::Finite ? "Lambda_0(" : "Lambda_inf(") +
        power_series->alpha.name() + ")";
  } else {
    s = "lambda(" + matrix.name() + ")";
  }
  return s + ", p=" + p.to_string();
}

SpaceSpec make_power_series_space(const ExponentSequence& alpha, PowerSeriesType type, PNorm p) {
  alpha.validate();
  KoetheMatrix m = type == PowerSeriesType::Infinite ? KoetheMatrix::infinite_type(alpha)
                                                     : KoetheMatrix::finite_type(alpha);
  return SpaceSpec{std::move(m), p, PowerSeriesTag{type, alpha}};
}

SpaceSpec make_koethe_space(KoetheMatrix matrix, PNorm p) {
  matrix.validate();
  return SpaceSpec{std::move(matrix), p, std::nullopt};
}

bool FiniteVector::is_zero() const {
  return std::all_of(coef_.begin(), coef_.end(), [](double c) { return c == 0.0; });
}

std::size_t FiniteVector::support_end() const {
  std::size_t n = coef_.size();
  while (n > 0 && coef_[n - 1] == 0.0) --n;
  return n;
}

FiniteVector FiniteVector::scaled(double c) const {
  FiniteVector r = *this;
  for (double& v : r.coef_) v *= c;
  return r;
}

FiniteVector operator+(const FiniteVector& a, const FiniteVector& b) {
  std::vector<double> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return FiniteVector(std::move(out));
}

FiniteVector operator-(const FiniteVector& a, const FiniteVector& b) {
  std::vector<double> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return FiniteVector(std::move(out));
}

FiniteVector basis_vector(std::size_t r) {
  std::vector<double> c(r + 1, 0.0);
  c[r] = 1.0;
  return FiniteVector(std::move(c));
}

double combine_log_terms(const std::vector<double>& log_terms, PNorm p) {
  if (p.is_sup()) {
    double hi = kNegInf;
    for (double t : log_terms) hi = std::max(hi, t);
    return hi;
  }
  const double pv = p.value();
  LogSumAccumulator acc;
  for (double t : log_terms) acc.add(pv * t);
  const double s = acc.log_value();
  return s == kNegInf || s == kInf ? s : s / pv;
}

double seminorm_log(const FiniteVector& x, std::size_t k, const SpaceSpec& space) {
  std::vector<double> terms;
  terms.reserve(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (x[n] == 0.0) continue;
    terms.push_back(std::log(std::fabs(x[n])) + space.matrix.log_entry(n, k));
  }
  return combine_log_terms(terms, space.p);
}

double seminorm(const FiniteVector& x, std::size_t k, const SpaceSpec& space) {
  const double l = seminorm_log(x, k, space);
  return l == kNegInf ? 0.0 : std::exp(l);
}

}  // namespace shiftlab
