#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/sequences.hpp"

namespace shiftlab {

/// Order p of an echelon space: 0, a finite p >= 1, or infinity.
class PNorm {
 public:
  static PNorm zero() { return PNorm(0.0); }
  static PNorm infinity() { return PNorm(kInf); }
  static PNorm finite(double p);
  /// Accepts "0", "inf", or a number >= 1.
  static PNorm parse(const std::string& text);

  double value() const { return p_; }
  bool is_zero() const { return p_ == 0.0; }
  bool is_infinity() const { return p_ == kInf; }
  /// p in {0, inf}: sup-type seminorm.
  bool is_sup() const { return is_zero() || is_infinity(); }
  bool reflexive_range() const { return p_ > 1.0 && p_ < kInf; }
  std::string to_string() const;

  friend bool operator==(PNorm a, PNorm b) { return a.p_ == b.p_; }

 private:
  explicit PNorm(double p) : p_(p) {}
  double p_;
};

/// Köthe matrix A = (a_{n,k}) given by its log-entries ln a_{n,k} (-inf for zero).
class KoetheMatrix {
 public:
  using Generator = std::function<double(std::size_t n, std::size_t k)>;

  KoetheMatrix(std::string name, Generator log_entry, bool columns_increasing_in_n = false,
               bool columns_decreasing_in_n = false, std::size_t rows = kUnbounded);

  /// a_{n,k} = 1
  static KoetheMatrix ones();
  /// a_{n,k} = (n+1)^k
  static KoetheMatrix polynomial();
  /// a_{n,k} = exp(k alpha_n)
  static KoetheMatrix infinite_type(const ExponentSequence& alpha);
  /// a_{n,k} = exp(-alpha_n / (k+1))
  static KoetheMatrix finite_type(const ExponentSequence& alpha);

  const std::string& name() const { return name_; }
  double log_entry(std::size_t n, std::size_t k) const { return gen_(n, k); }
  double entry(std::size_t n, std::size_t k) const;
  bool columns_increasing_in_n() const { return increasing_; }
  bool columns_decreasing_in_n() const { return decreasing_; }
  /// Number of defined rows (kUnbounded for generator families).
  std::size_t rows() const { return rows_; }

  /// Sampled check of 0 <= a_{n,k} <= a_{n,k+1} and row positivity for k <= k_probe.
  void validate(std::size_t n_probe = 256, std::size_t k_probe = 16) const;

 private:
  std::string name_;
  Generator gen_;
  bool increasing_;
  bool decreasing_;
  std::size_t rows_;
};

enum class PowerSeriesType { Finite, Infinite };

const char* to_string(PowerSeriesType t);

struct PowerSeriesTag {
  PowerSeriesType type;
  ExponentSequence alpha;
};

/// An echelon space lambda_p(A), optionally tagged as a power series space.
struct SpaceSpec {
  KoetheMatrix matrix;
  PNorm p;
  std::optional<PowerSeriesTag> power_series;

  std::string describe() const;
};

SpaceSpec make_power_series_space(const ExponentSequence& alpha, PowerSeriesType type, PNorm p);
SpaceSpec make_koethe_space(KoetheMatrix matrix, PNorm p);

/// Finitely supported vector; x_n = 0 for n >= size() and for negative n.
class FiniteVector {
 public:
  FiniteVector() = default;
  explicit FiniteVector(std::vector<double> coefficients) : coef_(std::move(coefficients)) {}

  std::size_t size() const { return coef_.size(); }
  double operator[](std::size_t n) const { return n < coef_.size() ? coef_[n] : 0.0; }
  double at_signed(long long n) const { return n < 0 ? 0.0 : (*this)[static_cast<std::size_t>(n)]; }
  const std::vector<double>& coefficients() const { return coef_; }
  std::vector<double>& coefficients() { return coef_; }
  bool is_zero() const;
  /// Index one past the last nonzero coefficient.
  std::size_t support_end() const;

  FiniteVector scaled(double c) const;
  friend FiniteVector operator+(const FiniteVector& a, const FiniteVector& b);
  friend FiniteVector operator-(const FiniteVector& a, const FiniteVector& b);

 private:
  std::vector<double> coef_;
};

FiniteVector basis_vector(std::size_t r);

/// ln ||x||_{k,p}; -inf for the zero vector.
double seminorm_log(const FiniteVector& x, std::size_t k, const SpaceSpec& space);
/// ||x||_{k,p}; saturates to +inf when the value exceeds double range.
double seminorm(const FiniteVector& x, std::size_t k, const SpaceSpec& space);

/// p-norm combination of log-magnitudes: (sum exp(p t_i))^{1/p} or max, in log form.
double combine_log_terms(const std::vector<double>& log_terms, PNorm p);

}  // namespace shiftlab
