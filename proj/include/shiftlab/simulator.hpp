#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "shiftlab/checkers.hpp"

namespace shiftlab {

struct TrajectoryPoint {
  std::size_t n = 0;
  std::size_t k = 0;
  double cesaro_log = kNegInf;  // ln ||T^[n] x||_k
  double power_log = kNegInf;   // ln ||T^n x||_k
  std::size_t support_width = 0;

  double cesaro() const;
  double power_over_n() const;
};

struct TrajectoryRecord {
  std::string op_description;
  std::string x0_description;
  std::vector<std::size_t> k_list;
  std::size_t n_max = 0;
  std::vector<TrajectoryPoint> points;  // n-major, k in k_list order

  enum class Series { Cesaro, PowerOverN, Power };
  /// Log-values for one k, indexed by n-1.
  std::vector<double> series(std::size_t k, Series s) const;
};

/// Each step is evaluated from the closed forms, independently of the previous step.
TrajectoryRecord run_trajectory(const ShiftOperatorSpec& op, const FiniteVector& x0, const std::vector<std::size_t>& k_list,
                                std::size_t n_max, std::string x0_description = "");

void write_csv(const TrajectoryRecord& t, std::ostream& os);

enum class ConvergenceKind { ConvergesToZero, ConvergesToNonzero, Bounded, Diverges, Inconclusive };

const char* to_string(ConvergenceKind k);

struct ConvergenceClass {
  ConvergenceKind kind = ConvergenceKind::Inconclusive;
  double rate = 0.0;  // least-squares slope of ln(value) against ln n over the last two blocks
};

/// Four blocks of length len/4 over a log-valued series.
ConvergenceClass classify(const std::vector<double>& log_values, double tol = 1e-6);
ConvergenceClass classify(const TrajectoryRecord& t, std::size_t k, TrajectoryRecord::Series s, double tol = 1e-6);

/// e_0 + e_3/2 + e_7/4
FiniteVector mixed_probe();

/// ln( |prod_{s=1}^n w_{r+s}| a_{r+n,k} / n ), n = 1..n_max.
std::vector<double> forward_limit_sequence(const ShiftOperatorSpec& op, std::size_t r, std::size_t k,
                                           std::size_t n_max);

struct CrossCheck {
  std::string probe;
  std::size_t k = 0;
  std::string series;
  ConvergenceKind kind = ConvergenceKind::Inconclusive;
  std::string verdict_property;
  Outcome verdict = Outcome::Inconclusive;
  bool hard_mismatch = false;
  bool soft_mismatch = false;
};

struct CrossValidation {
  std::string op_description;
  std::vector<CrossCheck> checks;
  std::size_t hard_mismatches() const;
  std::size_t soft_mismatches() const;
};

CrossValidation cross_validate(const ShiftOperatorSpec& op, const PropertyReport& report, std::size_t n_max = 256,
                               std::size_t k_count = 4);
CrossValidation cross_validate(const ShiftOperatorSpec& op, const TruncationBudget& b);

}  // namespace shiftlab
