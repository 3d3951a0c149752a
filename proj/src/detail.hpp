#pragma once

// Internal helpers shared by the checker translation units.

#include <cstddef>
#include <string>
#include <vector>

#include "shiftlab/shift_ops.hpp"
#include "shiftlab/sweep.hpp"
#include "shiftlab/verdict.hpp"

namespace shiftlab::detail {

/// ln(num/den) with 0/0 = 0 and x/0 = inf.
inline double ratio_log(double num, double den) {
  if (num == kNegInf) return kNegInf;
  if (den == kNegInf) return kInf;
  return num - den;
}

/// Largest index at which both w_i and a_{i,k} are defined.
std::size_t index_cap(const ShiftOperatorSpec& op);

/// ln|w_i|, sign(w_i) and matrix columns ln a_{i,c} for i < size, c < columns.
struct OpTables {
  std::size_t size = 0;
  std::vector<double> lw;
  std::vector<signed char> sw;
  std::vector<std::vector<double>> col;
  double a(std::size_t i, std::size_t c) const { return col[c][i]; }
};

OpTables build_tables(const ShiftOperatorSpec& op, std::size_t size, std::size_t columns);

enum class SumMode { Absolute, Signed };

/// G_k(r,n) = ln |sum_{m=1}^n K(r,m)^p a_{r -/+ m,k}^p| - ln n, grouped per r by sweep level of (r,n).
/// K(r,m) = prod_{s=1}^m w_{r-s} (backward, n <= r) or prod_{s=1}^m w_{r+s} (forward).
struct CesaroTable {
  std::vector<std::size_t> r;
  std::vector<std::vector<Located>> bucket;  // bucket[i][s]: max of G over n with level_of(r_i, n) == s; m field holds n
  double power = 1.0;
};

CesaroTable cesaro_table(const ShiftOperatorSpec& op, const OpTables& t, std::size_t k,
                         const std::vector<std::size_t>& r_grid, std::size_t n_limit, const LevelBounds& lv,
                         SumMode mode, double power);

/// Level profile of sup_{r,n} G_k(r,n) - p ln a_{r,l}.
LevelProfile cesaro_profile(const CesaroTable& ct, const OpTables& t, std::size_t l, std::size_t levels);

/// True when no sampled weight below n is negative.
bool weights_nonnegative(const ShiftOperatorSpec& op, std::size_t n);

/// Sum-mode label for notes.
const char* sum_label(SumMode mode);

/// AND of two verdicts (both required).
inline Verdict combine_and(Verdict a, Verdict c, std::string property, std::string route, const TruncationBudget& b) {
  Verdict v;
  v.property = std::move(property);
  v.route = std::move(route);
  v.budget = b;
  v.quantity = a.quantity + " and " + c.quantity;
  if (a.fails() || c.fails()) {
    v.outcome = Outcome::Fails;
    const Verdict& f = a.fails() ? a : c;
    v.witness = f.witness;
    v.growth_fit = f.growth_fit;
  } else if (a.holds() && c.holds()) {
    v.outcome = Outcome::Holds;
    v.certificates = a.certificates.empty() ? c.certificates : a.certificates;
  }
  v.sub_verdicts.push_back(std::move(a));
  v.sub_verdicts.push_back(std::move(c));
  return v;
}


}  // namespace shiftlab::detail
