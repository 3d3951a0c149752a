#include "detail.hpp"

#include <algorithm>
#include <cmath>

#include "shiftlab/parallel.hpp"

namespace shiftlab::detail {

std::size_t index_cap(const ShiftOperatorSpec& op) {
  std::size_t cap = kUnbounded;
  if (op.w.length() != kUnbounded) cap = std::min(cap, op.w.length() - 1);
  if (op.space.matrix.rows() != kUnbounded) cap = std::min(cap, op.space.matrix.rows() - 1);
  if (op.space.power_series && op.space.power_series->alpha.length() != kUnbounded)
    cap = std::min(cap, op.space.power_series->alpha.length() - 1);
  return cap;
}

OpTables build_tables(const ShiftOperatorSpec& op, std::size_t size, std::size_t columns) {
  OpTables t;
  t.size = size;
  t.lw.resize(size);
  t.sw.resize(size);
  op.w.prefetch(size + 1);
  for (std::size_t i = 0; i < size; ++i) {
    const LogReal w = op.w.at(i);
    t.lw[i] = w.log_magnitude();
    t.sw[i] = static_cast<signed char>(w.sign());
  }
  if (op.space.power_series) op.space.power_series->alpha.prefetch(size);
  t.col.assign(columns, std::vector<double>(size));
  parallel_for(columns, [&](std::size_t c) {
    for (std::size_t i = 0; i < size; ++i) t.col[c][i] = op.space.matrix.log_entry(i, c);
  });
  return t;
}

CesaroTable cesaro_table(const ShiftOperatorSpec& op, const OpTables& t, std::size_t k,
                         const std::vector<std::size_t>& r_grid, std::size_t n_limit, const LevelBounds& lv,
                         SumMode mode, double power) {
  CesaroTable ct;
  ct.r = r_grid;
  ct.power = power;
  ct.bucket.assign(r_grid.size(), std::vector<Located>(lv.levels()));
  const bool back = op.backward();
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const std::size_t r = r_grid[i];
    std::size_t n_top = back ? std::min(r, n_limit) : n_limit;
    if (!back) n_top = r + 1 >= t.size ? 0 : std::min(n_top, t.size - 1 - r);
    double lk = 0.0;  // ln|K(r,m)|
    int sign = 1;
    LogSumAccumulator abs_acc;
    SignedLogAccumulator signed_acc;
    bool dead = false;
    for (std::size_t m = 1; m <= n_top; ++m) {
      if (!dead) {
        const std::size_t wj = back ? r - m : r + m;
        const std::size_t aj = back ? r - m : r + m;
        if (t.sw[wj] == 0) {
          dead = true;  // every later product contains this zero weight
        } else {
          lk += t.lw[wj];
          sign *= t.sw[wj];
          const double term = lk + t.a(aj, k);
          if (mode == SumMode::Absolute)
            abs_acc.add(power * term);
          else
            signed_acc.add(LogReal::from_log(term, sign));
        }
      }
      const double s = mode == SumMode::Absolute ? abs_acc.log_value() : signed_acc.value().log_magnitude();
      const double g = s == kNegInf ? kNegInf : s - std::log(static_cast<double>(m));
      const std::size_t lev = lv.level_of(r, m);
      if (lev >= lv.levels()) break;
      ct.bucket[i][lev].offer(g, r, m);
      if (dead) break;  // G only decreases from here
    }
  }
  return ct;
}

LevelProfile cesaro_profile(const CesaroTable& ct, const OpTables& t, std::size_t l, std::size_t levels) {
  LevelProfile p(levels);
  for (std::size_t i = 0; i < ct.r.size(); ++i) {
    const double den = ct.power * t.a(ct.r[i], l);
    for (std::size_t s = 0; s < levels; ++s) {
      const Located& c = ct.bucket[i][s];
      if (c.value == kNegInf && c.n == 0 && c.m == 0) continue;
      p.offer(s, ratio_log(c.value, den), c.n, c.m);
    }
  }
  p.accumulate();
  return p;
}

bool weights_nonnegative(const ShiftOperatorSpec& op, std::size_t n) {
  if (op.w.length() != kUnbounded) n = std::min(n, op.w.length());
  return op.w.nonnegative_below(n);
}

const char* sum_label(SumMode mode) { return mode == SumMode::Absolute ? "absolute" : "signed"; }

}  // namespace shiftlab::detail
