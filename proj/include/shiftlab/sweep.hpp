#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/log_real.hpp"
#include "shiftlab/verdict.hpp"

namespace shiftlab {

/// Index bounds of the nested sweep levels s = 0..levels()-1.
struct LevelBounds {
  std::vector<std::size_t> n_bound;
  std::vector<std::size_t> m_bound;
  std::size_t levels() const { return n_bound.size(); }
  std::size_t top_n() const { return n_bound.empty() ? 0 : n_bound.back(); }
  std::size_t top_m() const { return m_bound.empty() ? 0 : m_bound.back(); }
  /// Smallest s with n <= n_bound[s] and m <= m_bound[s]; levels() if none.
  std::size_t level_of(std::size_t n, std::size_t m) const;
};

/// Levels n_max*2^s, m_max*2^s, keeping only those with n+m <= index_cap.
LevelBounds make_levels(const TruncationBudget& b, std::size_t index_cap = static_cast<std::size_t>(-1));

/// Sorted indices in [lo, hi]: dense up to `dense`, then geometric with ratio 2^(1/32); `extra` points are merged in.
std::vector<std::size_t> sparse_grid(std::size_t lo, std::size_t hi, const std::vector<std::size_t>& extra = {},
                                     std::size_t dense = 256);

/// Running maximum with its location.
struct Located {
  double value = kNegInf;
  std::size_t n = 0;
  std::size_t m = 0;
  void offer(double v, std::size_t nn, std::size_t mm) {
    if (v > value || (std::isnan(value) && !std::isnan(v))) {
      value = v;
      n = nn;
      m = mm;
    }
  }
  void merge(const Located& o) {
    if (o.value > value) *this = o;
  }
};

/// Cumulative maxima per level: level[s] = max over points at levels <= s.
struct LevelProfile {
  std::vector<Located> level;
  explicit LevelProfile(std::size_t levels = 0) : level(levels) {}
  void offer(std::size_t s, double v, std::size_t n, std::size_t m) {
    if (s < level.size()) level[s].offer(v, n, m);
  }
  /// Turns per-level maxima into cumulative maxima.
  void accumulate();
};

/// Growth slope of the log-sup between levels s-1 and s (bounds double per level).
double level_slope(const LevelProfile& p, std::size_t s);
bool level_stable(const LevelProfile& p, std::size_t s, double tol);
/// Persistent growth over the last two level steps, or +inf at the top level.
bool level_growing(const LevelProfile& p, double growth_tol);

/// Outcome of the "exists l" search for one k.
struct KDecision {
  std::size_t k = 0;
  Outcome outcome = Outcome::Inconclusive;
  std::optional<std::size_t> l;   // certifying l (Holds)
  std::optional<Located> witness; // largest top-level value among growing components (Fails)
  std::optional<std::size_t> witness_l;
  std::optional<double> slope;
  std::string detail;
};

/// per_l[l] lists the components that must all stay bounded for that l
/// (one component for joint sups; one per m when only n is swept).
KDecision decide_exists_l(std::size_t k, const std::vector<std::vector<LevelProfile>>& per_l,
                          const TruncationBudget& b);

/// Combines per-k decisions into a verdict: any Fails -> Fails, all Holds -> Holds.
Verdict assemble_verdict(std::string property, std::string quantity, std::string route,
                         const std::vector<KDecision>& ks, const TruncationBudget& b);

/// Estimate of limsup f(n) from dyadic block maxima.
struct LimsupEstimate {
  double value = kNegInf;                   // maximum over the last block
  double slope = 0.0;                       // least-squares slope of block maxima vs ln(block start), last 3 blocks
  std::optional<double> extrapolated;       // Aitken estimate when rising with contracting increments
  std::vector<double> block_max;
  std::vector<std::size_t> block_start;
  std::size_t argmax = 0;                   // location of `value`
  double last_step() const;                 // B_J - B_{J-1}
};

/// Blocks [2^j, 2^{j+1}) intersected with [n_begin, n_end]; at most `per_block` samples each.
LimsupEstimate estimate_limsup(const std::function<double(std::size_t)>& f, std::size_t n_begin,
                               std::size_t n_end, std::size_t per_block = 64);
/// Same estimator applied to a precomputed block-maxima sequence.
LimsupEstimate estimate_from_blocks(std::vector<double> block_max, std::vector<std::size_t> block_start,
                                    std::vector<std::size_t> argmax);

enum class LimsupTest { Finite, NonPositive, Negative };

const char* to_string(LimsupTest t);

/// Holds / Fails / Inconclusive for "limsup < inf", "<= 0", "< 0".
Outcome judge_limsup(const LimsupEstimate& e, LimsupTest test, const TruncationBudget& b);

/// Least-squares slope of ys against xs; 0 for fewer than two finite points.
double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys);

/// Tail-sup estimate of f along anti-diagonals n+m = d, m >= 1, in dyadic blocks of d.
struct DiagonalLimsup {
  LimsupEstimate estimate;
  std::size_t arg_n = 0;
  std::size_t arg_m = 0;
};
DiagonalLimsup limsup_along_n_plus_m(const std::function<double(std::size_t n, std::size_t m)>& f,
                                     const TruncationBudget& b, std::size_t d_max = 0);

}  // namespace shiftlab
