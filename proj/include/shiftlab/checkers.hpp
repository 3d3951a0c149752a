#pragma once

#include <cstddef>
#include <functional>

#include "shiftlab/shift_ops.hpp"
#include "shiftlab/sweep.hpp"
#include "shiftlab/verdict.hpp"

namespace shiftlab {

// Generic criteria on an arbitrary echelon space. Each evaluates a
// "for every k there is l" family over the budget's sweep levels.

/// |w_n| a_{n,k} <= C a_{n+1,l} (backward) or |w_n| a_{n,k} <= C a_{n-1,l} (forward).
Verdict check_continuity(const ShiftOperatorSpec& op, const TruncationBudget& b);
/// For each m <= m_max: sup_n |prod w| a_{n,k} / a_{n+m,l} < inf, with l independent of m.
Verdict check_topologizable(const ShiftOperatorSpec& op, const TruncationBudget& b);
/// Joint sup over (n, m) of the same ratio.
Verdict check_power_bounded(const ShiftOperatorSpec& op, const TruncationBudget& b);
/// Exact characterization for nonnegative weights and p in {0,1,inf}; otherwise sufficient/necessary pair.
Verdict check_cesaro_bounded(const ShiftOperatorSpec& op, const TruncationBudget& b);
/// Montel route, reflexive sandwich for 1 < p < inf, or necessary condition only.
Verdict check_mean_ergodic(const ShiftOperatorSpec& op, const TruncationBudget& b);
/// Sufficient check of inf_n a_{n,k}/a_{n,l} = 0 via a_{n,k}/a_{n,l} -> 0.
Verdict check_montel(const KoetheMatrix& a, const TruncationBudget& b);
/// Tagged power series spaces are Montel; otherwise as above.
Verdict check_montel(const SpaceSpec& space, const TruncationBudget& b);

/// lim_n |prod_{s=1}^n w_{r+s}| a_{r+n,k} / n = 0 for r < k_max and every tested k (forward shifts).
Verdict check_forward_limit(const ShiftOperatorSpec& op, const TruncationBudget& b);

// Power series fast paths. All require op.space.power_series.

/// limsup ln|w_n| / alpha_n < inf (infinite type) or <= 0 (finite type).
Verdict check_continuity_power_series(const ShiftOperatorSpec& op, const TruncationBudget& b);
/// sup_m limsup_n displays for the four (kind, type) combinations.
Verdict check_topologizable_power_series(const ShiftOperatorSpec& op, const TruncationBudget& b);
/// Joint sup or superior limit along n+m; throws PreconditionError when alpha_0 = 0.
Verdict check_power_bounded_power_series(const ShiftOperatorSpec& op, const TruncationBudget& b);
/// Cesaro boundedness on a power series space, nonnegative weights.
Verdict check_cesaro_bounded_power_series(const ShiftOperatorSpec& op, const TruncationBudget& b);
/// Mean ergodicity on a power series space, nonnegative weights.
Verdict check_mean_ergodic_power_series(const ShiftOperatorSpec& op, const TruncationBudget& b);

/// Runs the applicable checkers and reconciles them through the standard implications.
PropertyReport full_report(const ShiftOperatorSpec& op, const TruncationBudget& b);

}  // namespace shiftlab
