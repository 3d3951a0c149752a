#include <algorithm>
#include <cmath>
#include <string>

#include "detail.hpp"
#include "shiftlab/checkers.hpp"
#include "shiftlab/parallel.hpp"

namespace shiftlab {

using detail::OpTables;
using detail::ratio_log;
using detail::SumMode;
using detail::combine_and;

namespace {

struct Setup {
  LevelBounds lv;
  OpTables t;
  std::size_t K = 0;
  std::size_t L = 0;  // number of l values tried: 0..l_max
  bool ok = false;
};

Setup prepare(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  b.validate();
  Setup s;
  const std::size_t cap = detail::index_cap(op);
  s.lv = make_levels(b, cap == kUnbounded ? kUnbounded : cap - 1);
  s.K = b.k_max;
  s.L = b.l_max + 1;
  if (s.lv.levels() < 4) return s;
  const std::size_t size = std::min(s.lv.top_n() + s.lv.top_m() + 2, cap == kUnbounded ? kUnbounded : cap + 1);
  s.t = detail::build_tables(op, size, std::max(s.K, s.L));
  s.ok = true;
  return s;
}

Verdict too_short(std::string property, std::string quantity, const TruncationBudget& b) {
  Verdict v;
  v.property = std::move(property);
  v.quantity = std::move(quantity);
  v.route = "generic";
  v.budget = b;
  v.note("index range too short for four sweep levels at this budget");
  return v;
}

std::size_t n_level(const LevelBounds& lv, std::size_t n) {
  for (std::size_t s = 0; s < lv.levels(); ++s)
    if (n <= lv.n_bound[s]) return s;
  return lv.levels();
}

Verdict combine_sandwich(Verdict sufficient, Verdict necessary, std::string property, std::string route,
                         const TruncationBudget& b) {
  Verdict v;
  v.property = std::move(property);
  v.route = std::move(route);
  v.budget = b;
  v.quantity = "sufficient: " + sufficient.quantity + "; necessary: " + necessary.quantity;
  if (sufficient.holds()) {
    v.outcome = Outcome::Holds;
    v.certificates = sufficient.certificates;
  } else if (necessary.fails()) {
    v.outcome = Outcome::Fails;
    v.witness = necessary.witness;
    v.growth_fit = necessary.growth_fit;
  } else {
    v.note("sufficient condition not certified and necessary condition not refuted");
  }
  sufficient.property = "sufficient";
  necessary.property = "necessary";
  v.sub_verdicts.push_back(std::move(sufficient));
  v.sub_verdicts.push_back(std::move(necessary));
  return v;
}

Verdict cesaro_condition(const ShiftOperatorSpec& op, const TruncationBudget& b, const Setup& s, SumMode mode,
                         double power, std::string property) {
  const bool back = op.backward();
  std::string q = back ? "sup_{r,n} " : "sup_{r,n} ";
  q += mode == SumMode::Signed ? "|sum_{m<=n} " : "sum_{m<=n} ";
  q += back ? "prod_{s=1}^m w_{r-s}" : "prod_{s=1}^m w_{r+s}";
  if (power != 1.0) q += "^p";
  q += back ? " a_{r-m,k}" : " a_{r+m,k}";
  if (power != 1.0) q += "^p";
  q += mode == SumMode::Signed ? "| / (n a_{r,l})" : (power != 1.0 ? " / (n a_{r,l}^p)" : " / (n a_{r,l})");
  const auto r_grid = sparse_grid(0, s.lv.top_n(), s.lv.n_bound);
  std::vector<KDecision> ks(s.K);
  parallel_for(s.K, [&](std::size_t k) {
    const auto ct = detail::cesaro_table(op, s.t, k, r_grid, s.lv.top_m(), s.lv, mode, power);
    std::vector<std::vector<LevelProfile>> per_l(s.L);
    for (std::size_t l = 0; l < s.L; ++l) per_l[l].push_back(detail::cesaro_profile(ct, s.t, l, s.lv.levels()));
    ks[k] = decide_exists_l(k, per_l, b);
  });
  Verdict v = assemble_verdict(std::move(property), q, "generic", ks, b);
  if (v.witness) {
    // witness (n, m) fields carry (r, n) of the Cesaro index pair
    v.witness->r = v.witness->n;
    v.witness->n = v.witness->m;
    v.witness->m.reset();
  }
  return v;
}

}  // namespace

Verdict check_continuity(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  const bool back = op.backward();
  const std::string q = back ? "sup_n |w_n| a_{n,k} / a_{n+1,l}" : "sup_n |w_n| a_{n,k} / a_{n-1,l}";
  const Setup s = prepare(op, b);
  if (!s.ok) return too_short("continuity", q, b);
  const auto grid = sparse_grid(back ? 0 : 1, s.lv.top_n(), s.lv.n_bound);
  std::vector<KDecision> ks(s.K);
  parallel_for(s.K, [&](std::size_t k) {
    std::vector<std::vector<LevelProfile>> per_l(s.L, std::vector<LevelProfile>(1, LevelProfile(s.lv.levels())));
    for (std::size_t n : grid) {
      const double num = s.t.lw[n] == kNegInf ? kNegInf : s.t.lw[n] + s.t.a(n, k);
      const std::size_t nb = back ? n + 1 : n - 1;
      const std::size_t lev = n_level(s.lv, n);
      for (std::size_t l = 0; l < s.L; ++l) per_l[l][0].offer(lev, ratio_log(num, s.t.a(nb, l)), n, 0);
    }
    for (auto& c : per_l) c[0].accumulate();
    ks[k] = decide_exists_l(k, per_l, b);
  });
  return assemble_verdict("continuity", q, "generic", ks, b);
}

Verdict check_topologizable(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  const bool back = op.backward();
  const std::string q = back ? "for each m: sup_n |prod_{j<m} w_{n+j}| a_{n,k} / a_{n+m,l}"
                             : "for each m: sup_n |prod_{j=1}^m w_{n+j}| a_{n+m,k} / a_{n,l}";
  const Setup s = prepare(op, b);
  if (!s.ok) return too_short("topologizable", q, b);
  const std::size_t M = b.m_max;
  const auto grid = sparse_grid(0, s.lv.top_n(), s.lv.n_bound);
  std::vector<KDecision> ks(s.K);
  parallel_for(s.K, [&](std::size_t k) {
    std::vector<std::vector<double>> num(M + 1, std::vector<double>(grid.size()));
    for (std::size_t m = 1; m <= M; ++m)
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::size_t n = grid[i];
        const double win = back ? op.w.window_log(n, m) : op.w.window_log(n + 1, m);
        num[m][i] = win == kNegInf ? kNegInf : win + s.t.a(back ? n : n + m, k);
      }
    std::vector<std::vector<LevelProfile>> per_l(s.L);
    for (std::size_t l = 0; l < s.L; ++l) {
      per_l[l].assign(M, LevelProfile(s.lv.levels()));
      for (std::size_t m = 1; m <= M; ++m) {
        LevelProfile& p = per_l[l][m - 1];
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const std::size_t n = grid[i];
          p.offer(n_level(s.lv, n), ratio_log(num[m][i], s.t.a(back ? n + m : n, l)), n, m);
        }
        p.accumulate();
      }
    }
    ks[k] = decide_exists_l(k, per_l, b);
  });
  Verdict v = assemble_verdict("topologizable", q, "generic", ks, b);
  v.note("m ranges over 1.." + std::to_string(M) + "; one l per k serves every m");
  return v;
}

Verdict check_power_bounded(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  const bool back = op.backward();
  const std::string q = back ? "sup_{n,m} |prod_{j<m} w_{n+j}| a_{n,k} / a_{n+m,l}"
                             : "sup_{n,m} |prod_{j=1}^m w_{n+j}| a_{n+m,k} / a_{n,l}";
  const Setup s = prepare(op, b);
  if (!s.ok) return too_short("power_bounded", q, b);
  const auto ng = sparse_grid(0, s.lv.top_n(), s.lv.n_bound);
  const auto mg = sparse_grid(1, s.lv.top_m(), s.lv.m_bound);
  std::vector<KDecision> ks(s.K);
  parallel_for(s.K, [&](std::size_t k) {
    std::vector<double> num(ng.size() * mg.size());
    std::vector<unsigned char> lev(num.size());
    for (std::size_t i = 0; i < ng.size(); ++i)
      for (std::size_t j = 0; j < mg.size(); ++j) {
        const std::size_t n = ng[i], m = mg[j];
        const double win = back ? op.w.window_log(n, m) : op.w.window_log(n + 1, m);
        num[i * mg.size() + j] = win == kNegInf ? kNegInf : win + s.t.a(back ? n : n + m, k);
        lev[i * mg.size() + j] = static_cast<unsigned char>(s.lv.level_of(n, m));
      }
    std::vector<std::vector<LevelProfile>> per_l(s.L, std::vector<LevelProfile>(1, LevelProfile(s.lv.levels())));
    for (std::size_t l = 0; l < s.L; ++l) {
      LevelProfile& p = per_l[l][0];
      for (std::size_t i = 0; i < ng.size(); ++i)
        for (std::size_t j = 0; j < mg.size(); ++j) {
          const std::size_t n = ng[i], m = mg[j];
          const std::size_t idx = i * mg.size() + j;
          p.offer(lev[idx], ratio_log(num[idx], s.t.a(back ? n + m : n, l)), n, m);
        }
      p.accumulate();
    }
    ks[k] = decide_exists_l(k, per_l, b);
  });
  return assemble_verdict("power_bounded", q, "generic", ks, b);
}

Verdict check_cesaro_bounded(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  const Setup s = prepare(op, b);
  if (!s.ok) return too_short("cesaro_bounded", "Cesaro sums", b);
  const PNorm p = op.space.p;
  const bool nonneg = detail::weights_nonnegative(op, s.t.size);
  if (nonneg && (p.is_sup() || p.value() == 1.0)) {
    Verdict v = cesaro_condition(op, b, s, SumMode::Absolute, 1.0, "cesaro_bounded");
    v.route = "characterization (nonnegative weights, p in {0,1,inf})";
    return v;
  }
  const double power = p.is_sup() ? 1.0 : p.value();
  Verdict suff = cesaro_condition(op, b, s, SumMode::Absolute, power, "sufficient");
  Verdict nec = cesaro_condition(op, b, s, SumMode::Signed, 1.0, "necessary");
  if (!op.backward())
    nec.note("signed condition uses the product up to m and denominator a_{r,l}, matching the backward pattern");
  return combine_sandwich(std::move(suff), std::move(nec), "cesaro_bounded", "sufficient/necessary pair", b);
}

Verdict check_forward_limit(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  b.validate();
  Verdict v;
  v.property = "forward_limit";
  v.quantity = "lim_n |prod_{s=1}^n w_{r+s}| a_{r+n,k} / n = 0";
  v.route = "generic";
  v.budget = b;
  if (op.backward()) {
    v.outcome = Outcome::Holds;
    v.note("backward shifts annihilate finitely supported vectors");
    return v;
  }
  const std::size_t cap = detail::index_cap(op);
  std::size_t top = (b.n_max + b.m_max) << b.doublings;
  if (cap != kUnbounded) top = std::min(top, cap > b.k_max + 1 ? cap - b.k_max - 1 : 0);
  if (top < 64) {
    v.note("index range too short");
    return v;
  }
  op.w.prefetch(top + b.k_max + 2);
  const std::size_t R = b.k_max;
  std::vector<Outcome> out(R * b.k_max);
  std::vector<LimsupEstimate> est(R * b.k_max);
  const double log_tol = std::log(b.stability_tol);
  parallel_for(R * b.k_max, [&](std::size_t idx) {
    const std::size_t r = idx / b.k_max, k = idx % b.k_max;
    auto h = [&](std::size_t n) {
      const double win = op.w.window_log(r + 1, n);
      if (win == kNegInf) return kNegInf;
      return win + op.space.matrix.log_entry(r + n, k) - std::log(static_cast<double>(n));
    };
    const LimsupEstimate e = estimate_limsup(h, 1, top);
    est[idx] = e;
    if (e.value == kNegInf || (e.slope < 0.0 && (e.value < log_tol || e.slope < -b.growth_tol)))
      out[idx] = Outcome::Holds;
    else if (e.slope >= 0.0 && e.value >= log_tol)
      out[idx] = Outcome::Fails;
    else
      out[idx] = Outcome::Inconclusive;
  });
  bool all = true;
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    if (out[idx] == Outcome::Fails && v.outcome != Outcome::Fails) {
      v.outcome = Outcome::Fails;
      Witness w;
      w.k = idx % b.k_max;
      w.r = idx / b.k_max;
      w.n = est[idx].argmax;
      w.value = est[idx].value;
      v.witness = w;
      v.growth_fit = est[idx].slope;
    }
    if (out[idx] != Outcome::Holds) all = false;
  }
  if (v.outcome != Outcome::Fails && all) v.outcome = Outcome::Holds;
  if (v.outcome == Outcome::Inconclusive) v.note("some (r,k) sequences neither decay nor stay above the tolerance");
  return v;
}

Verdict check_mean_ergodic(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  const Setup s = prepare(op, b);
  if (!s.ok) return too_short("mean_ergodic", "Cesaro sums", b);
  Verdict v;
  v.property = "mean_ergodic";
  v.budget = b;
  if (!detail::weights_nonnegative(op, s.t.size)) {
    v.route = "not applicable";
    v.note("criteria need nonnegative weights; a negative weight was sampled");
    return v;
  }
  const Verdict montel = check_montel(op.space, b);
  const bool fwd = !op.backward();
  auto with_limit = [&](Verdict cond, std::string route) {
    if (!fwd) {
      cond.route = std::move(route);
      return cond;
    }
    return combine_and(std::move(cond), check_forward_limit(op, b), "condition", std::move(route), b);
  };
  const PNorm p = op.space.p;
  if (montel.holds()) {
    v = with_limit(cesaro_condition(op, b, s, SumMode::Absolute, 1.0, "mean_ergodic"), "montel characterization");
  } else if (p.reflexive_range()) {
    Verdict suff = with_limit(cesaro_condition(op, b, s, SumMode::Absolute, p.value(), "sufficient"), "sufficient");
    Verdict nec = with_limit(cesaro_condition(op, b, s, SumMode::Absolute, 1.0, "necessary"), "necessary");
    v = combine_sandwich(std::move(suff), std::move(nec), "mean_ergodic", "reflexive sufficient/necessary pair", b);
  } else {
    Verdict nec = with_limit(cesaro_condition(op, b, s, SumMode::Absolute, 1.0, "necessary"), "necessary");
    v.route = "necessary condition only";
    v.quantity = nec.quantity;
    if (nec.fails()) {
      v.outcome = Outcome::Fails;
      v.witness = nec.witness;
      v.growth_fit = nec.growth_fit;
    } else {
      v.note("space not certified Montel and p outside (1,inf): only the necessary condition is available");
    }
    v.sub_verdicts.push_back(std::move(nec));
  }
  v.property = "mean_ergodic";
  v.sub_verdicts.push_back(montel);
  return v;
}

Verdict check_montel(const KoetheMatrix& a, const TruncationBudget& b) {
  b.validate();
  Verdict v;
  v.property = "montel";
  v.quantity = "a_{n,k} / a_{n,l} -> 0";
  v.route = "ratio sweep";
  v.budget = b;
  std::size_t top = b.n_max << b.doublings;
  if (a.rows() != kUnbounded) top = std::min(top, a.rows() - 1);
  const double log_tol = std::log(b.stability_tol);
  const std::size_t K = b.k_max, L = b.l_max + 1;
  std::vector<Outcome> out(K, Outcome::Inconclusive);
  std::vector<std::size_t> cert(K, 0);
  parallel_for(K, [&](std::size_t k) {
    bool all_constant = true;
    for (std::size_t l = k; l < std::max(L, k + 1); ++l) {
      double lo = kInf, hi = kNegInf;
      auto f = [&](std::size_t n) {
        const double r = ratio_log(a.log_entry(n, k), a.log_entry(n, l));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        return r;
      };
      const LimsupEstimate e = estimate_limsup(f, 0, top);
      if (e.value == kNegInf || (e.value < log_tol && e.last_step() < 0.0)) {
        out[k] = Outcome::Holds;
        cert[k] = l;
        return;
      }
      if (!(hi - lo <= 1e-12)) all_constant = false;
    }
    out[k] = all_constant ? Outcome::Fails : Outcome::Inconclusive;
  });
  bool all = true;
  for (std::size_t k = 0; k < K; ++k) {
    if (out[k] == Outcome::Fails && v.outcome != Outcome::Fails) {
      v.outcome = Outcome::Fails;
      Witness w;
      w.k = k;
      w.l = L - 1;
      w.value = 0.0;
      v.witness = w;
    }
    if (out[k] != Outcome::Holds) all = false;
  }
  if (v.outcome != Outcome::Fails && all) {
    v.outcome = Outcome::Holds;
    for (std::size_t k = 0; k < K; ++k) v.certificates.push_back({k, cert[k]});
  }
  if (v.outcome == Outcome::Inconclusive)
    v.note("ratio does not vanish along the full sweep for some k; an infinite index set may still witness it");
  return v;
}

Verdict check_montel(const SpaceSpec& space, const TruncationBudget& b) {
  if (space.power_series) {
    Verdict v;
    v.property = "montel";
    v.quantity = "a_{n,k} / a_{n,l} -> 0";
    v.route = "power series space";
    v.outcome = Outcome::Holds;
    v.budget = b;
    for (std::size_t k = 0; k < b.k_max; ++k) v.certificates.push_back({k, k + 1});
    return v;
  }
  return check_montel(space.matrix, b);
}

}  // namespace shiftlab
