#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "detail.hpp"
#include "shiftlab/checkers.hpp"
#include "shiftlab/parallel.hpp"

namespace shiftlab {

namespace {

const double kLn2 = std::log(2.0);

const PowerSeriesTag& tag_of(const ShiftOperatorSpec& op) {
  if (!op.space.power_series) throw PreconditionError("space carries no power series tag");
  return *op.space.power_series;
}

bool infinite_type(const ShiftOperatorSpec& op) { return tag_of(op).type == PowerSeriesType::Infinite; }

std::size_t cap_minus(std::size_t cap, std::size_t d) {
  if (cap == kUnbounded) return kUnbounded;
  return cap > d ? cap - d : 0;
}

std::size_t single_top(const ShiftOperatorSpec& op, const TruncationBudget& b, std::size_t reserve) {
  return std::min(b.tail_horizon, cap_minus(detail::index_cap(op), reserve + 1));
}

Verdict base(std::string property, std::string quantity, std::string route, const TruncationBudget& b) {
  Verdict v;
  v.property = std::move(property);
  v.quantity = std::move(quantity);
  v.route = std::move(route);
  v.budget = b;
  return v;
}

double best_value(const LimsupEstimate& e) { return e.extrapolated ? *e.extrapolated : e.value; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::size_t ceil_index(double x) {
  if (!(x > 0.0)) return 0;
  return static_cast<std::size_t>(std::ceil(x));
}

// Largest l <= l_max whose seminorm weight the observed ratio still exceeds.
std::optional<std::size_t> exceeded_l(double ratio, bool inf, std::size_t l_max) {
  for (std::size_t l = l_max + 1; l-- > 0;) {
    const double thr = inf ? static_cast<double>(l) : -1.0 / (static_cast<double>(l) + 1.0);
    if (ratio > thr) return l;
  }
  return std::nullopt;
}

// Result of sup_m limsup_n f_m(n) for m = 1..m_max.
struct SupM {
  Outcome outcome = Outcome::Inconclusive;
  double sup = kNegInf;
  std::size_t arg_m = 0;
  std::size_t arg_n = 0;
  std::optional<double> growth;
  std::string detail;
};

SupM sup_m_limsup(const std::function<double(std::size_t m, std::size_t n)>& f, std::size_t m_max,
                  std::size_t n_begin, std::size_t n_top, LimsupTest test, const TruncationBudget& b) {
  std::vector<LimsupEstimate> est(m_max + 1);
  std::vector<Outcome> judged(m_max + 1, Outcome::Inconclusive);
  parallel_for(m_max, [&](std::size_t i) {
    const std::size_t m = i + 1;
    est[m] = estimate_limsup([&](std::size_t n) { return f(m, n); }, n_begin, n_top);
    judged[m] = judge_limsup(est[m], test, b);
  });
  SupM out;
  bool all_hold = true;
  for (std::size_t m = 1; m <= m_max; ++m) {
    if (est[m].value > out.sup || out.arg_m == 0) {
      out.sup = est[m].value;
      out.arg_m = m;
      out.arg_n = est[m].argmax;
    }
    if (judged[m] == Outcome::Fails && out.outcome != Outcome::Fails) {
      out.outcome = Outcome::Fails;
      out.growth = est[m].slope;
      out.detail = "limsup for m=" + std::to_string(m) + " judged " + to_string(test) + " violated";
    }
    if (judged[m] != Outcome::Holds) all_hold = false;
  }
  if (out.outcome == Outcome::Fails) return out;
  if (test == LimsupTest::Finite && m_max >= 8) {
    // running sup over m <= m_max/8, /4, /2, m_max
    double S[4];
    for (int j = 0; j < 4; ++j) {
      const std::size_t M = m_max >> (3 - j);
      S[j] = kNegInf;
      for (std::size_t m = 1; m <= M; ++m) S[j] = std::max(S[j], est[m].value);
    }
    auto step = [](double a, double c) {
      if (c == kInf) return kInf;
      if (!std::isfinite(a) || !std::isfinite(c)) return 0.0;
      return (c - a) / kLn2;
    };
    const double g1 = step(S[1], S[2]), g2 = step(S[2], S[3]);
    if (g1 > b.growth_tol && g2 > b.growth_tol && g2 >= 0.8 * g1) {
      out.outcome = Outcome::Fails;
      out.growth = g2;
      out.detail = "sup over m keeps growing as the m range doubles";
      return out;
    }
    const bool stable = !std::isfinite(S[3]) ? S[3] == kNegInf
                                             : S[3] - S[2] <= b.stability_tol * std::max(1.0, std::fabs(S[3]));
    if (all_hold && stable) out.outcome = Outcome::Holds;
    if (!stable) out.detail = "sup over m not yet stable";
    return out;
  }
  if (all_hold) out.outcome = Outcome::Holds;
  return out;
}

// Outcome of a 2D joint sup over the nested sweep levels.
struct JointSup {
  Outcome outcome = Outcome::Inconclusive;
  LevelProfile profile;
  double slope = 0.0;
};

JointSup joint_sup(const std::function<double(std::size_t n, std::size_t m)>& f, const LevelBounds& lv,
                   const TruncationBudget& b) {
  const auto ng = sparse_grid(0, lv.top_n(), lv.n_bound);
  const auto mg = sparse_grid(1, lv.top_m(), lv.m_bound);
  JointSup out;
  out.profile = LevelProfile(lv.levels());
  for (std::size_t n : ng)
    for (std::size_t m : mg) out.profile.offer(lv.level_of(n, m), f(n, m), n, m);
  out.profile.accumulate();
  const std::size_t D = lv.levels() - 1;
  out.slope = level_slope(out.profile, D);
  if (level_growing(out.profile, b.growth_tol))
    out.outcome = Outcome::Fails;
  else if (level_stable(out.profile, D, b.stability_tol) && level_stable(out.profile, D - 1, b.stability_tol))
    out.outcome = Outcome::Holds;
  return out;
}

}  // namespace

Verdict check_continuity_power_series(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  b.validate();
  const PowerSeriesTag& tag = tag_of(op);
  const bool inf = tag.type == PowerSeriesType::Infinite;
  const bool back = op.backward();
  Verdict v = base("continuity", inf ? "limsup_n ln|w_n| / alpha_n < inf" : "limsup_n ln|w_n| / alpha_n <= 0",
                   "power series", b);
  const std::size_t top = single_top(op, b, 1);
  if (top < 64) {
    v.note("index range too short");
    return v;
  }
  op.w.prefetch(top + 2);
  tag.alpha.prefetch(top + 2);
  const auto e = estimate_limsup(
      [&](std::size_t n) {
        const double a = tag.alpha(n);
        if (a <= 0.0) return kNegInf;
        return op.w.log_abs(n) / a;
      },
      0, top);
  const auto side = estimate_limsup(
      [&](std::size_t n) {
        const double a = tag.alpha(n);
        if (a <= 0.0) return kNegInf;
        return tag.alpha(n + 1) / a;
      },
      0, top);
  const Outcome side_ok = judge_limsup(side, LimsupTest::Finite, b);
  v.estimate = best_value(e);
  v.growth_fit = e.slope;
  v.note("side condition limsup alpha_{n+1}/alpha_n < inf: " + std::string(to_string(side_ok)) +
         " (estimate " + fmt(best_value(side)) + ")");
  Outcome o = judge_limsup(e, inf ? LimsupTest::Finite : LimsupTest::NonPositive, b);
  // directions of the equivalence that use the side condition
  const bool fails_needs_side = inf ? back : !back;
  const bool holds_needs_side = inf ? !back : back;
  if (side_ok != Outcome::Holds && ((o == Outcome::Fails && fails_needs_side) ||
                                    (o == Outcome::Holds && holds_needs_side))) {
    v.note("side condition not certified; outcome " + std::string(to_string(o)) + " downgraded");
    o = Outcome::Inconclusive;
  }
  v.outcome = o;
  if (o == Outcome::Fails) {
    Witness w;
    w.n = e.argmax;
    w.value = e.value;
    v.witness = w;
  } else if (o == Outcome::Holds) {
    const double L = std::isfinite(best_value(e)) ? best_value(e) : 0.0;
    const double M = std::isfinite(best_value(side)) ? best_value(side) + b.stability_tol : 1.0;
    for (std::size_t k = 0; k < b.k_max; ++k) {
      std::size_t l;
      if (inf && back)
        l = k + ceil_index(std::max(L, 0.0) + b.stability_tol);
      else if (inf)
        l = ceil_index(M * (static_cast<double>(k) + std::max(L, 0.0) + b.stability_tol));
      else if (!back)
        l = k + 1;
      else
        l = ceil_index(M * (static_cast<double>(k) + 1.0) * (1.0 + b.stability_tol));
      v.certificates.push_back({k, l});
    }
  }
  return v;
}

Verdict check_topologizable_power_series(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  b.validate();
  const PowerSeriesTag& tag = tag_of(op);
  const bool inf = tag.type == PowerSeriesType::Infinite;
  const bool back = op.backward();
  const auto& al = tag.alpha;
  const std::size_t M = b.m_max;
  const std::size_t top = single_top(op, b, M + 1);
  std::string q;
  if (back)
    q = inf ? "sup_m limsup_n ln|prod_{j<m} w_{n+j}| / alpha_{n+m} < inf"
            : "sup_m limsup_n ln|prod_{j<m} w_{n+j}| / alpha_{n+m} <= 0";
  else
    q = inf ? "for each k: sup_m limsup_n (ln|prod_{j=1}^m w_{n+j}| + k alpha_{n+m}) / alpha_n < inf"
            : "sup_m limsup_n ln|prod_{j=1}^m w_{n+j}| / alpha_{n+m} <= 0";
  Verdict v = base("topologizable", q, "power series", b);
  if (top < 64) {
    v.note("index range too short");
    return v;
  }
  op.w.prefetch(top + M + 2);
  al.prefetch(top + M + 2);
  auto witness_from = [&](const SupM& s, std::optional<std::size_t> k) {
    Witness w;
    w.k = k;
    w.n = s.arg_n;
    w.m = s.arg_m;
    w.value = s.sup;
    v.witness = w;
    v.growth_fit = s.growth;
  };

  if (!back && inf) {
    // family indexed by k
    bool all = true;
    for (std::size_t k = 0; k < b.k_max; ++k) {
      const double kd = static_cast<double>(k);
      const SupM s = sup_m_limsup(
          [&](std::size_t m, std::size_t n) {
            const double a = al(n);
            if (a <= 0.0) return kNegInf;
            const double win = op.w.window_log(n + 1, m);
            if (win == kNegInf) return kNegInf;
            return (win + kd * al(n + m)) / a;
          },
          M, 0, top, LimsupTest::Finite, b);
      if (s.outcome == Outcome::Fails) {
        v.outcome = Outcome::Fails;
        witness_from(s, k);
        v.note(s.detail);
        return v;
      }
      if (s.outcome != Outcome::Holds) {
        all = false;
        if (!s.detail.empty()) v.note("k=" + std::to_string(k) + ": " + s.detail);
        continue;
      }
      v.certificates.push_back({k, ceil_index(std::max(s.sup, 0.0) + b.stability_tol)});
    }
    if (all) v.outcome = Outcome::Holds;
    else v.certificates.clear();
    return v;
  }

  const LimsupTest test = inf ? LimsupTest::Finite : LimsupTest::NonPositive;
  const SupM s = sup_m_limsup(
      [&](std::size_t m, std::size_t n) {
        const double a = al(n + m);
        if (a <= 0.0) return kNegInf;
        const double win = back ? op.w.window_log(n, m) : op.w.window_log(n + 1, m);
        if (win == kNegInf) return kNegInf;
        return win / a;
      },
      M, 0, top, test, b);
  v.estimate = s.sup;
  v.outcome = s.outcome;
  if (!s.detail.empty()) v.note(s.detail);
  if (s.outcome == Outcome::Fails) {
    witness_from(s, 0);
    return v;
  }
  if (back && !inf) {
    const auto inc = estimate_limsup([&](std::size_t n) { return al(n + 1) - al(n); }, 0, top);
    const Outcome inc_ok = judge_limsup(inc, LimsupTest::Finite, b);
    v.note("increment condition sup(alpha_{n+1}-alpha_n) < inf: " + std::string(to_string(inc_ok)));
    if (v.outcome == Outcome::Holds && inc_ok != Outcome::Holds) {
      v.outcome = Outcome::Inconclusive;
      v.note("displayed condition is only necessary without the increment condition");
    }
  }
  if (v.outcome == Outcome::Holds) {
    const double R = std::max(s.sup, 0.0);
    for (std::size_t k = 0; k < b.k_max; ++k) {
      std::size_t l;
      if (inf) l = ceil_index((R + 2.0) * static_cast<double>(k));
      else if (back) l = k + 1;
      else l = 2 * k + 1;
      v.certificates.push_back({k, l});
    }
  }
  return v;
}

Verdict check_power_bounded_power_series(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  b.validate();
  const PowerSeriesTag& tag = tag_of(op);
  const auto& al = tag.alpha;
  if (!(al(0) > 0.0)) throw PreconditionError("power series power boundedness criterion requires alpha_0 > 0");
  const bool inf = tag.type == PowerSeriesType::Infinite;
  const bool back = op.backward();
  std::string q;
  if (inf)
    q = back ? "sup_{n,m} ln|prod_{j<m} w_{n+j}| / alpha_{n+m} < inf"
             : "for each k: sup_{n,m} (ln|prod_{j=1}^m w_{n+j}| + k alpha_{n+m}) / alpha_n < inf";
  else
    q = back ? "for each k: limsup_{n+m} (ln|prod_{j<m} w_{n+j}| - alpha_n/(k+1)) / alpha_{n+m} < 0"
             : "limsup_{n+m} ln|prod_{j=1}^m w_{n+j}| / alpha_{n+m} <= 0";
  Verdict v = base("power_bounded", q, "power series", b);
  const std::size_t cap = detail::index_cap(op);

  if (inf) {
    const LevelBounds lv = make_levels(b, cap_minus(cap, 1));
    if (lv.levels() < 4) {
      v.note("index range too short for four sweep levels");
      return v;
    }
    op.w.prefetch(lv.top_n() + lv.top_m() + 2);
    al.prefetch(lv.top_n() + lv.top_m() + 2);
    const std::size_t K = back ? 1 : b.k_max;
    std::vector<JointSup> js(K);
    parallel_for(K, [&](std::size_t k) {
      const double kd = static_cast<double>(k);
      js[k] = joint_sup(
          [&](std::size_t n, std::size_t m) {
            const double win = back ? op.w.window_log(n, m) : op.w.window_log(n + 1, m);
            if (win == kNegInf) return kNegInf;
            return back ? win / al(n + m) : (win + kd * al(n + m)) / al(n);
          },
          lv, b);
    });
    bool all = true;
    for (std::size_t k = 0; k < K; ++k) {
      const Located& top = js[k].profile.level.back();
      if (js[k].outcome == Outcome::Fails) {
        v.outcome = Outcome::Fails;
        Witness w;
        w.k = k;
        w.l = exceeded_l(top.value, true, b.l_max);
        w.n = top.n;
        w.m = top.m;
        w.value = top.value;
        v.witness = w;
        v.growth_fit = js[k].slope;
        return v;
      }
      if (js[k].outcome != Outcome::Holds) all = false;
    }
    if (!all) {
      v.note("joint sup not stable over the last sweep levels");
      return v;
    }
    v.outcome = Outcome::Holds;
    for (std::size_t k = 0; k < b.k_max; ++k) {
      const double S = std::max(js[back ? 0 : k].profile.level.back().value, 0.0);
      const std::size_t l = back ? k + ceil_index(S) : ceil_index(S);
      v.certificates.push_back({k, l});
    }
    if (back) v.estimate = js[0].profile.level.back().value;
    return v;
  }

  const std::size_t d_default = (b.n_max + b.m_max) << std::min<std::size_t>(b.doublings, 5);
  const std::size_t d_max = std::min(d_default, cap_minus(cap, 1));
  if (d_max < 256) {
    v.note("index range too short");
    return v;
  }
  op.w.prefetch(d_max + 2);
  al.prefetch(d_max + 2);
  if (!back) {
    const DiagonalLimsup d = limsup_along_n_plus_m(
        [&](std::size_t n, std::size_t m) {
          const double win = op.w.window_log(n + 1, m);
          return win == kNegInf ? kNegInf : win / al(n + m);
        },
        b, d_max);
    v.estimate = best_value(d.estimate);
    v.outcome = judge_limsup(d.estimate, LimsupTest::NonPositive, b);
    if (v.fails()) {
      Witness w;
      w.n = d.arg_n;
      w.m = d.arg_m;
      w.value = d.estimate.value;
      v.witness = w;
      v.growth_fit = d.estimate.slope;
    } else if (v.holds()) {
      for (std::size_t k = 0; k < b.k_max; ++k) v.certificates.push_back({k, 2 * k + 1});
    }
    return v;
  }
  std::vector<DiagonalLimsup> ds(b.k_max);
  parallel_for(b.k_max, [&](std::size_t k) {
    const double kk = static_cast<double>(k) + 1.0;
    ds[k] = limsup_along_n_plus_m(
        [&](std::size_t n, std::size_t m) {
          const double win = op.w.window_log(n, m);
          if (win == kNegInf) return kNegInf;
          return (win - al(n) / kk) / al(n + m);
        },
        b, d_max);
  });
  bool all = true;
  for (std::size_t k = 0; k < b.k_max; ++k) {
    const Outcome o = judge_limsup(ds[k].estimate, LimsupTest::Negative, b);
    if (o == Outcome::Fails) {
      v.outcome = Outcome::Fails;
      Witness w;
      w.k = k;
      w.l = exceeded_l(ds[k].estimate.value, false, b.l_max);
      w.n = ds[k].arg_n;
      w.m = ds[k].arg_m;
      w.value = ds[k].estimate.value;
      v.witness = w;
      v.growth_fit = ds[k].estimate.slope;
      v.estimate = ds[k].estimate.value;
      v.note("superior limit along n+m for k=" + std::to_string(k) + " is " + fmt(ds[k].estimate.value) +
             ", not below 0");
      return v;
    }
    if (o != Outcome::Holds) all = false;
  }
  if (all) {
    v.outcome = Outcome::Holds;
    for (std::size_t k = 0; k < b.k_max; ++k) {
      const double val = ds[k].estimate.value;
      const std::size_t l = val == kNegInf ? k : static_cast<std::size_t>(std::floor(-1.0 / val)) + 1;
      v.certificates.push_back({k, std::max(l, k)});
    }
  }
  return v;
}

namespace {

// F_k(r) / alpha_r where F_k(r) = max_n ln((1/n) sum_{m<=n} K(r,m) a_{r-/+m,k}); backward n <= r.
struct CesaroRatio {
  Outcome outcome = Outcome::Inconclusive;
  LimsupEstimate est;
  std::optional<Witness> witness;
  std::optional<double> growth;
  std::string detail;
};

CesaroRatio cesaro_ratio(const ShiftOperatorSpec& op, const detail::OpTables& t, std::size_t k, std::size_t top,
                         const TruncationBudget& b) {
  const bool back = op.backward();
  const bool inf = infinite_type(op);
  const auto& al = tag_of(op).alpha;
  auto G = [&](std::size_t r, std::vector<double>* per_n) {
    LogSumAccumulator acc;
    double lp = 0.0, best = kNegInf;
    const std::size_t n_top = back ? r : top;
    for (std::size_t m = 1; m <= n_top; ++m) {
      const double lw = back ? t.lw[r - m] : t.lw[r + m];
      if (lw == kNegInf) break;
      lp += lw;
      acc.add(lp + t.a(back ? r - m : r + m, k));
      const double g = acc.log_value() - std::log(static_cast<double>(m));
      best = std::max(best, g);
      if (per_n) per_n->push_back(g);
    }
    return best;
  };
  CesaroRatio out;
  if (!back) {
    // an unbounded sup over n at fixed r rules out every l
    for (std::size_t r = 0; r < std::min<std::size_t>(4, top); ++r) {
      std::vector<double> g;
      g.reserve(top);
      G(r, &g);
      std::vector<double> bmax;
      std::vector<std::size_t> bstart, barg;
      for (std::size_t lo = 1; lo <= g.size(); lo *= 2) {
        const std::size_t hi = std::min(g.size(), 2 * lo - 1);
        Located best;
        for (std::size_t n = lo; n <= hi; ++n) best.offer(g[n - 1], n, 0);
        bmax.push_back(best.value);
        bstart.push_back(lo);
        barg.push_back(best.n);
      }
      const LimsupEstimate e = estimate_from_blocks(bmax, bstart, barg);
      if (judge_limsup(e, LimsupTest::Finite, b) == Outcome::Fails) {
        out.outcome = Outcome::Fails;
        Witness w;
        w.k = k;
        w.l = b.l_max;
        w.r = r;
        w.n = e.argmax;
        w.value = e.value;
        out.witness = w;
        out.growth = e.slope;
        out.detail = "Cesaro sums at r=" + std::to_string(r) + " grow without bound in n";
        out.est = e;
        return out;
      }
    }
  }
  out.est = estimate_limsup(
      [&](std::size_t r) {
        const double a = al(r);
        if (a <= 0.0) return kNegInf;
        return G(r, nullptr) / a;
      },
      1, top);
  out.outcome = judge_limsup(out.est, inf ? LimsupTest::Finite : LimsupTest::Negative, b);
  if (out.outcome == Outcome::Fails) {
    Witness w;
    w.k = k;
    w.r = out.est.argmax;
    w.value = out.est.value;
    w.l = exceeded_l(out.est.value, inf, b.l_max);
    std::vector<double> g;
    G(*w.r, &g);
    if (!g.empty()) w.n = static_cast<std::size_t>(std::max_element(g.begin(), g.end()) - g.begin()) + 1;
    out.witness = w;
    out.growth = out.est.slope;
  }
  return out;
}

std::size_t cesaro_certificate(double rho, bool inf, std::size_t k) {
  if (rho == kNegInf) return k;
  if (inf) return static_cast<std::size_t>(std::floor(std::max(rho, 0.0))) + 1;
  return static_cast<std::size_t>(std::ceil(-1.0 / rho));
}

Verdict cesaro_power_series(const ShiftOperatorSpec& op, const TruncationBudget& b, std::string property) {
  b.validate();
  const bool back = op.backward();
  const bool inf = infinite_type(op);
  std::string q = back ? "for each k: limsup_r max_{n<=r} ln((1/n) sum_{m<=n} prod_{s=1}^m w_{r-s} a_{r-m,k}) / alpha_r"
                       : "for each k: limsup_r sup_n ln((1/n) sum_{m<=n} prod_{s=1}^m w_{r+s} a_{r+m,k}) / alpha_r";
  q += inf ? " < inf" : " < 0";
  Verdict v = base(std::move(property), q, "power series ratio", b);
  const std::size_t cap = detail::index_cap(op);
  const std::size_t top = std::min(b.m_max << b.doublings, cap == kUnbounded ? kUnbounded : (cap < 4 ? 0 : cap / 2 - 1));
  if (top < 64) {
    v.note("index range too short");
    return v;
  }
  if (!detail::weights_nonnegative(op, 2 * top + 2)) {
    v.note("criterion needs nonnegative weights");
    return v;
  }
  const detail::OpTables t = detail::build_tables(op, 2 * top + 2, b.k_max);
  std::vector<CesaroRatio> cr(b.k_max);
  parallel_for(b.k_max, [&](std::size_t k) { cr[k] = cesaro_ratio(op, t, k, top, b); });
  bool all = true;
  for (std::size_t k = 0; k < b.k_max; ++k) {
    if (cr[k].outcome == Outcome::Fails) {
      v.outcome = Outcome::Fails;
      v.witness = cr[k].witness;
      v.growth_fit = cr[k].growth;
      v.estimate = cr[k].est.value;
      if (!cr[k].detail.empty()) v.note(cr[k].detail);
      return v;
    }
    if (cr[k].outcome != Outcome::Holds) all = false;
  }
  if (!all) {
    v.note("ratio limsup not settled for some k");
    return v;
  }
  v.outcome = Outcome::Holds;
  for (std::size_t k = 0; k < b.k_max; ++k)
    v.certificates.push_back({k, cesaro_certificate(best_value(cr[k].est), inf, k)});
  return v;
}

}  // namespace

Verdict check_cesaro_bounded_power_series(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  return cesaro_power_series(op, b, "cesaro_bounded");
}

Verdict check_mean_ergodic_power_series(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  Verdict c = cesaro_power_series(op, b, "mean_ergodic");
  if (op.backward()) return c;
  Verdict v = detail::combine_and(std::move(c), check_forward_limit(op, b), "mean_ergodic", "power series ratio", b);
  return v;
}

}  // namespace shiftlab
