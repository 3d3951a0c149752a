#include "shiftlab/sweep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "shiftlab/sequences.hpp"

namespace shiftlab {

namespace {

const double kLn2 = std::log(2.0);

double step_slope(double a, double b) {
  if (b == kInf) return kInf;
  if (a == kNegInf || b == kNegInf || a == kInf) return 0.0;
  return (b - a) / kLn2;
}

}  // namespace

std::size_t LevelBounds::level_of(std::size_t n, std::size_t m) const {
  for (std::size_t s = 0; s < n_bound.size(); ++s)
    if (n <= n_bound[s] && m <= m_bound[s]) return s;
  return n_bound.size();
}

LevelBounds make_levels(const TruncationBudget& b, std::size_t index_cap) {
  LevelBounds lb;
  for (std::size_t s = 0; s <= b.doublings; ++s) {
    const std::size_t n = b.n_max << s;
    const std::size_t m = b.m_max << s;
    if (n + m > index_cap) break;
    lb.n_bound.push_back(n);
    lb.m_bound.push_back(m);
  }
  return lb;
}

std::vector<std::size_t> sparse_grid(std::size_t lo, std::size_t hi, const std::vector<std::size_t>& extra,
                                     std::size_t dense) {
  std::vector<std::size_t> g;
  if (hi < lo) return g;
  std::size_t x = lo;
  for (; x <= hi && x <= dense; ++x) g.push_back(x);
  const double ratio = std::exp2(1.0 / 32.0);
  double y = static_cast<double>(x > 0 ? x - 1 : 0);
  while (!g.empty() && g.back() < hi) {
    y = std::max(y * ratio, static_cast<double>(g.back() + 1));
    const auto next = static_cast<std::size_t>(std::ceil(y));
    g.push_back(std::min(next, hi));
  }
  if (g.empty()) g.push_back(lo);
  for (std::size_t e : extra)
    if (e >= lo && e <= hi) g.push_back(e);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

void LevelProfile::accumulate() {
  for (std::size_t s = 1; s < level.size(); ++s)
    if (level[s - 1].value > level[s].value) level[s] = level[s - 1];
}

double level_slope(const LevelProfile& p, std::size_t s) {
  if (s == 0 || s >= p.level.size()) return 0.0;
  return step_slope(p.level[s - 1].value, p.level[s].value);
}

bool level_stable(const LevelProfile& p, std::size_t s, double tol) {
  if (s == 0 || s >= p.level.size()) return false;
  const double a = p.level[s - 1].value;
  const double b = p.level[s].value;
  if (std::isnan(b) || b == kInf) return false;
  if (b == kNegInf) return true;
  if (a == kNegInf) return false;
  return b - a <= tol;
}

bool level_growing(const LevelProfile& p, double growth_tol) {
  const std::size_t L = p.level.size();
  if (L == 0) return false;
  if (p.level[L - 1].value == kInf) return true;
  if (L < 3) return false;
  const double g1 = level_slope(p, L - 2);
  const double g2 = level_slope(p, L - 1);
  return g1 > growth_tol && g2 > growth_tol && g2 >= 0.8 * g1;
}

KDecision decide_exists_l(std::size_t k, const std::vector<std::vector<LevelProfile>>& per_l,
                          const TruncationBudget& b) {
  KDecision d;
  d.k = k;
  if (per_l.empty() || per_l.front().empty()) {
    d.detail = "no components";
    return d;
  }
  const std::size_t L = per_l.front().front().level.size();
  if (L < 4) {
    d.detail = "fewer than four sweep levels fit the index range";
    return d;
  }
  const std::size_t D = L - 1;

  auto l_min_at = [&](std::size_t s) -> std::optional<std::size_t> {
    for (std::size_t l = 0; l < per_l.size(); ++l) {
      const auto& comps = per_l[l];
      if (std::all_of(comps.begin(), comps.end(),
                      [&](const LevelProfile& p) { return level_stable(p, s, b.stability_tol); }))
        return l;
    }
    return std::nullopt;
  };
  const auto a = l_min_at(D - 2), bb = l_min_at(D - 1), c = l_min_at(D);
  if (a && bb && c && *a == *bb && *bb == *c) {
    d.outcome = Outcome::Holds;
    d.l = *c;
    return d;
  }

  bool all_grow = true;
  for (std::size_t l = 0; l < per_l.size() && all_grow; ++l) {
    const auto& comps = per_l[l];
    all_grow = std::any_of(comps.begin(), comps.end(),
                           [&](const LevelProfile& p) { return level_growing(p, b.growth_tol); });
  }
  if (all_grow) {
    d.outcome = Outcome::Fails;
    const std::size_t l = per_l.size() - 1;
    for (const auto& p : per_l[l]) {
      if (!level_growing(p, b.growth_tol)) continue;
      if (!d.witness || p.level[D].value > d.witness->value) {
        d.witness = p.level[D];
        d.slope = level_slope(p, D);
      }
    }
    d.witness_l = l;
    return d;
  }

  std::ostringstream os;
  auto show = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("none"); };
  os << "k=" << k << ": smallest stable l per level (last three) = " << show(a) << ", " << show(bb) << ", "
     << show(c) << "; not every l grows";
  d.detail = os.str();
  return d;
}

Verdict assemble_verdict(std::string property, std::string quantity, std::string route,
                         const std::vector<KDecision>& ks, const TruncationBudget& b) {
  Verdict v;
  v.property = std::move(property);
  v.quantity = std::move(quantity);
  v.route = std::move(route);
  v.budget = b;
  bool all_hold = !ks.empty();
  for (const auto& d : ks) {
    if (d.outcome == Outcome::Fails && v.outcome != Outcome::Fails) {
      v.outcome = Outcome::Fails;
      Witness w;
      w.k = d.k;
      w.l = d.witness_l;
      if (d.witness) {
        w.n = d.witness->n;
        w.m = d.witness->m;
        w.value = d.witness->value;
      }
      v.witness = w;
      v.growth_fit = d.slope;
    }
    if (d.outcome != Outcome::Holds) all_hold = false;
    if (d.outcome == Outcome::Inconclusive && !d.detail.empty()) v.note(d.detail);
  }
  if (v.outcome != Outcome::Fails && all_hold) {
    v.outcome = Outcome::Holds;
    for (const auto& d : ks) v.certificates.push_back({d.k, *d.l});
  }
  return v;
}

double LimsupEstimate::last_step() const {
  const std::size_t J = block_max.size();
  if (J < 2) return 0.0;
  const double a = block_max[J - 2], bv = block_max[J - 1];
  if (bv == kInf) return kInf;
  if (a == kNegInf || bv == kNegInf) return 0.0;
  return bv - a;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) continue;
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    ++n;
  }
  if (n < 2) return 0.0;
  const double den = static_cast<double>(n) * sxx - sx * sx;
  if (den == 0.0) return 0.0;
  return (static_cast<double>(n) * sxy - sx * sy) / den;
}

LimsupEstimate estimate_from_blocks(std::vector<double> block_max, std::vector<std::size_t> block_start,
                                    std::vector<std::size_t> argmax) {
  LimsupEstimate e;
  e.block_max = std::move(block_max);
  e.block_start = std::move(block_start);
  const std::size_t J = e.block_max.size();
  if (J == 0) return e;
  e.value = e.block_max.back();
  e.argmax = argmax.empty() ? 0 : argmax.back();
  const std::size_t first = J >= 3 ? J - 3 : 0;
  std::vector<double> xs, ys;
  bool inf_seen = false;
  for (std::size_t j = first; j < J; ++j) {
    if (e.block_max[j] == kInf) inf_seen = true;
    xs.push_back(std::log(static_cast<double>(std::max<std::size_t>(1, e.block_start[j]))));
    ys.push_back(e.block_max[j]);
  }
  e.slope = inf_seen ? kInf : fit_slope(xs, ys);
  if (J >= 3 && std::isfinite(e.block_max[J - 3]) && std::isfinite(e.block_max[J - 2]) &&
      std::isfinite(e.block_max[J - 1])) {
    const double d1 = e.block_max[J - 2] - e.block_max[J - 3];
    const double d2 = e.block_max[J - 1] - e.block_max[J - 2];
    if (d1 > 0.0 && d2 > 0.0 && d2 < d1) {
      const double q = d2 / d1;
      e.extrapolated = e.block_max[J - 1] + d2 * q / (1.0 - q);
    }
  }
  return e;
}

LimsupEstimate estimate_limsup(const std::function<double(std::size_t)>& f, std::size_t n_begin,
                               std::size_t n_end, std::size_t per_block) {
  std::vector<double> bmax;
  std::vector<std::size_t> bstart, barg;
  std::size_t lo = n_begin;
  while (lo <= n_end) {
    std::size_t hi = lo < 1 ? 1 : (std::size_t{1} << (std::bit_width(lo))) - 1;
    // a trailing block under half full joins this one
    if (hi < n_end && n_end - hi < (hi + 1) / 2) hi = n_end;
    hi = std::min(hi, n_end);
    Located best;
    const std::size_t len = hi - lo + 1;
    if (len <= per_block) {
      for (std::size_t n = lo; n <= hi; ++n) best.offer(f(n), n, 0);
    } else {
      for (std::size_t i = 0; i < per_block; ++i) {
        const std::size_t n = lo + (len - 1) * i / (per_block - 1);
        best.offer(f(n), n, 0);
      }
    }
    bmax.push_back(best.value);
    bstart.push_back(lo);
    barg.push_back(best.n);
    if (hi == n_end) break;
    lo = hi + 1;
  }
  return estimate_from_blocks(std::move(bmax), std::move(bstart), std::move(barg));
}

const char* to_string(LimsupTest t) {
  switch (t) {
    case LimsupTest::Finite: return "< inf";
    case LimsupTest::NonPositive: return "<= 0";
    case LimsupTest::Negative: return "< 0";
  }
  return "?";
}

Outcome judge_limsup(const LimsupEstimate& e, LimsupTest test, const TruncationBudget& b) {
  const double tol = b.stability_tol;
  const double g = b.growth_tol;
  if (std::isnan(e.value)) return Outcome::Inconclusive;
  if (e.value == kInf) return Outcome::Fails;
  if (e.value == kNegInf) return Outcome::Holds;
  const std::size_t J = e.block_max.size();
  switch (test) {
    case LimsupTest::Finite: {
      if (J >= 3) {
        const double g1 = step_slope(e.block_max[J - 3], e.block_max[J - 2]);
        const double g2 = step_slope(e.block_max[J - 2], e.block_max[J - 1]);
        if (g1 > g && g2 > g && g2 >= 0.8 * g1) return Outcome::Fails;
      }
      return e.slope <= g ? Outcome::Holds : Outcome::Inconclusive;
    }
    case LimsupTest::NonPositive:
      if (e.value <= tol && e.slope <= g) return Outcome::Holds;
      if (e.value > tol && e.last_step() >= -tol * std::fabs(e.value)) return Outcome::Fails;
      return Outcome::Inconclusive;
    case LimsupTest::Negative:
      if (e.value < -tol && e.slope <= g) return Outcome::Holds;
      if (e.value >= -tol && e.last_step() >= -tol * std::fabs(e.value)) return Outcome::Fails;
      return Outcome::Inconclusive;
  }
  return Outcome::Inconclusive;
}

DiagonalLimsup limsup_along_n_plus_m(const std::function<double(std::size_t, std::size_t)>& f,
                                     const TruncationBudget& b, std::size_t d_max) {
  if (d_max == 0) d_max = (b.n_max + b.m_max) << std::min<std::size_t>(b.doublings, 5);
  std::vector<double> bmax;
  std::vector<std::size_t> bstart, barg;
  std::vector<std::pair<std::size_t, std::size_t>> where;
  const std::size_t per_block = 64;
  std::size_t lo = 1;
  while (lo <= d_max) {
    std::size_t hi = (std::size_t{1} << std::bit_width(lo)) - 1;
    if (hi < d_max && d_max - hi < (hi + 1) / 2) hi = d_max;
    hi = std::min(hi, d_max);
    const std::size_t len = hi - lo + 1;
    Located best;
    auto diag = [&](std::size_t d) {
      for (std::size_t n : sparse_grid(0, d - 1)) best.offer(f(n, d - n), n, d - n);
    };
    if (len <= per_block) {
      for (std::size_t d = lo; d <= hi; ++d) diag(d);
    } else {
      for (std::size_t i = 0; i < per_block; ++i) diag(lo + (len - 1) * i / (per_block - 1));
    }
    bmax.push_back(best.value);
    bstart.push_back(lo);
    barg.push_back(best.n + best.m);
    where.emplace_back(best.n, best.m);
    lo = hi + 1;
  }
  DiagonalLimsup out;
  out.estimate = estimate_from_blocks(std::move(bmax), std::move(bstart), std::move(barg));
  if (!where.empty()) {
    out.arg_n = where.back().first;
    out.arg_m = where.back().second;
  }
  return out;
}

}  // namespace shiftlab
