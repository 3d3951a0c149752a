#include "shiftlab/verdict.hpp"

#include <algorithm>
#include <cmath>

#include "shiftlab/sequences.hpp"

namespace shiftlab {

void TruncationBudget::validate() const {
  if (n_max < 1 || m_max < 1 || k_max < 1 || l_max < 1)
    throw Error("budget bounds must be >= 1");
  if (!(growth_tol > 0.0) || !(stability_tol > 0.0)) throw Error("budget tolerances must be > 0");
  if (doublings < 2) throw Error("budget needs doublings >= 2");
  if (tail_horizon < 64) throw Error("budget tail_horizon must be >= 64");
}

TruncationBudget TruncationBudget::scaled(double f) const {
  if (!(f > 0.0)) throw Error("budget scale must be > 0");
  TruncationBudget b = *this;
  auto sc = [f](std::size_t v) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(v) * f)));
  };
  b.n_max = sc(n_max);
  b.m_max = sc(m_max);
  b.tail_horizon = std::max<std::size_t>(64, sc(tail_horizon));
  return b;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

bool PropertyReport::consistent() const {
  return std::none_of(implications.begin(), implications.end(),
                      [](const ImplicationFlag& f) { return f.violated; });
}

const Verdict& PropertyReport::get(const std::string& property) const {
  return const_cast<PropertyReport*>(this)->get(property);
}

Verdict& PropertyReport::get(const std::string& property) {
  if (property == "continuity") return continuity;
  if (property == "topologizable") return topologizable;
  if (property == "power_bounded") return power_bounded;
  if (property == "cesaro_bounded") return cesaro_bounded;
  if (property == "mean_ergodic") return mean_ergodic;
  if (property == "montel") return montel;
  throw Error("unknown property '" + property + "'");
}

}  // namespace shiftlab
