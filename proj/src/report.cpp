#include <functional>
#include <string>

#include "detail.hpp"
#include "shiftlab/checkers.hpp"

namespace shiftlab {

namespace {

using Check = std::function<Verdict(const ShiftOperatorSpec&, const TruncationBudget&)>;

// Fast path first; the generic sweep fills an Inconclusive fast-path answer.
Verdict fast_then_generic(const ShiftOperatorSpec& op, const TruncationBudget& b, const Check& fast,
                          const Check& generic) {
  if (!op.space.power_series) return generic(op, b);
  Verdict v;
  try {
    v = fast(op, b);
  } catch (const PreconditionError& e) {
    Verdict g = generic(op, b);
    g.note(std::string("power series route skipped: ") + e.what());
    return g;
  }
  if (v.outcome != Outcome::Inconclusive) return v;
  Verdict g = generic(op, b);
  if (g.outcome == Outcome::Inconclusive) {
    v.sub_verdicts.push_back(std::move(g));
    return v;
  }
  g.note("power series route inconclusive; generic sweep used");
  g.sub_verdicts.push_back(std::move(v));
  return g;
}

void derive(Verdict& target, const Verdict& premise, Outcome o, const std::string& why) {
  if (target.outcome != Outcome::Inconclusive) return;
  target.outcome = o;
  target.route = "implied";
  target.note("implied by " + why);
  if (o == Outcome::Fails) {
    target.witness = premise.witness;
    target.growth_fit = premise.growth_fit;
    if (!target.witness) target.witness = Witness{};
  } else {
    target.certificates = premise.certificates;
  }
}

void flag(PropertyReport& r, const std::string& premise, const std::string& conclusion, bool violated) {
  r.implications.push_back({premise, conclusion, violated});
}

}  // namespace

PropertyReport full_report(const ShiftOperatorSpec& op, const TruncationBudget& b) {
  b.validate();
  PropertyReport r;
  r.operator_description = op.describe();
  r.montel = check_montel(op.space, b);
  r.continuity = fast_then_generic(op, b, check_continuity_power_series, check_continuity);

  if (r.continuity.fails()) {
    for (const char* p : {"topologizable", "power_bounded", "cesaro_bounded", "mean_ergodic"}) {
      Verdict& v = r.get(p);
      v.property = p;
      v.budget = b;
      derive(v, r.continuity, Outcome::Fails, "failure of continuity");
    }
    r.notes.push_back("operator is not continuous; remaining properties fail");
  } else {
    if (r.continuity.outcome == Outcome::Inconclusive)
      r.notes.push_back("continuity not certified; the remaining criteria presuppose it");
    r.topologizable = fast_then_generic(op, b, check_topologizable_power_series, check_topologizable);
    r.power_bounded = fast_then_generic(op, b, check_power_bounded_power_series, check_power_bounded);
    r.cesaro_bounded = fast_then_generic(op, b, check_cesaro_bounded_power_series, check_cesaro_bounded);
    r.mean_ergodic = fast_then_generic(op, b, check_mean_ergodic_power_series, check_mean_ergodic);
  }

  for (int pass = 0; pass < 2; ++pass) {
    if (r.power_bounded.holds()) {
      derive(r.topologizable, r.power_bounded, Outcome::Holds, "power boundedness");
      derive(r.cesaro_bounded, r.power_bounded, Outcome::Holds, "power boundedness");
      if (r.montel.holds())
        derive(r.mean_ergodic, r.power_bounded, Outcome::Holds, "power boundedness on a Montel space");
    }
    if (r.mean_ergodic.holds()) {
      derive(r.cesaro_bounded, r.mean_ergodic, Outcome::Holds, "mean ergodicity");
      derive(r.topologizable, r.mean_ergodic, Outcome::Holds, "mean ergodicity");
    }
    if (r.topologizable.fails()) {
      derive(r.power_bounded, r.topologizable, Outcome::Fails, "failure of topologizability");
      derive(r.mean_ergodic, r.topologizable, Outcome::Fails, "failure of topologizability");
    }
    if (r.cesaro_bounded.fails()) {
      derive(r.mean_ergodic, r.cesaro_bounded, Outcome::Fails, "failure of Cesaro boundedness");
      derive(r.power_bounded, r.cesaro_bounded, Outcome::Fails, "failure of Cesaro boundedness");
    }
  }

  flag(r, "power_bounded", "topologizable", r.power_bounded.holds() && r.topologizable.fails());
  flag(r, "power_bounded", "cesaro_bounded", r.power_bounded.holds() && r.cesaro_bounded.fails());
  flag(r, "mean_ergodic", "cesaro_bounded", r.mean_ergodic.holds() && r.cesaro_bounded.fails());
  flag(r, "mean_ergodic", "topologizable", r.mean_ergodic.holds() && r.topologizable.fails());
  flag(r, "power_bounded+montel", "mean_ergodic",
       r.power_bounded.holds() && r.montel.holds() && r.mean_ergodic.fails());
  const bool any_holds = r.topologizable.holds() || r.power_bounded.holds() || r.cesaro_bounded.holds() ||
                         r.mean_ergodic.holds();
  flag(r, "not continuous", "no other property", r.continuity.fails() && any_holds);
  return r;
}

}  // namespace shiftlab
