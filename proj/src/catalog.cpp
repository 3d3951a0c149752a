#include "shiftlab/catalog.hpp"

#include <algorithm>
#include <chrono>

#include "shiftlab/special_functions.hpp"

namespace shiftlab {

const char* to_string(Expectation e) {
  switch (e) {
    case Expectation::Holds: return "Holds";
    case Expectation::Fails: return "Fails";
    case Expectation::NotHolds: return "not Holds";
    case Expectation::Unspecified: return "-";
  }
  return "-";
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "match";
    case RowStatus::Warning: return "warning";
    case RowStatus::Contradiction: return "CONTRADICTION";
    case RowStatus::Unchecked: return "unchecked";
  }
  return "unchecked";
}

namespace {

using E = Expectation;

std::vector<ExpectedProperty> expect(E cont, E top, E pb, E cb, E me) {
  return {{"continuity", cont}, {"topologizable", top}, {"power_bounded", pb}, {"cesaro_bounded", cb},
          {"mean_ergodic", me}};
}

std::vector<CatalogEntry> build() {
  const auto lin = ExponentSequence::linear();
  const auto lg = ExponentSequence::logarithmic();
  const PNorm p1 = PNorm::finite(1.0);
  const SpaceSpec entire = make_power_series_space(lin, PowerSeriesType::Infinite, p1);
  const SpaceSpec disc = make_power_series_space(lin, PowerSeriesType::Finite, p1);
  const SpaceSpec s = make_power_series_space(lg, PowerSeriesType::Infinite, p1);

  auto zero = [](std::size_t, std::size_t) { return 0.0; };
  auto rising = [](std::size_t n, std::size_t m) { return log_rising(n, m); };
  auto falling = [](std::size_t n, std::size_t m) { return -log_rising(n, m); };
  auto half = [](std::size_t n, std::size_t m) { return 0.5 * log_rising(n, m); };

  std::vector<CatalogEntry> out;
  const auto one = WeightSequence::constant(1.0);
  const auto volterra = WeightSequence::reciprocal_factorial();
  const auto ddz = WeightSequence::polynomial(1.0);

  out.push_back({"delta0-infinite", "difference quotient f -> (f - f(0))/z on H(C)",
                 {ShiftKind::Backward, one, entire}, expect(E::Holds, E::Holds, E::Holds, E::Holds, E::Holds), zero,
                 {}});
  out.push_back({"delta0-finite", "difference quotient f -> (f - f(0))/z on H(D)",
                 {ShiftKind::Backward, one, disc}, expect(E::Holds, E::Holds, E::Holds, E::Holds, E::Holds), zero,
                 {"expected row is the catalog claim; on z^N the N-th Cesaro mean has sup norm about "
                  "1/(N(1-r)) on |z|<=r while every seminorm of z^N decays like r'^N, so no l can bound it"}});
  out.push_back({"volterra-infinite", "integration f -> int_0^z f on H(C)",
                 {ShiftKind::Forward, volterra, entire}, expect(E::Holds, E::Holds, E::Holds, E::Holds, E::Holds),
                 falling, {}});
  out.push_back({"volterra-finite", "integration f -> int_0^z f on H(D)",
                 {ShiftKind::Forward, volterra, disc}, expect(E::Holds, E::Holds, E::Holds, E::Holds, E::Holds),
                 falling, {}});
  out.push_back({"ddz-infinite", "differentiation on H(C)", {ShiftKind::Backward, ddz, entire},
                 expect(E::Holds, E::Holds, E::NotHolds, E::Fails, E::Fails), rising, {}});
  out.push_back({"ddz-finite", "differentiation on H(D)", {ShiftKind::Backward, ddz, disc},
                 expect(E::Holds, E::Holds, E::NotHolds, E::Fails, E::Fails), rising,
                 {"power boundedness excluded: on a Montel space it would force mean ergodicity"}});
  out.push_back({"sqrt-backward-s", "annihilation-like backward shift, weights sqrt(n+1), on s",
                 {ShiftKind::Backward, WeightSequence::sqrt_shifted(), s},
                 expect(E::Holds, E::Fails, E::Fails, E::Unspecified, E::Fails), half,
                 {"statement lists the operator as topologizable; the computation sup_m m/2 = inf shows it is not; "
                  "the computed verdict is encoded"}});
  out.push_back({"sqrt-forward-s", "creation-like forward shift, weights sqrt(n), on s",
                 {ShiftKind::Forward, WeightSequence::sqrt_index(), s},
                 expect(E::Holds, E::Fails, E::Fails, E::Unspecified, E::Fails), half,
                 {"statement lists the operator as topologizable; the computation shows it is not; the computed "
                  "verdict is encoded"}});
  return out;
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() { return build(); }

const CatalogEntry& catalog_entry(const std::string& name) {
  static const std::vector<CatalogEntry> all = build();
  const auto it = std::find_if(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == all.end()) throw Error("unknown catalog entry '" + name + "'");
  return *it;
}

double analytic_log_product(const CatalogEntry& entry, std::size_t n, std::size_t m) {
  if (m == 0) throw PreconditionError("window length m must be >= 1");
  return entry.log_product(n, m);
}

double prefix_log_product(const CatalogEntry& entry, std::size_t n, std::size_t m) {
  return entry.op.backward() ? entry.op.w.window_log(n, m) : entry.op.w.window_log(n + 1, m);
}

std::size_t EntryVerification::contradictions() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.status == RowStatus::Contradiction; }));
}

std::size_t EntryVerification::warnings() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.status == RowStatus::Warning; }));
}

std::vector<VerificationRow> compare_expectations(const PropertyReport& report,
                                                  const std::vector<ExpectedProperty>& expected) {
  std::vector<VerificationRow> rows;
  for (const auto& e : expected) {
    const Outcome got = report.get(e.property).outcome;
    RowStatus st = RowStatus::Unchecked;
    switch (e.expected) {
      case E::Unspecified: st = RowStatus::Unchecked; break;
      case E::NotHolds: st = got == Outcome::Holds ? RowStatus::Contradiction : RowStatus::Match; break;
      case E::Holds:
      case E::Fails: {
        const Outcome want = e.expected == E::Holds ? Outcome::Holds : Outcome::Fails;
        if (got == want) st = RowStatus::Match;
        else if (got == Outcome::Inconclusive) st = RowStatus::Warning;
        else st = RowStatus::Contradiction;
        break;
      }
    }
    rows.push_back({e.property, e.expected, got, st});
  }
  return rows;
}

EntryVerification verify_entry(const CatalogEntry& entry, const TruncationBudget& b) {
  EntryVerification v;
  v.name = entry.name;
  const auto t0 = std::chrono::steady_clock::now();
  v.report = full_report(entry.op, b);
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.rows = compare_expectations(v.report, entry.expected);
  return v;
}

}  // namespace shiftlab
