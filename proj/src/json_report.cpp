#include "shiftlab/json_report.hpp"

#include <cmath>

namespace shiftlab {

Json json_number(double v) {
  if (std::isnan(v)) return "nan";
  if (v == kInf) return "inf";
  if (v == kNegInf) return "-inf";
  return v;
}

Json to_json(const TruncationBudget& b) {
  Json j;
  j["n_max"] = b.n_max;
  j["m_max"] = b.m_max;
  j["k_max"] = b.k_max;
  j["l_max"] = b.l_max;
  j["growth_tol"] = b.growth_tol;
  j["stability_tol"] = b.stability_tol;
  j["doublings"] = b.doublings;
  j["tail_horizon"] = b.tail_horizon;
  return j;
}

Json to_json(const Witness& w) {
  Json j = Json::object();
  if (w.k) j["k"] = *w.k;
  if (w.l) j["l"] = *w.l;
  if (w.n) j["n"] = *w.n;
  if (w.m) j["m"] = *w.m;
  if (w.r) j["r"] = *w.r;
  j["value"] = json_number(w.value);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["property"] = v.property;
  j["outcome"] = to_string(v.outcome);
  if (!v.quantity.empty()) j["quantity"] = v.quantity;
  if (!v.route.empty()) j["route"] = v.route;
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.growth_fit) j["growth_fit"] = json_number(*v.growth_fit);
  if (v.estimate) j["estimate"] = json_number(*v.estimate);
  if (!v.certificates.empty()) {
    Json c = Json::array();
    for (const auto& x : v.certificates) c.push_back({{"k", x.k}, {"l", x.l}});
    j["certificates"] = std::move(c);
  }
  if (!v.notes.empty()) j["notes"] = v.notes;
  if (!v.sub_verdicts.empty()) {
    Json s = Json::array();
    for (const auto& x : v.sub_verdicts) s.push_back(to_json(x));
    j["sub_verdicts"] = std::move(s);
  }
  j["budget"] = to_json(v.budget);
  return j;
}

Json to_json(const PropertyReport& r) {
  Json j;
  j["operator"] = r.operator_description;
  Json props;
  for (const char* p : {"continuity", "topologizable", "power_bounded", "cesaro_bounded", "mean_ergodic"})
    props[p] = to_json(r.get(p));
  j["properties"] = std::move(props);
  j["montel"] = to_json(r.montel);
  Json imp = Json::array();
  for (const auto& f : r.implications)
    imp.push_back({{"premise", f.premise}, {"conclusion", f.conclusion}, {"violated", f.violated}});
  j["implications"] = std::move(imp);
  j["consistent"] = r.consistent();
  j["notes"] = r.notes;
  return j;
}

Json to_json(const std::vector<VerificationRow>& rows) {
  Json a = Json::array();
  for (const auto& row : rows)
    a.push_back({{"property", row.property},
                 {"expected", to_string(row.expected)},
                 {"actual", to_string(row.actual)},
                 {"status", to_string(row.status)}});
  return a;
}

Json to_json(const EntryVerification& e) {
  Json j;
  j["name"] = e.name;
  j["contradictions"] = e.contradictions();
  j["warnings"] = e.warnings();
  j["rows"] = to_json(e.rows);
  j["report"] = to_json(e.report);
  return j;
}

Json catalog_json(const std::vector<EntryVerification>& entries, const TruncationBudget& b) {
  Json j;
  j["budget"] = to_json(b);
  std::size_t c = 0;
  Json a = Json::array();
  for (const auto& e : entries) {
    c += e.contradictions();
    a.push_back(to_json(e));
  }
  j["total_contradictions"] = c;
  j["entries"] = std::move(a);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace shiftlab
