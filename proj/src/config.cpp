#include "shiftlab/config.hpp"

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <sstream>

namespace shiftlab {

namespace pt = boost::property_tree;
namespace fs = std::filesystem;

namespace {

double to_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError(what + ": cannot parse number '" + s + "'");
  }
  if (used != s.size()) throw ConfigError(what + ": cannot parse number '" + s + "'");
  return v;
}

std::size_t to_index(const std::string& s, const std::string& what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ConfigError(what + ": expected a nonnegative integer, got '" + s + "'");
  return v;
}

std::string get(const pt::ptree& t, const std::string& key) {
  const auto v = t.get_optional<std::string>(key);
  if (!v) throw ConfigError("missing key '" + key + "'");
  return *v;
}

std::string get_or(const pt::ptree& t, const std::string& key, const std::string& dflt) {
  return t.get<std::string>(key, dflt);
}

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path q(p);
  return q.is_absolute() ? q : base / q;
}

ExponentSequence load_alpha(const pt::ptree& t, const fs::path& base) {
  const std::string a = get_or(t, "space.alpha", "linear");
  if (a == "linear") return ExponentSequence::linear();
  if (a == "logarithmic") return ExponentSequence::logarithmic();
  if (a == "power") return ExponentSequence::power(to_double(get(t, "space.alpha_theta"), "space.alpha_theta"));
  if (a == "table") {
    const fs::path p = resolve(base, get(t, "space.alpha_table"));
    return ExponentSequence::table(read_table(p), p.filename().string());
  }
  throw ConfigError("unknown alpha family '" + a + "'");
}

SpaceSpec load_space(const pt::ptree& t, const fs::path& base) {
  const std::string family = get_or(t, "space.family", "power-series");
  PNorm p = PNorm::finite(1.0);
  try {
    p = PNorm::parse(get_or(t, "space.p", "1"));
  } catch (const Error& e) {
    throw ConfigError(std::string("space.p: ") + e.what());
  }
  try {
    if (family == "power-series") {
      const std::string type = get_or(t, "space.type", "infinite");
      if (type != "infinite" && type != "finite") throw ConfigError("space.type must be finite or infinite");
      return make_power_series_space(load_alpha(t, base),
                                     type == "infinite" ? PowerSeriesType::Infinite : PowerSeriesType::Finite, p);
    }
    if (family == "koethe-custom") {
      const std::string m = get(t, "space.matrix");
      if (m == "ones") return make_koethe_space(KoetheMatrix::ones(), p);
      if (m == "polynomial") return make_koethe_space(KoetheMatrix::polynomial(), p);
      if (m == "infinite-type") return make_koethe_space(KoetheMatrix::infinite_type(load_alpha(t, base)), p);
      if (m == "finite-type") return make_koethe_space(KoetheMatrix::finite_type(load_alpha(t, base)), p);
      throw ConfigError("unknown space.matrix '" + m + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("space: ") + e.what());
  }
  throw ConfigError("unknown space.family '" + family + "'");
}

WeightSequence load_weight(const pt::ptree& t, const fs::path& base) {
  const std::string f = get(t, "weight.family");
  if (f == "constant") return WeightSequence::constant(to_double(get_or(t, "weight.c", "1"), "weight.c"));
  if (f == "polynomial") return WeightSequence::polynomial(to_double(get_or(t, "weight.theta", "1"), "weight.theta"));
  if (f == "identity") return WeightSequence::identity();
  if (f == "exp-alpha") return WeightSequence::exp_alpha(to_double(get(t, "weight.gamma"), "weight.gamma"), load_alpha(t, base));
  if (f == "reciprocal-factorial") return WeightSequence::reciprocal_factorial();
  if (f == "sqrt-shifted") return WeightSequence::sqrt_shifted();
  if (f == "sqrt") return WeightSequence::sqrt_index();
  if (f == "exp-exp") return WeightSequence::exp_exp();
  if (f == "table") {
    const fs::path p = resolve(base, get(t, "weight.table"));
    return WeightSequence::table(read_table(p), p.filename().string());
  }
  throw ConfigError("unknown weight.family '" + f + "'");
}

Expectation parse_expectation(const std::string& s) {
  if (s == "Holds") return Expectation::Holds;
  if (s == "Fails") return Expectation::Fails;
  if (s == "NotHolds") return Expectation::NotHolds;
  throw ConfigError("expectation must be Holds, Fails or NotHolds, got '" + s + "'");
}

}  // namespace

std::vector<double> read_table(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open table file '" + path.string() + "'");
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string idx, val, extra;
    if (!(ls >> idx)) continue;
    if (!(ls >> val) || (ls >> extra))
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected two columns");
    const std::size_t i = to_index(idx, path.string() + ":" + std::to_string(lineno));
    if (i != values.size())
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": index " + std::to_string(i) +
                        " out of sequence, expected " + std::to_string(values.size()));
    values.push_back(to_double(val, path.string() + ":" + std::to_string(lineno)));
  }
  if (values.empty()) throw ConfigError("table file '" + path.string() + "' has no rows");
  return values;
}

FiniteVector parse_vector_spec(const std::string& spec) {
  if (spec.rfind("e:", 0) == 0) return basis_vector(to_index(spec.substr(2), "x0"));
  std::vector<double> c;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError("x0: expected i:coef, got '" + item + "'");
    const std::size_t i = to_index(item.substr(0, colon), "x0 index");
    const double v = to_double(item.substr(colon + 1), "x0 coefficient");
    if (c.size() <= i) c.resize(i + 1, 0.0);
    c[i] += v;
  }
  if (c.empty()) throw ConfigError("x0: empty vector spec");
  return FiniteVector(std::move(c));
}

RunConfig load_config(const fs::path& path) {
  pt::ptree t;
  try {
    pt::read_ini(path.string(), t);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("cannot read config '" + path.string() + "': " + e.message());
  }
  const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
  const std::string kind = get_or(t, "shift.kind", "backward");
  if (kind != "backward" && kind != "forward") throw ConfigError("shift.kind must be backward or forward");
  RunConfig rc{ShiftOperatorSpec{kind == "backward" ? ShiftKind::Backward : ShiftKind::Forward, load_weight(t, base),
                                 load_space(t, base)},
               TruncationBudget{}, {}, std::nullopt, std::nullopt};
  if (const auto b = t.get_child_optional("budget")) {
    for (const auto& [key, node] : *b) {
      const std::string v = node.get_value<std::string>();
      const std::string what = "budget." + key;
      if (key == "n_max") rc.budget.n_max = to_index(v, what);
      else if (key == "m_max") rc.budget.m_max = to_index(v, what);
      else if (key == "k_max") rc.budget.k_max = to_index(v, what);
      else if (key == "l_max") rc.budget.l_max = to_index(v, what);
      else if (key == "doublings") rc.budget.doublings = to_index(v, what);
      else if (key == "tail_horizon") rc.budget.tail_horizon = to_index(v, what);
      else if (key == "growth_tol") rc.budget.growth_tol = to_double(v, what);
      else if (key == "stability_tol") rc.budget.stability_tol = to_double(v, what);
      else throw ConfigError("unknown budget key '" + key + "'");
    }
    try {
      rc.budget.validate();
    } catch (const Error& e) {
      throw ConfigError(std::string("budget: ") + e.what());
    }
  }
  if (const auto e = t.get_child_optional("expect")) {
    for (const auto& [key, node] : *e) {
      static const char* known[] = {"continuity", "topologizable", "power_bounded", "cesaro_bounded", "mean_ergodic", "montel"};
      if (std::find(std::begin(known), std::end(known), key) == std::end(known))
        throw ConfigError("unknown property in [expect]: '" + key + "'");
      rc.expected.push_back({key, parse_expectation(node.get_value<std::string>())});
    }
  }
  if (const auto j = t.get_optional<std::string>("output.json")) rc.json_out = resolve(base, *j);
  if (const auto c = t.get_optional<std::string>("output.csv")) rc.csv_out = resolve(base, *c);
  return rc;
}

}  // namespace shiftlab
