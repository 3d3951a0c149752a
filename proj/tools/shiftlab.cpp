// shiftlab command-line front end: analyze, catalog, simulate.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "shiftlab/catalog.hpp"
#include "shiftlab/config.hpp"
#include "shiftlab/json_report.hpp"
#include "shiftlab/simulator.hpp"

namespace fs = std::filesystem;
using namespace shiftlab;

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kContradiction = 2;

const char* const kProps[] = {"continuity", "topologizable", "power_bounded", "cesaro_bounded", "mean_ergodic"};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << text;
}

std::string witness_text(const Verdict& v) {
  if (!v.witness) return "";
  const Witness& w = *v.witness;
  std::ostringstream os;
  os << " [";
  const char* sep = "";
  auto put = [&](const char* name, const std::optional<std::size_t>& x) {
    if (!x) return;
    os << sep << name << "=" << *x;
    sep = " ";
  };
  put("k", w.k);
  put("l", w.l);
  put("r", w.r);
  put("n", w.n);
  put("m", w.m);
  os << "]";
  return os.str();
}

int run_analyze(const std::string& config_path, const std::string& out_path) {
  const RunConfig rc = load_config(config_path);
  const PropertyReport report = full_report(rc.op, rc.budget);
  const auto rows = compare_expectations(report, rc.expected);

  Json j;
  j["config"] = fs::path(config_path).filename().string();
  j["report"] = to_json(report);
  j["expectations"] = to_json(rows);

  std::optional<fs::path> json_path = rc.json_out;
  if (!out_path.empty()) json_path = fs::path(out_path);
  std::ostream& table = json_path ? std::cout : std::cerr;

  table << report.operator_description << "\n";
  for (const char* p : kProps) {
    const Verdict& v = report.get(p);
    std::string exp = "-";
    for (const auto& r : rows)
      if (r.property == p) exp = std::string(to_string(r.expected)) + " " + to_string(r.status);
    char line[256];
    std::snprintf(line, sizeof line, "  %-15s %-13s %s", p, to_string(v.outcome), exp.c_str());
    table << line << witness_text(v) << "\n";
  }
  table << "  montel          " << to_string(report.montel.outcome) << "\n";

  if (json_path) write_file(*json_path, dump(j));
  else std::cout << dump(j);

  bool contradiction = !report.consistent();
  for (const auto& r : rows) contradiction = contradiction || r.status == RowStatus::Contradiction;
  return contradiction ? kContradiction : kOk;
}

int run_catalog(const std::string& entry, double scale, const std::string& out_path) {
  const TruncationBudget b = TruncationBudget{}.scaled(scale);
  std::vector<EntryVerification> results;
  if (!entry.empty()) {
    results.push_back(verify_entry(catalog_entry(entry), b));
  } else {
    for (const auto& e : catalog_entries()) results.push_back(verify_entry(e, b));
  }

  std::ostream& table = out_path.empty() ? std::cerr : std::cout;
  char line[256];
  std::snprintf(line, sizeof line, "%-18s %-13s %-13s %-13s %-13s %-13s %7s %8s\n", "entry", "continuity",
                "topologizable", "power_bdd", "cesaro_bdd", "mean_ergodic", "contra", "seconds");
  table << line;
  std::size_t total = 0;
  for (const auto& r : results) {
    std::string cells[5];
    for (int i = 0; i < 5; ++i) {
      cells[i] = to_string(r.report.get(kProps[i]).outcome);
      for (const auto& row : r.rows)
        if (row.property == kProps[i] && row.status == RowStatus::Contradiction) cells[i] += "!";
    }
    std::snprintf(line, sizeof line, "%-18s %-13s %-13s %-13s %-13s %-13s %7zu %8.2f\n", r.name.c_str(),
                  cells[0].c_str(), cells[1].c_str(), cells[2].c_str(), cells[3].c_str(), cells[4].c_str(),
                  r.contradictions(), r.seconds);
    table << line;
    total += r.contradictions();
  }
  table << "contradictions: " << total << "\n";

  const std::string text = dump(catalog_json(results, b));
  if (out_path.empty()) std::cout << text;
  else write_file(out_path, text);
  return total == 0 ? kOk : kContradiction;
}

int run_simulate(const std::string& config_path, const std::string& x0_spec, std::size_t n_max,
                 const std::vector<std::size_t>& k_list, const std::string& out_path) {
  const RunConfig rc = load_config(config_path);
  const FiniteVector x0 = parse_vector_spec(x0_spec);
  if (n_max < 2) throw ConfigError("--n-max must be >= 2");
  const TrajectoryRecord t = run_trajectory(rc.op, x0, k_list, n_max, x0_spec);

  std::optional<fs::path> csv_path = rc.csv_out;
  if (!out_path.empty()) csv_path = fs::path(out_path);
  std::ostream& info = csv_path ? std::cout : std::cerr;
  if (csv_path) {
    std::ofstream out(*csv_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + csv_path->string() + "'");
    write_csv(t, out);
  } else {
    write_csv(t, std::cout);
  }

  info << t.op_description << "  x0=" << x0_spec << "  n_max=" << n_max << "\n";
  for (std::size_t k : k_list) {
    const auto c = classify(t, k, TrajectoryRecord::Series::Cesaro);
    const auto p = classify(t, k, TrajectoryRecord::Series::PowerOverN);
    info << "  k=" << k << "  cesaro: " << to_string(c.kind) << "  power/n: " << to_string(p.kind) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted shift operators on Koethe echelon spaces"};
  app.require_subcommand(1);

  std::string config, out, entry, x0;
  double scale = 1.0;
  std::size_t n_max = 0;
  std::vector<std::size_t> k_list{0, 1, 2, 3};

  auto* analyze = app.add_subcommand("analyze", "Decide all properties of a configured operator");
  analyze->add_option("--config", config, "INI config file")->required();
  analyze->add_option("--out", out, "JSON report path");

  auto* catalog = app.add_subcommand("catalog", "Verify the built-in catalog against its expected table");
  catalog->add_option("--entry", entry, "Run a single entry");
  catalog->add_option("--budget-scale", scale, "Multiply n_max, m_max and tail_horizon")->check(CLI::PositiveNumber);
  catalog->add_option("--out", out, "JSON report path");

  auto* simulate = app.add_subcommand("simulate", "Trajectory of Cesaro means and scaled powers");
  simulate->add_option("--config", config, "INI config file")->required();
  simulate->add_option("--x0", x0, "\"e:R\" or \"i:coef,...\"")->required();
  simulate->add_option("--n-max", n_max, "Last n")->required();
  simulate->add_option("--k", k_list, "Seminorm indices")->delimiter(',');
  simulate->add_option("--out", out, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*analyze) return run_analyze(config, out);
    if (*catalog) return run_catalog(entry, scale, out);
    if (*simulate) return run_simulate(config, x0, n_max, k_list, out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}
