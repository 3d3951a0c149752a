#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "shiftlab/config.hpp"
#include "shiftlab/json_report.hpp"

using namespace shiftlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("shiftlab_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

}  // namespace

TEST_CASE("config with builtin families and budget overrides") {
  TempDir d;
  const auto p = d.write("a.ini",
                         "[space]\nfamily = power-series\ntype = finite\nalpha = power\nalpha_theta = 2\np = inf\n"
                         "[weight]\nfamily = exp-alpha\ngamma = -1\n[shift]\nkind = forward\n"
                         "[budget]\nn_max = 300\ngrowth_tol = 0.1\n[expect]\nmean_ergodic = Holds\n"
                         "[output]\njson = out.json\n");
  const RunConfig rc = load_config(p);
  CHECK(rc.op.kind == ShiftKind::Forward);
  CHECK(rc.op.space.p.is_infinity());
  REQUIRE(rc.op.space.power_series.has_value());
  CHECK(rc.op.space.power_series->type == PowerSeriesType::Finite);
  CHECK(rc.op.space.power_series->alpha(1) == doctest::Approx(4.0));
  CHECK(rc.op.w.log_abs(1) == doctest::Approx(-4.0));
  CHECK(rc.budget.n_max == 300);
  CHECK(rc.budget.m_max == TruncationBudget{}.m_max);
  CHECK(rc.budget.growth_tol == 0.1);
  REQUIRE(rc.expected.size() == 1);
  CHECK(rc.expected[0].expected == Expectation::Holds);
  CHECK(*rc.json_out == d.path / "out.json");
}

TEST_CASE("table files") {
  TempDir d;
  d.write("w.txt", "# index value\n0 1.5\n1 2\n2 -0.5  # tail\n");
  auto v = read_table(d.path / "w.txt");
  CHECK(v == std::vector<double>{1.5, 2.0, -0.5});
  d.write("gap.txt", "0 1\n2 1\n");
  CHECK_THROWS_AS(read_table(d.path / "gap.txt"), ConfigError);
  d.write("three.txt", "0 1 2\n");
  CHECK_THROWS_AS(read_table(d.path / "three.txt"), ConfigError);
  const auto p = d.write("t.ini", "[space]\nalpha = table\nalpha_table = missing_alpha.txt\n[weight]\nfamily = constant\n");
  try {
    load_config(p);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("missing_alpha.txt") != std::string::npos);
  }
}

TEST_CASE("config errors") {
  TempDir d;
  CHECK_THROWS_AS(load_config(d.write("1.ini", "[weight]\nfamily = nope\n")), ConfigError);
  CHECK_THROWS_AS(load_config(d.write("2.ini", "[weight]\nfamily = constant\n[shift]\nkind = sideways\n")), ConfigError);
  CHECK_THROWS_AS(load_config(d.write("3.ini", "[weight]\nfamily = constant\n[budget]\nn_max = -3\n")), ConfigError);
  CHECK_THROWS_AS(load_config(d.write("4.ini", "[weight]\nfamily = constant\n[budget]\nbogus = 1\n")), ConfigError);
  CHECK_THROWS_AS(load_config(d.write("5.ini", "[weight]\nfamily = constant\n[space]\np = 0.5\n")), ConfigError);
  CHECK_THROWS_AS(load_config(d.path / "absent.ini"), ConfigError);
}

TEST_CASE("vector specs") {
  CHECK(parse_vector_spec("e:3").coefficients() == std::vector<double>{0, 0, 0, 1});
  CHECK(parse_vector_spec("0:1,3:0.5").coefficients() == std::vector<double>{1, 0, 0, 0.5});
  CHECK_THROWS_AS(parse_vector_spec("e:x"), ConfigError);
  CHECK_THROWS_AS(parse_vector_spec("3"), ConfigError);
}

TEST_CASE("JSON numbers and verdict schema") {
  CHECK(json_number(kInf) == "inf");
  CHECK(json_number(kNegInf) == "-inf");
  CHECK(json_number(0.1).dump() == "0.1");
  CHECK(Json(1.0 / 3.0).dump() == "0.3333333333333333");
  Verdict v;
  v.property = "power_bounded";
  v.outcome = Outcome::Fails;
  v.witness = Witness{1, 2, 3, 4, std::nullopt, 5.5};
  v.growth_fit = 0.25;
  const Json j = to_json(v);
  for (const char* key : {"property", "outcome", "witness", "growth_fit", "budget"}) CHECK(j.contains(key));
  CHECK(j["witness"].dump() == R"({"k":1,"l":2,"n":3,"m":4,"value":5.5})");
  Verdict h;
  h.property = "continuity";
  h.outcome = Outcome::Holds;
  const Json jh = to_json(h);
  CHECK_FALSE(jh.contains("witness"));
  CHECK(jh.contains("budget"));
}

TEST_CASE("report serialization is reproducible") {
  const SpaceSpec s = make_power_series_space(ExponentSequence::linear(), PowerSeriesType::Infinite, PNorm::finite(1));
  const ShiftOperatorSpec op{ShiftKind::Backward, WeightSequence::polynomial(1.0), s};
  const std::string a = dump(to_json(full_report(op, TruncationBudget{})));
  const std::string b = dump(to_json(full_report(op, TruncationBudget{})));
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j["properties"]["mean_ergodic"]["outcome"] == "Fails");
  CHECK(j["properties"]["mean_ergodic"]["witness"].contains("k"));
}
