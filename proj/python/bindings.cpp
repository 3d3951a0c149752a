#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shiftlab/catalog.hpp"
#include "shiftlab/config.hpp"
#include "shiftlab/json_report.hpp"
#include "shiftlab/simulator.hpp"
#include "shiftlab/special_functions.hpp"

namespace py = pybind11;
using namespace shiftlab;

namespace {

// JSON text crosses the boundary; the Python side parses it with the json module.
std::string verdict_json(const Verdict& v) { return to_json(v).dump(); }

FiniteVector to_vector(const std::vector<double>& c) { return FiniteVector(c); }

PowerSeriesType parse_type(const std::string& t) {
  if (t == "infinite") return PowerSeriesType::Infinite;
  if (t == "finite") return PowerSeriesType::Finite;
  throw Error("type must be 'finite' or 'infinite'");
}

ShiftKind parse_kind(const std::string& k) {
  if (k == "backward") return ShiftKind::Backward;
  if (k == "forward") return ShiftKind::Forward;
  throw Error("kind must be 'backward' or 'forward'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weighted shift operators on Koethe echelon and power series spaces";

  // translators run newest first, so the base class goes in first
  auto& base = py::register_exception<Error>(m, "ShiftlabError");
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

  py::class_<ExponentSequence>(m, "ExponentSequence")
      .def_static("linear", &ExponentSequence::linear)
      .def_static("logarithmic", &ExponentSequence::logarithmic)
      .def_static("power", &ExponentSequence::power, py::arg("theta"))
      .def_static("table", &ExponentSequence::table, py::arg("values"), py::arg("name") = "table")
      .def_property_readonly("name", &ExponentSequence::name)
      .def("__call__", &ExponentSequence::operator());

  py::class_<WeightSequence>(m, "WeightSequence")
      .def_static("constant", &WeightSequence::constant, py::arg("c"))
      .def_static("zero", &WeightSequence::zero)
      .def_static("polynomial", &WeightSequence::polynomial, py::arg("theta"))
      .def_static("identity", &WeightSequence::identity)
      .def_static("exp_alpha", &WeightSequence::exp_alpha, py::arg("gamma"), py::arg("alpha"))
      .def_static("reciprocal_factorial", &WeightSequence::reciprocal_factorial)
      .def_static("sqrt_shifted", &WeightSequence::sqrt_shifted)
      .def_static("sqrt_index", &WeightSequence::sqrt_index)
      .def_static("exp_exp", &WeightSequence::exp_exp)
      .def_static("table", &WeightSequence::table, py::arg("values"), py::arg("name") = "table")
      .def_property_readonly("name", &WeightSequence::name)
      .def("value", &WeightSequence::value)
      .def("log_abs", &WeightSequence::log_abs)
      .def("window_log", &WeightSequence::window_log, py::arg("n"), py::arg("m"));

  py::class_<SpaceSpec>(m, "Space")
      .def_static(
          "power_series",
          [](const ExponentSequence& a, const std::string& type, const std::string& p) {
            return make_power_series_space(a, parse_type(type), PNorm::parse(p));
          },
          py::arg("alpha"), py::arg("type"), py::arg("p") = "1")
      .def_static(
          "koethe",
          [](const std::string& matrix, const std::string& p) {
            if (matrix == "ones") return make_koethe_space(KoetheMatrix::ones(), PNorm::parse(p));
            if (matrix == "polynomial") return make_koethe_space(KoetheMatrix::polynomial(), PNorm::parse(p));
            throw Error("matrix must be 'ones' or 'polynomial'");
          },
          py::arg("matrix"), py::arg("p") = "1")
      .def("entry", [](const SpaceSpec& s, std::size_t n, std::size_t k) { return s.matrix.entry(n, k); })
      .def("describe", &SpaceSpec::describe)
      .def("seminorm", [](const SpaceSpec& s, const std::vector<double>& x, std::size_t k) {
        return seminorm(to_vector(x), k, s);
      });

  py::class_<ShiftOperatorSpec>(m, "ShiftOperator")
      .def(py::init([](const std::string& kind, const WeightSequence& w, const SpaceSpec& s) {
             return ShiftOperatorSpec{parse_kind(kind), w, s};
           }),
           py::arg("kind"), py::arg("weight"), py::arg("space"))
      .def("describe", &ShiftOperatorSpec::describe)
      .def("apply", [](const ShiftOperatorSpec& op, const std::vector<double>& x) {
        return apply(op, to_vector(x)).coefficients();
      })
      .def("iterate", [](const ShiftOperatorSpec& op, const std::vector<double>& x, std::size_t mm) {
        return iterate(op, to_vector(x), mm).coefficients();
      })
      .def("cesaro_mean", [](const ShiftOperatorSpec& op, const std::vector<double>& x, std::size_t n) {
        return cesaro_mean(op, to_vector(x), n).coefficients();
      })
      .def("iterate_seminorm", [](const ShiftOperatorSpec& op, const std::vector<double>& x, std::size_t mm,
                                  std::size_t k) { return iterate_seminorm(op, to_vector(x), mm, k); })
      .def("cesaro_seminorm", [](const ShiftOperatorSpec& op, const std::vector<double>& x, std::size_t n,
                                 std::size_t k) { return cesaro_seminorm(op, to_vector(x), n, k); });

  py::class_<TruncationBudget>(m, "Budget")
      .def(py::init<>())
      .def_readwrite("n_max", &TruncationBudget::n_max)
      .def_readwrite("m_max", &TruncationBudget::m_max)
      .def_readwrite("k_max", &TruncationBudget::k_max)
      .def_readwrite("l_max", &TruncationBudget::l_max)
      .def_readwrite("growth_tol", &TruncationBudget::growth_tol)
      .def_readwrite("stability_tol", &TruncationBudget::stability_tol)
      .def_readwrite("doublings", &TruncationBudget::doublings)
      .def_readwrite("tail_horizon", &TruncationBudget::tail_horizon)
      .def("scaled", &TruncationBudget::scaled);

  using Check = Verdict (*)(const ShiftOperatorSpec&, const TruncationBudget&);
  const std::pair<const char*, Check> checks[] = {
      {"check_continuity", &check_continuity},
      {"check_topologizable", &check_topologizable},
      {"check_power_bounded", &check_power_bounded},
      {"check_cesaro_bounded", &check_cesaro_bounded},
      {"check_mean_ergodic", &check_mean_ergodic},
      {"check_forward_limit", &check_forward_limit},
      {"check_continuity_power_series", &check_continuity_power_series},
      {"check_topologizable_power_series", &check_topologizable_power_series},
      {"check_power_bounded_power_series", &check_power_bounded_power_series},
      {"check_cesaro_bounded_power_series", &check_cesaro_bounded_power_series},
      {"check_mean_ergodic_power_series", &check_mean_ergodic_power_series},
  };
  for (const auto& [name, fn] : checks) {
    m.def(
        name,
        [fn = fn](const ShiftOperatorSpec& op, const TruncationBudget& b) {
          Verdict v;
          {
            py::gil_scoped_release release;
            v = fn(op, b);
          }
          return verdict_json(v);
        },
        py::arg("op"), py::arg("budget") = TruncationBudget{});
  }
  m.def(
      "check_montel",
      [](const SpaceSpec& s, const TruncationBudget& b) { return verdict_json(check_montel(s, b)); },
      py::arg("space"), py::arg("budget") = TruncationBudget{});
  m.def(
      "full_report",
      [](const ShiftOperatorSpec& op, const TruncationBudget& b) {
        PropertyReport r;
        {
          py::gil_scoped_release release;
          r = full_report(op, b);
        }
        return to_json(r).dump();
      },
      py::arg("op"), py::arg("budget") = TruncationBudget{});

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog_entries()) names.push_back(e.name);
    return names;
  });
  m.def("catalog_operator", [](const std::string& name) { return catalog_entry(name).op; });
  m.def(
      "verify_entry",
      [](const std::string& name, const TruncationBudget& b) {
        EntryVerification v;
        {
          py::gil_scoped_release release;
          v = verify_entry(catalog_entry(name), b);
        }
        return to_json(v).dump();
      },
      py::arg("name"), py::arg("budget") = TruncationBudget{});
  m.def("analytic_log_product", [](const std::string& name, std::size_t n, std::size_t mm) {
    return analytic_log_product(catalog_entry(name), n, mm);
  });

  m.def(
      "run_trajectory",
      [](const ShiftOperatorSpec& op, const std::vector<double>& x, const std::vector<std::size_t>& ks,
         std::size_t n_max) {
        const TrajectoryRecord t = run_trajectory(op, to_vector(x), ks, n_max);
        py::list rows;
        for (const auto& p : t.points)
          rows.append(py::make_tuple(p.n, p.k, p.cesaro(), p.power_over_n(), p.support_width));
        return rows;
      },
      py::arg("op"), py::arg("x0"), py::arg("k_list"), py::arg("n_max"));
  m.def(
      "classify",
      [](const std::vector<double>& log_values, double tol) {
        const ConvergenceClass c = classify(log_values, tol);
        return py::make_tuple(to_string(c.kind), c.rate);
      },
      py::arg("log_values"), py::arg("tol") = 1e-6);
  m.def("forward_limit_sequence", &forward_limit_sequence, py::arg("op"), py::arg("r"), py::arg("k"),
        py::arg("n_max"));

  m.def(
      "load_config",
      [](const std::string& path) {
        const RunConfig rc = load_config(path);
        return py::make_tuple(rc.op, rc.budget);
      },
      py::arg("path"));
  m.def("log_gamma", &log_gamma);
  m.def("log_rising", &log_rising);
}
