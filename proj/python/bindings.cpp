#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ctxstat/accardi.hpp"
#include "ctxstat/cli.hpp"
#include "ctxstat/error.hpp"
#include "ctxstat/greechie.hpp"
#include "ctxstat/io.hpp"
#include "ctxstat/kolmo_lp.hpp"
#include "ctxstat/pers.hpp"
#include "ctxstat/synthgen.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace ctxstat;

namespace {

py::dict accardi(double p, double q, double r, double tol) {
  const auto v = accardi_check(p, q, r, tol);
  return py::dict("verdict"_a = std::string(to_string(v.verdict)), "lower"_a = v.lower, "upper"_a = v.upper,
                  "slack"_a = v.slack);
}

py::dict decide_lp(const std::string& problem_json) {
  const auto result = decide_feasibility(io::parse_lp_problem(problem_json));
  py::dict d("feasible"_a = result.feasible, "max_violation"_a = result.max_violation,
             "raw_residual"_a = result.raw_residual);
  d["witness"] = result.witness ? py::cast(*result.witness) : py::none();
  return d;
}

py::object find_state_text(const std::string& hypergraph) {
  const auto s = find_state(io::parse_hypergraph(hypergraph));
  return s ? py::cast(s->values) : py::none();
}

std::vector<std::vector<int>> two_valued_text(const std::string& hypergraph, std::size_t limit) {
  std::vector<std::vector<int>> out;
  for (const auto& s : enumerate_two_valued_states(io::parse_hypergraph(hypergraph), limit)) {
    out.emplace_back(s.values.begin(), s.values.end());
  }
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = 0;
  {
    py::gil_scoped_release release;
    status = cli_main(args, out, err);
  }
  return py::make_tuple(status, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_ctxstat, m) {
  m.doc() = "Contextuality statistics for binary observables";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      py::object instance = exc(e.what());
      instance.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  m.def("accardi_check", &accardi, "p"_a, "q"_a, "r"_a, "tol"_a = kAccardiTol);
  m.def("decide_lp", &decide_lp, "problem_json"_a);
  m.def("find_state", &find_state_text, "hypergraph"_a);
  m.def("two_valued_states", &two_valued_text, "hypergraph"_a, "limit"_a = 1000);
  m.def("born_same_outcome", &born_same_outcome, "theta_a_deg"_a, "theta_b_deg"_a);
  m.def(
      "wilson_interval",
      [](std::uint64_t k, std::uint64_t n) {
        const auto ci = wilson_interval(k, n);
        return py::make_tuple(ci.lower, ci.upper);
      },
      "successes"_a, "n"_a);
  m.def("run_cli", &run_cli, "args"_a, "Run a command line; returns (status, stdout, stderr).");
}
