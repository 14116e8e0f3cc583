// Python bindings for the weight prediction core. Job descriptions use the
// same `key=value` text as the command-line tool.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "serrewt/character_matching.hpp"
#include "serrewt/cli.hpp"

namespace py = pybind11;
using namespace serrewt;

namespace {

std::vector<std::string> weight_names(const WeightSet& set) {
  std::vector<std::string> out;
  for (const auto& w : set) out.push_back(format_weight(w));
  return out;
}

std::vector<std::string> predict(const std::string& job_text) {
  cli::JobSpec job = cli::parse_input(job_text);
  if (job.delta) return weight_names(predicted_weight_set_for_delta(job.type, *job.delta, job.params));
  return weight_names(predicted_weight_set(job.type, job.params));
}

std::vector<std::string> closed_form(const std::string& job_text) {
  cli::JobSpec job = cli::parse_input(job_text);
  return weight_names(closed_form_weight_set(job.type, job.params));
}

py::tuple reproduce_tables() {
  bool ok = false;
  std::string text = cli::cmd_reproduce_tables(&ok);
  return py::make_tuple(text, ok);
}

py::tuple verify(const std::string& suite, std::optional<int> p, std::optional<int> s,
                 std::optional<int> e, double max_seconds, const std::string& nu) {
  cli::VerifyRequest req;
  req.suite = suite;
  req.p = p;
  req.s = s;
  req.e = e;
  req.max_seconds = max_seconds;
  req.nu = parse_nu_convention(nu);
  std::ostringstream out;
  int code = cli::cmd_verify(req, out);
  return py::make_tuple(code, out.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Serre weight prediction for tamely ramified local types";
  py::register_exception<cli::InputError>(m, "InputError", PyExc_ValueError);

  m.def("predict", &predict, py::arg("job"),
        "Sorted list of predicted weights F(a,b) for a job description.");
  m.def("closed_form", &closed_form, py::arg("job"),
        "Sorted list of weights from the closed-form description.");
  m.def("predict_text", [](const std::string& job) { return cli::cmd_predict(cli::parse_input(job)); },
        py::arg("job"), "Output of the predict command for a job description.");
  m.def("jh", [](const std::string& job) { return cli::cmd_jh(cli::parse_input(job)); }, py::arg("job"),
        "Jordan-Holder constituents of a cuspidal type, as command output.");
  m.def("reproduce_tables", &reproduce_tables, "Tuple (report text, all containment rows hold).");
  m.def("verify_suites", &cli::verify_suite_names, "Names accepted by verify().");
  m.def("verify", &verify, py::arg("suite"), py::arg("p") = py::none(), py::arg("s") = py::none(),
        py::arg("e") = py::none(), py::arg("max_seconds") = 0.0, py::arg("nu") = "successor",
        "Run a verification suite. Returns (exit code, report text).");
  m.attr("EXIT_OK") = cli::kExitOk;
  m.attr("EXIT_INPUT_ERROR") = cli::kExitInputError;
  m.attr("EXIT_VERIFICATION_FAILURE") = cli::kExitVerificationFailure;
}
