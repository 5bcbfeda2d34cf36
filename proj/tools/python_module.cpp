#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "premetric/field_spec.hpp"

namespace py = pybind11;
using namespace premetric;

// JSON crosses the boundary as text; the Python side decodes it.
PYBIND11_MODULE(_core, m) {
  m.doc() = "Residual checks for pre-metric electrodynamics";

  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);

  m.def(
      "check_json",
      [](const std::string& spec_json) {
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(spec_json);
        } catch (const nlohmann::json::exception& e) {
          throw SpecError(e.what());
        }
        const FieldSpec spec = parse_field_spec(j);
        ResidualReport report;
        {
          py::gil_scoped_release release;
          report = run_check(spec);
        }
        return report_to_json(report).dump();
      },
      py::arg("spec_json"));

  m.def(
      "identities_json",
      [](const std::vector<int>& dims, int trials, std::uint64_t seed) {
        IdentityReport report;
        try {
          py::gil_scoped_release release;
          report = run_identities(dims, trials, seed);
        } catch (const std::invalid_argument& e) {
          throw SpecError(e.what());
        }
        return identities_to_json(report, dims, trials, seed).dump();
      },
      py::arg("dims"), py::arg("trials"), py::arg("seed"));

  m.def("catalog_json", [] { return catalog_to_json().dump(); });
  m.def("registered_checks", &registered_checks);
}
