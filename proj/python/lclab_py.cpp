#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lclab/jobs.hpp"

namespace py = pybind11;
using namespace lclab;

PYBIND11_MODULE(_lclab, m)
{
    m.doc() = "Bindings for the lclab exact local cohomology toolkit";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<VerdictWithheld>(m, "VerdictWithheld", PyExc_RuntimeError);

    m.def(
        "run_job",
        [](const std::string& job) {
            JobSpec spec = JobSpec::from_json(Json::parse(job));
            JobResult res;
            {
                py::gil_scoped_release release;
                res = run_job(std::move(spec));
            }
            return py::make_tuple(res.exit_code, render(res.report));
        },
        py::arg("job"), "Runs one JSON job spec; returns (exit_code, report_json).");

    m.def("binom_mod_p", &binom_mod_p, py::arg("d"), py::arg("k"), py::arg("p"));
    m.def(
        "big_binomial", [](std::uint64_t n, std::uint64_t k) { return big_binomial(n, k).get_str(); }, py::arg("n"),
        py::arg("k"), "Exact binomial coefficient as a decimal string.");
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def(
        "normalize_poly",
        [](const std::string& text, std::uint64_t characteristic, int nvars) {
            return Poly::parse(text, CoefficientRing::from_characteristic(characteristic), nvars).to_string();
        },
        py::arg("text"), py::arg("characteristic"), py::arg("nvars"), "Canonical form of a polynomial.");
}
