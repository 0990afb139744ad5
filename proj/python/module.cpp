#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hybridop/analysis.hpp"
#include "hybridop/moments.hpp"
#include "hybridop/operator_eval.hpp"

namespace py = pybind11;
using namespace hybridop;

namespace {

std::vector<double> coeff_list(const MomentPolynomial& m) { return m.poly.coeffs(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "hybrid Baskakov-Szasz operator core";

    py::class_<OperatorValue>(m, "OperatorValue")
        .def_readonly("value", &OperatorValue::value)
        .def_readonly("quadrature_error", &OperatorValue::quadrature_error)
        .def_readonly("truncation_mass_dropped", &OperatorValue::truncation_mass_dropped)
        .def("__repr__", [](const OperatorValue& v) {
            return "OperatorValue(" + format_double(v.value) + " +- " +
                   format_double(v.quadrature_error) + ")";
        });

    m.def(
        "apply",
        [](const std::string& fn, double x, double n, double c) {
            return apply(functions::by_name(fn), x, OperatorParams(n, c));
        },
        py::arg("fn"), py::arg("x"), py::arg("n"), py::arg("c") = 1.0,
        "L_{n,c} fn at x; fn is a bundled function name");

    m.def(
        "derivative",
        [](const std::string& fn, int r, double x, double n, double c) {
            return derivative_of_operator(functions::by_name(fn), r, x, OperatorParams(n, c));
        },
        py::arg("fn"), py::arg("r"), py::arg("x"), py::arg("n"), py::arg("c") = 1.0,
        "d^r/dx^r L_{n,c} fn at x via the derivative-transfer identity");

    m.def(
        "mgf",
        [](double theta, double x, double n, double c) {
            return operator_mgf(theta, x, OperatorParams(n, c));
        },
        py::arg("theta"), py::arg("x"), py::arg("n"), py::arg("c") = 1.0,
        "closed form L_{n,c}(e^{theta t}, x)");

    m.def(
        "raw_moment",
        [](int r, double n, double c) { return coeff_list(raw_moment_closed(OperatorParams(n, c), r)); },
        py::arg("r"), py::arg("n"), py::arg("c") = 1.0,
        "coefficients (in x) of the r-th raw moment polynomial");

    m.def(
        "central_moments",
        [](int m_max, double n, double c) {
            std::vector<std::vector<double>> out;
            for (const auto& mu : central_moment_recurrence(OperatorParams(n, c), m_max))
                out.push_back(coeff_list(mu));
            return out;
        },
        py::arg("m_max"), py::arg("n"), py::arg("c") = 1.0,
        "coefficient lists of mu_0..mu_{m_max} from the recurrence");

    m.def(
        "lambda_norm",
        [](int s, double n, double c) { return lambda_norm(OperatorParams(n, c), s).value; },
        py::arg("s"), py::arg("n"), py::arg("c") = 1.0,
        "normalization lambda_n(c,s) = prod_{i<s} (n+ic)/n");

    m.def(
        "tail_mass",
        [](double x, double delta, double gamma, double n, double c) {
            return tail_mass(OperatorParams(n, c), x, delta, gamma);
        },
        py::arg("x"), py::arg("delta"), py::arg("gamma"), py::arg("n"), py::arg("c") = 1.0,
        "mass of the kernel outside |t - x| < delta, weighted by e^{gamma t}");

    m.def("function_names", &functions::suite_names, "names of the bundled function suite");
}
