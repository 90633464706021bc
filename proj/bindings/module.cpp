#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cartan/catalog.hpp"
#include "cartan/quadrature.hpp"
#include "cartan/special.hpp"
#include "cartan/spectrum.hpp"
#include "cartan/symbol.hpp"
#include "cartan/verify.hpp"

namespace py = pybind11;
using namespace cartan;

PYBIND11_MODULE(_cartan_spectra, m) {
  m.doc() = "Radial Toeplitz eigenvalues on weighted Bergman spaces over "
            "bounded symmetric domains";

  py::register_exception<catalog_error>(m, "CatalogError", PyExc_ValueError);
  py::register_exception<symbol_error>(m, "SymbolError", PyExc_ValueError);
  py::register_exception<quadrature_error>(m, "QuadratureError", PyExc_ValueError);
  py::register_exception<spectrum_error>(m, "SpectrumError", PyExc_ValueError);
  py::register_exception<special_error>(m, "SpecialError", PyExc_ValueError);

  py::class_<DomainSpec>(m, "DomainSpec")
      .def_static("type_I", &DomainSpec::type_I, py::arg("m"), py::arg("n"))
      .def_static("type_II", &DomainSpec::type_II, py::arg("m"))
      .def_static("type_III", &DomainSpec::type_III, py::arg("n"))
      .def_static("type_IV", &DomainSpec::type_IV, py::arg("n"))
      .def_static("type_V", &DomainSpec::type_V)
      .def_static("type_VI", &DomainSpec::type_VI)
      .def_static("custom", &DomainSpec::custom, py::arg("r"), py::arg("a"), py::arg("b"))
      .def("__repr__", [](const DomainSpec& s) { return format_domain_spec(s); });

  py::class_<CartanDomain>(m, "CartanDomain")
      .def_readonly("r", &CartanDomain::r)
      .def_readonly("a", &CartanDomain::a)
      .def_readonly("b", &CartanDomain::b)
      .def_readonly("n", &CartanDomain::n)
      .def_readonly("n_tube", &CartanDomain::n_tube)
      .def_readonly("p", &CartanDomain::p)
      .def_readonly("formal", &CartanDomain::formal)
      .def_property_readonly("tube_type", &CartanDomain::tube_type)
      .def_property_readonly("family_name", &CartanDomain::family_name)
      .def_property_readonly("erratum", &CartanDomain::erratum)
      .def("__repr__", [](const CartanDomain& d) {
        return d.family_name() + "(r=" + std::to_string(d.r) +
               ", a=" + std::to_string(d.a) + ", b=" + std::to_string(d.b) + ")";
      });

  m.def("build_domain", &build_domain, py::arg("spec"));
  m.def("parse_domain_spec", &parse_domain_spec, py::arg("text"));

  py::class_<RadialSymbol>(m, "RadialSymbol")
      .def_property_readonly("arity", &RadialSymbol::arity)
      .def_property_readonly("name", &RadialSymbol::name)
      .def_property_readonly("degree", &RadialSymbol::degree)
      .def("eval",
           [](const RadialSymbol& s, const std::vector<double>& x) { return s.eval(x); },
           py::arg("x"));

  m.def("parse_symbol", &parse_symbol, py::arg("text"), py::arg("r"));
  m.def("parse_builtin", &parse_builtin, py::arg("text"), py::arg("r"));
  m.def("check_symmetric", &check_symmetric, py::arg("symbol"),
        py::arg("samples") = 64, py::arg("tol") = 1e-10);

  py::class_<QuadratureRule>(m, "QuadratureRule")
      .def_readonly("nodes", &QuadratureRule::nodes)
      .def_readonly("weights", &QuadratureRule::weights)
      .def_readonly("kappa", &QuadratureRule::kappa)
      .def_readonly("mu", &QuadratureRule::mu)
      .def_readonly("order", &QuadratureRule::order);

  m.def("jacobi_rule", &jacobi_rule, py::arg("n"), py::arg("kappa"), py::arg("mu"));
  m.def("radial_density_integral",
        [](const CartanDomain& d, double lambda, const std::vector<int>& alpha,
           const RadialSymbol* psi, int N) {
          return radial_density_integral(d, lambda, alpha, psi, N);
        },
        py::arg("domain"), py::arg("lam"), py::arg("alpha"),
        py::arg("psi") = nullptr, py::arg("nodes") = 48);
  m.def("exact_node_count", &exact_node_count, py::arg("domain"), py::arg("degree"));

  m.def("log_gamma", &log_gamma, py::arg("x"));
  m.def("log_beta", &log_beta, py::arg("a"), py::arg("b"));
  m.def("reg_inc_beta", &reg_inc_beta, py::arg("a"), py::arg("b"), py::arg("x"));
  m.def("selberg_integral_log", &selberg_integral_log, py::arg("r"),
        py::arg("alpha0"), py::arg("beta0"), py::arg("gamma0"));

  py::class_<MultiIndex>(m, "MultiIndex")
      .def(py::init([](std::vector<int> parts) { return MultiIndex{std::move(parts)}; }),
           py::arg("parts"))
      .def_readonly("parts", &MultiIndex::parts)
      .def_property_readonly("weight", &MultiIndex::weight)
      .def("dashed", &MultiIndex::dashed)
      .def("__repr__", [](const MultiIndex& a) { return a.dashed(); });

  m.def("enumerate_signatures", &enumerate_signatures, py::arg("r"), py::arg("alpha_max"));

  py::class_<EigenvalueRecord>(m, "EigenvalueRecord")
      .def_readonly("domain", &EigenvalueRecord::domain)
      .def_readonly("lam", &EigenvalueRecord::lambda)
      .def_readonly("alpha", &EigenvalueRecord::alpha)
      .def_readonly("value", &EigenvalueRecord::value)
      .def_readonly("numerator", &EigenvalueRecord::numerator)
      .def_readonly("denominator", &EigenvalueRecord::denominator)
      .def_readonly("nodes", &EigenvalueRecord::nodes)
      .def_readonly("err_estimate", &EigenvalueRecord::err_estimate)
      .def_readonly("symbol_name", &EigenvalueRecord::symbol_name);

  m.def("eigenvalue", &eigenvalue, py::arg("domain"), py::arg("lam"), py::arg("psi"),
        py::arg("alpha"), py::arg("nodes") = 48);
  m.def("eigenvalue_table", &eigenvalue_table, py::arg("domain"), py::arg("lam"),
        py::arg("psi"), py::arg("alpha_max") = 5, py::arg("nodes") = 48,
        py::arg("threads") = 0);
  m.def("rectangular_denominator_check", &rectangular_denominator_check,
        py::arg("domain"), py::arg("lam"), py::arg("m"), py::arg("nodes"));
  m.def("records_csv", &records_csv, py::arg("records"));
  m.def("records_json", &records_json, py::arg("records"));

  m.def("disk_diag", &disk_diag, py::arg("lam"), py::arg("psi"), py::arg("k_max"),
        py::arg("points_per_panel") = 16);
}
