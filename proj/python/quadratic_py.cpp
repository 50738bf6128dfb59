#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "digitsieve/quadratic.hpp"

namespace py = pybind11;
using namespace digitsieve;

namespace {
ExcludedDigits parse_B(const std::string& b) { return ExcludedDigits::parse(b); }
}  // namespace

void quadratic_def(py::module& m) {
  m.def("chi", &chi, py::arg("n"), "nontrivial character mod 4");
  m.def("rho", &rho, py::arg("d"), "roots of nu^2 + 1 = 0 (mod d)");
  m.def("rho_brute", &rho_brute, py::arg("d"));
  m.def("rho_ell", &rho_ell, py::arg("ell"), py::arg("d"),
        "roots of nu^2 + ell^2 = 0 (mod d), closed form");
  m.def("rho_ell_brute", &rho_ell_brute, py::arg("ell"), py::arg("d"));
  m.def("mobius_rho_partial_sum", &mobius_rho_partial_sum, py::arg("ell"), py::arg("V"),
        py::arg("threads") = 1, "sum of mu(d) rho_ell(d)/d up to V");
  m.def("average_rho_check", &average_rho_check, py::arg("ell"), py::arg("y"));
  m.def(
      "constant_C",
      [](uint64_t p_max, int threads) {
        auto c = constant_C(p_max, threads);
        py::dict d;
        d["C"] = c.value;
        d["truncation"] = c.truncation;
        d["tail_bound"] = c.tail_bound;
        return d;
      },
      py::arg("p_max"), py::arg("threads") = 1, "truncated singular Euler product");
  m.def(
      "kappa1",
      [](int a0) {
        auto r = kappa1(a0);
        return py::make_tuple(r.num, r.den);
      },
      py::arg("a0"));
  m.def(
      "kappa_B",
      [](const std::string& B) {
        auto r = kappa_B(parse_B(B));
        return py::make_tuple(r.num, r.den);
      },
      py::arg("B"), "density correction factor as an exact (num, den) pair");
  m.def(
      "main_term_value",
      [](double C, long long num, long long den, uint64_t P, double lattice) {
        return main_term_value(C, Rational(num, den), P, lattice);
      },
      py::arg("C"), py::arg("kappa_num"), py::arg("kappa_den"), py::arg("P"),
      py::arg("lattice_count"));
}
