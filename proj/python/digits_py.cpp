#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "digitsieve/digits.hpp"

namespace py = pybind11;
using namespace digitsieve;

namespace {
ExcludedDigits parse_B(const std::string& b) { return ExcludedDigits::parse(b); }
}  // namespace

void digits_def(py::module& m) {
  m.def(
      "is_member",
      [](uint64_t n, const std::string& B, const std::string& conv, int k) {
        return is_member(n, parse_B(B), parse_convention(conv), k);
      },
      py::arg("n"), py::arg("B"), py::arg("conv") = "genuine", py::arg("k") = -1,
      "membership of n in the digit-restricted set avoiding B");
  m.def(
      "count_below",
      [](int k, const std::string& B, const std::string& conv) {
        return count_below(k, parse_B(B), parse_convention(conv));
      },
      py::arg("k"), py::arg("B"), py::arg("conv") = "genuine",
      "number of members below 10^k");
  m.def(
      "enumerate_members",
      [](uint64_t limit, const std::string& B, const std::string& conv, uint64_t coprime_to,
         int k) { return enumerate_members(limit, parse_B(B), parse_convention(conv), coprime_to, k); },
      py::arg("limit"), py::arg("B"), py::arg("conv") = "genuine", py::arg("coprime_to") = 0,
      py::arg("k") = -1, "ascending members up to limit");
  m.def(
      "coprime_fraction_kappa",
      [](int k, const std::string& B) {
        auto r = coprime_fraction_kappa(k, parse_B(B));
        return py::make_tuple(r.num, r.den);
      },
      py::arg("k"), py::arg("B"), "exact fraction of members coprime to 10, as (num, den)");
  m.def(
      "gamma_exponent", [](const std::string& B) { return gamma_exponent(parse_B(B)); },
      py::arg("B"), "log10(10 - |B|)");
}
