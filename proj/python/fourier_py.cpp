#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "digitsieve/fourier.hpp"

namespace py = pybind11;
using namespace digitsieve;

namespace {
ExcludedDigits parse_B(const std::string& b) { return ExcludedDigits::parse(b); }
}  // namespace

void fourier_def(py::module& m) {
  m.def(
      "eval_direct",
      [](int k, const std::string& B, double theta, const std::string& conv) {
        return eval_direct(k, parse_B(B), theta, parse_convention(conv)).value;
      },
      py::arg("k"), py::arg("B"), py::arg("theta"), py::arg("conv") = "padded",
      "normalized sum by literal member enumeration, k <= 7");
  m.def(
      "eval_product",
      [](int k, const std::string& B, double theta, const std::string& conv) {
        return eval_product(k, parse_B(B), theta, parse_convention(conv)).value;
      },
      py::arg("k"), py::arg("B"), py::arg("theta"), py::arg("conv") = "padded",
      "normalized sum via the per-digit product, O(k)");
  m.def(
      "eval_product_rational",
      [](int k, const std::string& B, uint64_t a, uint64_t q, double beta) {
        return eval_product_rational(k, parse_B(B), a, q, beta);
      },
      py::arg("k"), py::arg("B"), py::arg("a"), py::arg("q"), py::arg("beta") = 0.0,
      "product evaluation at theta = a/q + beta with exact modular phases");
  m.def(
      "scan_single_modulus",
      [](int k, const std::string& B, uint64_t q, uint64_t grid, int threads) {
        auto r = scan_single_modulus(k, parse_B(B), q, grid, threads);
        py::dict d;
        d["B"] = r.B;
        d["k"] = r.k;
        d["q"] = r.q_or_Q;
        d["grid"] = r.grid;
        d["measured"] = r.measured;
        d["reference"] = r.reference;
        d["ratio"] = r.ratio;
        return d;
      },
      py::arg("k"), py::arg("B"), py::arg("q"), py::arg("grid") = 64, py::arg("threads") = 1);
  m.def(
      "scan_farey",
      [](int k, const std::string& B, uint64_t Q, uint64_t grid, int threads) {
        auto r = scan_farey(k, parse_B(B), Q, grid, threads);
        py::dict d;
        d["B"] = r.B;
        d["k"] = r.k;
        d["Q"] = r.q_or_Q;
        d["grid"] = r.grid;
        d["measured"] = r.measured;
        d["reference"] = r.reference;
        d["ratio"] = r.ratio;
        return d;
      },
      py::arg("k"), py::arg("B"), py::arg("Q"), py::arg("grid") = 16, py::arg("threads") = 1);
  m.def(
      "small_modulus_decay",
      [](int k_min, int k_max, const std::string& B, uint64_t q, uint64_t a) {
        auto r = small_modulus_decay(k_min, k_max, parse_B(B), q, a);
        py::dict d;
        d["B"] = r.B;
        d["q"] = r.q;
        d["a"] = r.a;
        d["ks"] = r.ks;
        d["values"] = r.values;
        d["c0_hat"] = r.c0_hat;
        d["intercept"] = r.intercept;
        return d;
      },
      py::arg("k_min"), py::arg("k_max"), py::arg("B"), py::arg("q"), py::arg("a") = 1);
  m.def(
      "l1_norm",
      [](int k, const std::string& B, uint64_t grid, int threads) {
        auto r = l1_norm(k, parse_B(B), grid, threads);
        py::dict d;
        d["B"] = r.B;
        d["k"] = r.k;
        d["grid"] = r.grid;
        d["estimate"] = r.estimate;
        d["reference"] = r.reference;
        d["ratio"] = r.ratio;
        return d;
      },
      py::arg("k"), py::arg("B"), py::arg("grid"), py::arg("threads") = 1);
}
