#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "digitsieve/moments.hpp"

namespace py = pybind11;
using namespace digitsieve;

namespace {
ExcludedDigits parse_B(const std::string& b) { return ExcludedDigits::parse(b); }

py::dict cert_dict(const EigenCertificate& c) {
  py::dict d;
  d["B"] = c.B;
  d["d"] = c.d;
  d["J"] = c.J;
  d["t"] = c.t;
  d["grid"] = c.grid_points;
  d["lambda_lower"] = c.lambda_lower;
  d["lambda_upper"] = c.lambda_upper;
  d["iterations"] = c.iterations;
  d["threshold"] = c.threshold;
  d["margin"] = c.margin;
  d["verdict"] = c.verdict;
  return d;
}
}  // namespace

void moments_def(py::module& m) {
  m.def(
      "g_factor",
      [](const std::string& B, const std::vector<int>& window, int grid) {
        auto g = g_factor(parse_B(B), window, grid);
        py::dict d;
        d["window"] = g.window;
        d["value"] = g.value;
        d["half_width"] = g.half_width;
        d["grid"] = g.grid_points;
        d["margin"] = g.margin;
        return d;
      },
      py::arg("B"), py::arg("window"), py::arg("grid") = 201,
      "certified upper bound of the window sup of the digit sum");
  m.def(
      "transfer_eigenvalue",
      [](const std::string& B, double t, int J, int grid, double tol) {
        auto M = build_transfer_matrix(parse_B(B), t, J, grid);
        auto c = dominant_eigenvalue(M, tol);
        return cert_dict(c);
      },
      py::arg("B"), py::arg("t") = 1.0, py::arg("J") = 2, py::arg("grid") = 201,
      py::arg("tol") = 1e-10, "Collatz-Wielandt bracket of the Perron root");
  m.def(
      "certify_all",
      [](int d, int J, double t, double threshold, int grid, int threads) {
        auto cs = certify_all(d, J, t, threshold, grid, threads);
        py::list out;
        for (const auto& c : cs) out.append(cert_dict(c));
        return out;
      },
      py::arg("d"), py::arg("J") = 2, py::arg("t") = 1.0, py::arg("threshold") = 0.0,
      py::arg("grid") = 201, py::arg("threads") = 1);
  m.def("certification_threshold", &certification_threshold, py::arg("d"));
  m.def(
      "moment_sum_oracle",
      [](int k, const std::string& B, double t, int threads) {
        return moment_sum_oracle(k, parse_B(B), t, threads);
      },
      py::arg("k"), py::arg("B"), py::arg("t") = 1.0, py::arg("threads") = 1,
      "sum of F(a/10^k)^t over a < 10^k");
}
