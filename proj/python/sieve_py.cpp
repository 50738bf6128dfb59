#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "digitsieve/sieve.hpp"

namespace py = pybind11;
using namespace digitsieve;

namespace {
ExcludedDigits parse_B(const std::string& b) { return ExcludedDigits::parse(b); }
}  // namespace

void sieve_def(py::module& m) {
  m.def(
      "von_mangoldt",
      [](uint64_t n) {
        auto v = von_mangoldt_ex(n);
        return py::make_tuple(v.lambda, v.is_prime);
      },
      py::arg("n"), "(Lambda(n), n is prime)");
  m.def(
      "sieve_s",
      [](const std::string& B, uint64_t x, uint32_t P, int threads) {
        auto run = make_run(x, P, parse_B(B));
        auto w = build_weights(run);
        auto s = s_of_x(run, w, threads);
        py::dict d;
        d["S"] = s.total;
        d["S_prime_only"] = s.prime_only;
        d["lattice_points"] = w.lattice_points;
        d["theorem_mode"] = run.theorem_mode;
        return d;
      },
      py::arg("B"), py::arg("x"), py::arg("P"), py::arg("threads") = 1,
      "S(x) = sum a(n) Lambda(n) over the two-squares weights");
  m.def(
      "congruence_table",
      [](const std::string& B, uint64_t x, uint32_t P, uint64_t D, bool with_log, int threads) {
        auto run = make_run(x, P, parse_B(B));
        auto w = build_weights(run);
        auto rows = congruence_table(run, w, D, with_log, threads);
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["d"] = r.d;
          d["A_d"] = r.A_d;
          d["M_d"] = r.M_d;
          d["R_d"] = r.R_d;
          d["cum_R"] = r.cum_R;
          d["reference"] = r.reference;
          d["ratio"] = r.ratio;
          if (with_log) d["A_log_d"] = r.A_log_d;
          out.append(d);
        }
        return out;
      },
      py::arg("B"), py::arg("x"), py::arg("P"), py::arg("D"), py::arg("with_log") = false,
      py::arg("threads") = 1);
  m.def(
      "vaughan",
      [](const std::string& B, uint64_t x, uint32_t P, uint64_t U, uint64_t V) {
        auto run = make_run(x, P, parse_B(B));
        auto w = build_weights(run);
        auto sp = vaughan_decompose(run, w, U, V);
        py::dict d;
        d["S_direct"] = sp.S_direct;
        d["S1"] = sp.S1;
        d["S2"] = sp.S2;
        d["S3"] = sp.S3;
        d["S4"] = sp.S4;
        d["sum"] = sp.sum;
        d["residual"] = sp.residual;
        d["residual_rel"] = sp.residual_rel;
        return d;
      },
      py::arg("B"), py::arg("x"), py::arg("P"), py::arg("U"), py::arg("V"),
      "four-piece decomposition of S(x); residual measures float drift only");
  m.def(
      "verify_main_theorem",
      [](const std::string& B, uint64_t x, uint32_t P, uint64_t trunc, int threads) {
        auto run = make_run(x, P, parse_B(B));
        auto w = build_weights(run);
        auto r = verify_main_theorem(run, w, trunc, threads);
        py::dict d;
        d["S"] = r.S;
        d["S_prime_only"] = r.prime_only;
        d["main_term"] = r.main_term;
        d["ratio"] = r.ratio;
        d["theorem_mode"] = r.theorem_mode;
        d["lattice_points"] = r.lattice_points;
        d["C"] = r.C;
        d["kappa"] = py::make_tuple(r.kappa.num, r.kappa.den);
        d["C_truncation"] = r.C_truncation;
        return d;
      },
      py::arg("B"), py::arg("x"), py::arg("P"), py::arg("trunc") = 1000000,
      py::arg("threads") = 1);
}
