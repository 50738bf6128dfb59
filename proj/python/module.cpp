#include <pybind11/pybind11.h>

namespace py = pybind11;

void digits_def(py::module&);
void fourier_def(py::module&);
void moments_def(py::module&);
void quadratic_def(py::module&);
void sieve_def(py::module&);

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

PYBIND11_MODULE(digitsieve, m) {
  m.doc() =
      "digit-restricted exponential sums, transfer-matrix eigenvalue "
      "certificates, quadratic root counts, and two-squares sieve checks";
  digits_def(m);
  fourier_def(m);
  moments_def(m);
  quadratic_def(m);
  sieve_def(m);
#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
