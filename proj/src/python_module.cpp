// Python bindings for the main operations. Big integers cross the boundary
// as decimal strings; balls as (midpoint, radius) string pairs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <mutex>
#include <string>
#include <vector>

#include "plancert/asymptotic.hpp"
#include "plancert/certify.hpp"
#include "plancert/constants.hpp"
#include "plancert/contour.hpp"
#include "plancert/exact.hpp"
#include "plancert/poly.hpp"

namespace py = pybind11;
using namespace plancert;

namespace {

PlCache& shared_cache() {
  static PlCache cache;
  return cache;
}
std::mutex cache_mutex;

std::string ball_mid(const Ball& b, int digits) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", digits, b.mid());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string ball_rad(const Ball& b) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.2Re", b.rad());
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace

PYBIND11_MODULE(_plancert, m) {
  m.doc() =
      "certified plane-partition counting: exact values, asymptotic "
      "enclosures, log-concavity / Turan certification";

  m.def(
      "pl",
      [](long n) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        return shared_cache().at(n).get_str();
      },
      py::arg("n"), "exact PL(n) as a decimal string");

  m.def(
      "sigma2",
      [](long n) {
        auto t = sigma2_table(n);
        return std::vector<unsigned long long>(t.begin() + 1, t.end());
      },
      py::arg("n"), "sigma_2(1..n)");

  m.def(
      "estimate",
      [](long n, int r, long precision, bool tabulated) {
        const ConstantSet& cs =
            constants(r, precision,
                      tabulated ? CurveConstantMode::kTabulated
                                : CurveConstantMode::kCertified);
        Enclosure e = estimate(n, cs);
        py::dict out;
        out["n"] = e.n;
        out["r"] = e.r;
        out["main"] = ball_mid(e.main, 30);
        out["main_rad"] = ball_rad(e.main);
        out["major_upper"] = e.major_radius.upper_d();
        out["minor_upper"] = e.minor_radius.upper_d();
        out["valid"] = e.valid;
        return out;
      },
      py::arg("n"), py::arg("r") = 2, py::arg("precision") = 192,
      py::arg("tabulated") = false);

  m.def(
      "closed_form",
      [](long n, int r, long precision) {
        const ConstantSet& cs =
            constants(r, precision, CurveConstantMode::kNone);
        ClosedForm cf = closed_form(n, cs);
        py::dict out;
        out["value"] = ball_mid(cf.value, 30);
        out["envelope_upper"] = ball_mid(cf.envelope, 10);
        return out;
      },
      py::arg("n"), py::arg("r") = 2, py::arg("precision") = 192);

  m.def(
      "logconcave",
      [](long n) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        return logconcave_exact(n, shared_cache());
      },
      py::arg("n"), "exact log-concavity check at n");

  m.def(
      "turan_holds",
      [](int d, long n, long shift) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        return jensen_poly(d, n + shift, shared_cache()).is_hyperbolic();
      },
      py::arg("d"), py::arg("n"), py::arg("shift") = -1,
      "degree-d Turan property at n (J^{d,n+shift} hyperbolic)");

  m.def(
      "jensen_coeffs",
      [](int d, long n) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        IntPolynomial p = jensen_poly(d, n, shared_cache());
        std::vector<std::string> out;
        for (long i = 0; i <= p.degree(); ++i)
          out.push_back(p.coeff(i).get_str());
        return out;
      },
      py::arg("d"), py::arg("n"));

  m.def(
      "hermite_coeffs",
      [](int d) {
        IntPolynomial p = IntPolynomial::hermite(d);
        std::vector<long> out;
        for (long i = 0; i <= p.degree(); ++i)
          out.push_back(p.coeff(i).get_si());
        return out;
      },
      py::arg("d"));

  m.def(
      "hermite_distance",
      [](int d, long n) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        return hermite_renormalize(d, n, shared_cache()).hermite_distance;
      },
      py::arg("d"), py::arg("n"));

  m.def(
      "oracle_residual",
      [](long n) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        return contour_oracle(n, shared_cache()).residual;
      },
      py::arg("n"));

  m.def(
      "constants_report",
      [](int r, long precision, bool tabulated) {
        return constants(r, precision,
                         tabulated ? CurveConstantMode::kTabulated
                                   : CurveConstantMode::kCertified)
            .report();
      },
      py::arg("r") = 2, py::arg("precision") = 192,
      py::arg("tabulated") = false);
}
