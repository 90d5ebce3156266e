// Tests for the floating-point contour-integration oracle: the truncated
// generating-function log, its tail bound, and the major/minor-arc split
// J(n) + E_min(n) = PL(n) checked against the exact counts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "plancert/contour.hpp"
#include "plancert/exact.hpp"

using namespace plancert;

namespace {

constexpr double kA = 1.2020569031595942854;  // zeta(3)

// Independent formula: log prod_k (1-e^{-kz})^{-k} = -sum_k k log(1-e^{-kz}),
// principal logs (each factor is near 1 for Re z >= 0.5, so the branches
// agree with the analytic continuation term by term).
std::complex<double> log_product_direct(std::complex<double> z, int terms) {
  std::complex<double> acc = 0.0;
  for (int k = 1; k <= terms; ++k)
    acc -= static_cast<double>(k) * std::log(1.0 - std::exp(-z * static_cast<double>(k)));
  return acc;
}

}  // namespace

TEST_CASE("generating-function log agrees with the direct product") {
  for (std::complex<double> z :
       {std::complex<double>{1.0, 0.0},
        std::complex<double>{0.8, 0.3},
        std::complex<double>{1.5, -0.7},
        std::complex<double>{0.5, 1.2}}) {
    std::complex<double> got = log_macmahon(z);
    std::complex<double> ref = log_product_direct(z, 120);
    CAPTURE(z.real());
    CAPTURE(z.imag());
    CHECK(std::abs(got - ref) < 1e-12 * (1.0 + std::abs(ref)));
  }
  // Value at the unit-scale point, frozen.
  std::complex<double> l1 = log_macmahon({1.0, 0.0});
  CHECK(l1.real() == doctest::Approx(1.03628713557544).epsilon(1e-12));
  CHECK(std::abs(l1.imag()) < 1e-15);
}

TEST_CASE("tail bound is the stated closed form and dominates the tail") {
  // e^{-(M+1) s} / (1 - e^{-s})^3 at s = 1, M = 10.
  double want = std::exp(-11.0) / std::pow(1.0 - std::exp(-1.0), 3.0);
  CHECK(log_macmahon_tail_bound(1.0, 10) == doctest::Approx(want).epsilon(1e-14));
  // Decreasing in the truncation point, increasing as s -> 0.
  CHECK(log_macmahon_tail_bound(1.0, 20) < log_macmahon_tail_bound(1.0, 10));
  CHECK(log_macmahon_tail_bound(0.25, 10) > log_macmahon_tail_bound(1.0, 10));
  // Soundness against the series it truncates: sum_{m > M} e^{-ms} /
  // (m (1 - e^{-ms})^2), all terms positive for real s > 0.
  for (double s : {0.5, 1.0, 2.0}) {
    const long M = 20;
    double tail = 0;
    for (long m = M + 1; m <= 2000; ++m) {
      double e = std::exp(-static_cast<double>(m) * s);
      tail += e / (static_cast<double>(m) * (1.0 - e) * (1.0 - e));
    }
    CAPTURE(s);
    CHECK(tail <= log_macmahon_tail_bound(s, M));
  }
}

TEST_CASE("oracle reproduces the exact counts at double precision") {
  PlCache cache;
  for (long n : {20L, 50L, 100L, 200L}) {
    OracleResult r = contour_oracle(n, cache);
    CAPTURE(n);
    CHECK(r.n == n);
    CHECK(r.N == doctest::Approx(std::cbrt(static_cast<double>(n) / (2 * kA)))
                     .epsilon(1e-13));
    CHECK(r.pl == doctest::Approx(mpz_get_d(cache.at(n).get_mpz_t()))
                      .epsilon(1e-15));
    // |J + E_min - PL| / PL: quadrature reconstructs the integer almost to
    // the last double bit.
    CHECK(r.residual >= 0);
    CHECK(r.residual < 1e-12);
  }
  OracleResult r20 = contour_oracle(20, cache);
  CHECK(r20.pl == 75278.0);
  CHECK(r20.J == doctest::Approx(75416.7738740943).epsilon(1e-12));
  CHECK(r20.E_min == doctest::Approx(-138.773874094407).epsilon(1e-9));
  OracleResult r50 = contour_oracle(50, cache);
  CHECK(r50.E_min == doctest::Approx(-244232.411847172).epsilon(1e-9));
  OracleResult r100 = contour_oracle(100, cache);
  CHECK(r100.E_min == doctest::Approx(-2979574075.71936).epsilon(1e-9));
}

TEST_CASE("minor arc stays below the theoretical envelope") {
  PlCache cache;
  for (long n : {20L, 50L, 87L, 100L, 200L}) {
    OracleResult r = contour_oracle(n, cache);
    CAPTURE(n);
    CHECK(r.minor_bound ==
          doctest::Approx(std::exp((3 * kA - 0.4) * r.N * r.N)).epsilon(1e-12));
    CHECK(std::fabs(r.E_min) <= r.minor_bound);
    // The bound is far from tight but not vacuous: within ~10 orders at the
    // certification floor.
    if (n == 87) CHECK(std::fabs(r.E_min) > 1e-10 * r.minor_bound);
  }
}

TEST_CASE("quadrature budget gate rejects n outside [1, 200]") {
  PlCache cache;
  CHECK_THROWS_WITH_AS(contour_oracle(201, cache),
                       "contour_oracle: 1 <= n <= 200 required",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(contour_oracle(0, cache),
                       "contour_oracle: 1 <= n <= 200 required",
                       std::invalid_argument);
  CHECK_NOTHROW(contour_oracle(1, cache));
  CHECK_NOTHROW(contour_oracle(200, cache));
}
