#ifndef PLANCERT_CONTOUR_HPP
#define PLANCERT_CONTOUR_HPP

// Floating-point contour-integration oracle for the circle-method
// decomposition PL(n) = J(n) + E_min(n): integrates the generating function
// over |x| = e^(-1/N) split at angle 1/N. Double precision, non-certified by
// design; it exists to cross-check the certified bounds, not to join them.

#include <complex>

#include "plancert/exact.hpp"

namespace plancert {

// log of prod (1-e^(-kz))^(-k) = sum_{m>=1} e^(-mz) / (m (1-e^(-mz))^2),
// truncated where the closed-form tail bound drops below ~1e-22.
std::complex<double> log_macmahon(std::complex<double> z);

// Upper bound for the modulus of the sum of terms with m > M at Re z = s > 0:
// e^(-(M+1) s) / (1 - e^(-s))^3.
double log_macmahon_tail_bound(double s, long m_terms);

struct OracleResult {
  long n = 0;
  double N = 0;           // saddle scale (n/2A)^(1/3)
  double J = 0;           // major-arc integral, theta in [0, 1/N]
  double E_min = 0;       // minor-arc integral, theta in [1/N, pi]
  double pl = 0;          // exact PL(n), rounded
  double residual = 0;    // |J + E_min - PL| / PL
  double minor_bound = 0; // e^((3A - 2/5) N^2)
};

// Requires n <= 200 (double-range and quadrature budget gate).
OracleResult contour_oracle(long n, PlCache& cache);

}  // namespace plancert

#endif
