#ifndef PLANCERT_CERTIFY_HPP
#define PLANCERT_CERTIFY_HPP

// Certified log-concavity and higher Turan properties of PL(n), combining
// exact big-integer checks (small n) with analytic positivity of
//
//   (PLhat_r(n) - E_r(n))^2 - (PLhat_r(n-1) + E_r(n-1)) (PLhat_r(n+1) + E_r(n+1))
//
// evaluated in ball arithmetic (large n), plus the Hermite renormalization
// report for Jensen polynomials.

#include <string>
#include <vector>

#include "plancert/asymptotic.hpp"
#include "plancert/constants.hpp"
#include "plancert/exact.hpp"
#include "plancert/poly.hpp"

namespace plancert {

enum class Tri { kYes, kNo, kUnknown };

// PL(n)^2 >= PL(n-1) PL(n+1), exact.
bool logconcave_exact(long n, PlCache& cache);

// Certified analytic check at n (needs n-1 >= closed-form floor). kYes means
// the displayed expression is a strictly positive ball *and* the lower
// bracket PLhat(n) - E(n) is positive, which together imply log-concavity.
Tri logconcave_analytic(long n, const ClosedFormEval& cfe);
Tri logconcave_analytic(long n, const ConstantSet& cs);

struct CertReport {
  std::string claim;  // "logconcave" | "turan"
  int d = 0;          // degree, turan only
  long from = 0;
  long to = 0;
  long analytic_threshold = -1;  // least analytically certified n; -1 = none
  long holds_from = -1;          // least h with no failures in [h, to]
  std::vector<long> failures;
  std::string status;  // "certified" | "refuted" | "inconclusive"

  std::string method_at(long n) const {
    return (analytic_threshold >= 0 && n >= analytic_threshold) ? "analytic"
                                                                : "exact";
  }
  bool failed_at(long n) const;
  int exit_code() const { return status == "certified" ? 0 : 1; }
  std::string to_text() const;     // one `n<TAB>method<TAB>verdict` per n
  std::string to_records() const;  // single line of key=value pairs
};

// Claim: PL is log-concave for every n >= `from` (default 12).
//
// With `to` < 0: binary-search the least N0 >= 88 where the analytic check
// certifies, re-verify every n in [N0, 2*N0] (guards against non-monotone
// ball slack; eventual positivity beyond is the theory's decay), and check
// [from, N0) exactly. Status "certified" iff no failures anywhere.
// With `to` >= 0: exact-only scan of [from, to].
CertReport certify_logconcavity(const ConstantSet& cs, PlCache& cache,
                                long from = 12, long to = -1);

// Degree-d Turan property at n <=> J^{d, n+shift} hyperbolic (shift -1 is
// the J^{d,n-1} convention; 0 matches the plain-index statement). Exact scan
// of [from, to]; status "certified" iff some clean tail [holds_from, to]
// exists, failures before it are reported, not fatal.
CertReport turan_check_range(int d, long from, long to, PlCache& cache,
                             long shift = -1);

struct RenormData {
  int d = 0;
  long n = 0;
  double A_n = 0;
  double delta_n = 0;
  std::vector<double> coeffs;  // renormalized Jensen coefficients, ascending
  double hermite_distance = 0;
};

// Renormalizes J^{d,n} with data-driven growth rate A(n) and width delta(n):
//   A(n)     = (L(n+1) - L(n-1)) / 2,
//   delta(n) = sqrt(-(L(n+1) - 2 L(n) + L(n-1)) / 2),   L = log PL,
// then coeff_k = delta^(k-d) sum_{j>=k} (-1)^(j-k) C(d,j) C(j,k) rho_j with
// rho_j = exp(L(n+j) - L(n) - j A(n)); distance is the max coefficientwise
// gap to H_d.
RenormData hermite_renormalize(int d, long n, PlCache& cache,
                               mpfr_prec_t prec = 320);

}  // namespace plancert

#endif
