#ifndef PLANCERT_ASYMPTOTIC_HPP
#define PLANCERT_ASYMPTOTIC_HPP

// Effective asymptotic for PL(n) with certified error bounds.
//
// Writing N_n = (n/(2A))^(1/3), the main term is
//
//   e^(c + 3 A N^2) / (2 pi) *
//     sum_{s,m=0}^{r+1} (-1)^m beta_s b_{s,m} Gamma(m+1/2)
//                       / (A^(m+1/2) N^(2s+2m+25/12)),
//
// valid with explicit major-arc bound E_hat and minor-arc bound
// e^((3A - 2/5) N^2) once n >= max(n_r, ell_r, 87).
//
// The closed form regroups the double sum by powers of n:
//   PLhat_r(n) = e^(3AN^2) n^(-25/36) sum_{i<=r+1} g_i n^(-2i/3),
//   g_i = sum_{s+m=i} f_{s,m},
// with envelope 527 e^(3AN^2) n^(-85/36) (r=1, n>=105) resp.
// 227 e^(3AN^2) n^(-109/36) + e^((3A-2/5)N^2) (r=2, n>=87).

#include <vector>

#include "plancert/ball.hpp"
#include "plancert/constants.hpp"

namespace plancert {

// N_n = (n / (2A))^(1/3); requires n >= 1.
Ball n_scale(long n, const ConstantSet& cs);

Ball main_term(long n, const ConstantSet& cs);

struct ErrorLedger {
  Ball X_r;    // circle-method peak contribution
  Ball Y_r;    // cross term (signed sum inside, absolute value outside)
  Ball Z_r;    // Laplace-tail contribution (signed; |Z_r| enters E_hat)
  Ball E_hat;  // (X_r + Y_r) e^(2AN^2) / (N pi) + |Z_r|
};

ErrorLedger major_error_bound(long n, const ConstantSet& cs);

// Value of the minor-arc bound e^((3A - 2/5) N^2); certifies |E_min| only
// for n >= 87.
Ball minor_error_bound(long n, const ConstantSet& cs);

struct Enclosure {
  long n = 0;
  int r = 0;
  Ball N_n;
  Ball main;
  Ball major_radius;  // = ledger.E_hat
  Ball minor_radius;
  bool valid = false;  // n >= max(n_r, ell_r, 87); radii certify only then
  ErrorLedger ledger;
};

Enclosure estimate(long n, const ConstantSet& cs);

struct ClosedForm {
  long n = 0;
  int r = 0;
  Ball value;
  Ball envelope;  // certified bound for |PL(n) - value| at this n
};

// g_i = sum_{s+m=i} e^c (-1)^m beta_s b_{s,m} Gamma(m+1/2)
//       (2A)^(2i/3 + 25/36) / (2 pi A^(m+1/2)).
Ball group_coefficient(int i, const ConstantSet& cs);

// Precomputes the group coefficients once; cheap per-n evaluation.
class ClosedFormEval {
 public:
  explicit ClosedFormEval(const ConstantSet& cs);
  ClosedForm operator()(long n) const;  // throws below the validity floor
  Ball value_at(long n) const;  // series value alone, any n >= 1, no envelope
  long floor() const { return floor_; }

 private:
  const ConstantSet& cs_;
  long floor_;
  std::vector<Ball> g_;
};

ClosedForm closed_form(long n, const ConstantSet& cs);  // r in {1, 2}

}  // namespace plancert

#endif
