#ifndef PLANCERT_POLY_HPP
#define PLANCERT_POLY_HPP

// Exact integer polynomials with Sturm-chain real-root counting; decides
// hyperbolicity (all roots real) without any floating point.

#include <gmpxx.h>

#include <vector>

#include "plancert/exact.hpp"

namespace plancert {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);  // coeffs[i] ~ X^i

  // H_0 = 1, H_1 = X, H_{d+1} = X H_d - 2 d H_{d-1}
  // (generating function sum_d H_d(X) t^d / d! = exp(X t - t^2)).
  static IntPolynomial hermite(int d);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpz_class& coeff(long i) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& lc() const { return c_.back(); }

  IntPolynomial operator-() const;
  IntPolynomial derivative() const;
  IntPolynomial primitive_part() const;  // content removed, sign kept
  IntPolynomial squarefree_part() const;

  long distinct_real_roots() const;  // exact, via Sturm chain
  bool is_hyperbolic() const;        // every complex root is real

 private:
  std::vector<mpz_class> c_;
  void trim();
};

// J^{d,n}(X) = sum_{j=0}^{d} binomial(d,j) PL(n+j) X^j.
IntPolynomial jensen_poly(int d, long n, PlCache& cache);

}  // namespace plancert

#endif
