#ifndef PLANCERT_RATIONALS_HPP
#define PLANCERT_RATIONALS_HPP

// Exact-rational number theory support: Bernoulli numbers, even zeta values
// as rational multiples of pi powers, generalized binomials, and the exact
// rational layers of the asymptotic's coefficient families.

#include <gmpxx.h>

#include <vector>

namespace plancert {

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

// B_0, B_1, B_2, ..., B_n with B_1 = -1/2 (tangent-number scheme).
std::vector<mpq_class> bernoulli_list(unsigned long n);

// zeta(2m) = zeta_even_rational(m) * pi^(2m), m >= 1.
mpq_class zeta_even_rational(unsigned long m);

// Generalized binomial C(a, k) for rational a.
mpq_class binomial_gen(const mpq_class& a, unsigned long k);

// alpha_s = 2 (2s+1)! zeta(2s) zeta(2s+2) / (s (2 pi)^(4s+2)); the pi powers
// cancel, leaving an exact rational.
mpq_class alpha_rational(unsigned long s);

// Taylor coefficients beta_0..beta_order of exp(-sum_{i>=1} alpha_i y^i).
std::vector<mpq_class> beta_rationals(unsigned long order);

// b_{s,m} = b_rational(s,m) / sqrt(3): coefficient of y^(2m) in
// (1+y)^(2s+2m+13/12) * (3+2y)^(-(m+1/2)), with the 3^(-1/2) factored out.
mpq_class b_rational(unsigned long s, unsigned long m);

// Gamma(m + 1/2) = gamma_half_rational(m) * sqrt(pi) = (2m)!/(4^m m!) sqrt(pi).
mpq_class gamma_half_rational(unsigned long m);

}  // namespace plancert

#endif
