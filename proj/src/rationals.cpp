#include "plancert/rationals.hpp"

#include <stdexcept>

namespace plancert {

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<mpq_class> bernoulli_list(unsigned long n) {
  // Tangent numbers T_1..T_m by the Seidel triangle, then
  // B_{2k} = (-1)^(k-1) T_k 2k / (2^(2k) (2^(2k) - 1)).
  std::vector<mpq_class> B(n + 1, 0);
  B[0] = 1;
  if (n >= 1) B[1] = mpq_class(-1, 2);
  unsigned long m = n / 2;
  if (m == 0) return B;
  std::vector<mpz_class> T(m + 1);
  T[1] = 1;
  for (unsigned long k = 2; k <= m; ++k) T[k] = (k - 1) * T[k - 1];
  for (unsigned long k = 2; k <= m; ++k)
    for (unsigned long j = k; j <= m; ++j)
      T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j];
  for (unsigned long k = 1; k <= m; ++k) {
    mpz_class p2k = mpz_class(1) << (2 * k);
    mpq_class b = mpq_class(T[k] * mpz_class(2 * k), p2k * (p2k - 1));
    b.canonicalize();
    if (k % 2 == 0) b = -b;
    B[2 * k] = b;
  }
  return B;
}

mpq_class zeta_even_rational(unsigned long m) {
  if (m == 0) throw std::invalid_argument("zeta_even_rational: m >= 1 required");
  std::vector<mpq_class> B = bernoulli_list(2 * m);
  mpq_class r = B[2 * m] * (mpz_class(1) << (2 * m - 1));
  r /= factorial(2 * m);
  if (m % 2 == 0) r = -r;
  r.canonicalize();
  return r;
}

mpq_class binomial_gen(const mpq_class& a, unsigned long k) {
  mpq_class num = 1;
  for (unsigned long i = 0; i < k; ++i) num *= (a - static_cast<long>(i));
  mpq_class r = num / mpq_class(factorial(k));
  r.canonicalize();
  return r;
}

mpq_class alpha_rational(unsigned long s) {
  if (s == 0) throw std::invalid_argument("alpha_rational: s >= 1 required");
  mpq_class r = 2 * mpq_class(factorial(2 * s + 1)) * zeta_even_rational(s) *
                zeta_even_rational(s + 1);
  r /= mpq_class(static_cast<long>(s)) * mpq_class(mpz_class(1) << (4 * s + 2));
  r.canonicalize();
  return r;
}

std::vector<mpq_class> beta_rationals(unsigned long order) {
  // exp(sum u_i y^i) with u_i = -alpha_i: e_k = (1/k) sum_{j=1..k} j u_j e_{k-j}.
  std::vector<mpq_class> u(order + 1, 0), e(order + 1, 0);
  for (unsigned long i = 1; i <= order; ++i) u[i] = -alpha_rational(i);
  e[0] = 1;
  for (unsigned long k = 1; k <= order; ++k) {
    mpq_class acc = 0;
    for (unsigned long j = 1; j <= k; ++j)
      acc += mpq_class(static_cast<long>(j)) * u[j] * e[k - j];
    e[k] = acc / mpq_class(static_cast<long>(k));
    e[k].canonicalize();
  }
  return e;
}

mpq_class b_rational(unsigned long s, unsigned long m) {
  // (3+2y)^(-(m+1/2)) = 3^(-m) 3^(-1/2) (1+2y/3)^(-(m+1/2));
  // coefficient of y^(2m) in (1+y)^a (1+2y/3)^(-(m+1/2)), a = 2s+2m+13/12.
  mpq_class a = mpq_class(2 * s + 2 * m) + mpq_class(13, 12);
  mpq_class mh = -(mpq_class(static_cast<long>(m)) + mpq_class(1, 2));
  mpq_class acc = 0;
  for (unsigned long j = 0; j <= 2 * m; ++j) {
    mpq_class t = binomial_gen(a, j) * binomial_gen(mh, 2 * m - j);
    mpq_class p = 1;
    for (unsigned long i = 0; i < 2 * m - j; ++i) p *= mpq_class(2, 3);
    acc += t * p;
  }
  mpq_class three_m = 1;
  for (unsigned long i = 0; i < m; ++i) three_m /= 3;
  mpq_class r = acc * three_m;
  r.canonicalize();
  return r;
}

mpq_class gamma_half_rational(unsigned long m) {
  mpq_class r = mpq_class(factorial(2 * m)) /
                mpq_class(factorial(m) * (mpz_class(1) << (2 * m)));
  r.canonicalize();
  return r;
}

}  // namespace plancert
