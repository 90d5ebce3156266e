#include "plancert/zeta.hpp"

#include <stdexcept>

#include "plancert/rationals.hpp"

namespace plancert {

namespace {

mpz_class pochhammer(unsigned long s, unsigned long k) {
  mpz_class r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= s + i;
  return r;
}

mpq_class mpq_pow_si(const mpq_class& b, long e) {
  mpq_class r = 1;
  mpq_class base = e >= 0 ? b : mpq_class(1) / b;
  unsigned long k = e >= 0 ? e : -e;
  for (unsigned long i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace

Ball zeta_int(unsigned long s, mpfr_prec_t prec) {
  if (s < 2) throw std::invalid_argument("zeta_int: s >= 2 required");
  mpfr_prec_t work = prec + 64;
  unsigned long NM = static_cast<unsigned long>(prec) / 6 + 10;
  unsigned long N = NM, M = NM;
  std::vector<mpq_class> B = bernoulli_list(2 * M + 2);

  // The full Euler-Maclaurin partial expression is an exact rational.
  mpq_class acc = 0;
  for (unsigned long k = 1; k < N; ++k)
    acc += mpq_class(1, 1) / mpq_pow_si(mpq_class(static_cast<long>(k)), s);
  mpq_class Nq(static_cast<long>(N));
  acc += mpq_pow_si(Nq, -static_cast<long>(s)) / 2;
  acc += mpq_pow_si(Nq, 1 - static_cast<long>(s)) /
         mpq_class(static_cast<long>(s) - 1);
  for (unsigned long j = 1; j <= M; ++j) {
    mpq_class term = B[2 * j] / mpq_class(factorial(2 * j));
    term *= mpq_class(pochhammer(s, 2 * j - 1));
    term *= mpq_pow_si(Nq, -static_cast<long>(s + 2 * j - 1));
    acc += term;
  }
  // |R| <= first omitted term (s real > 0); doubled for safety.
  mpq_class rem = B[2 * M + 2] / mpq_class(factorial(2 * M + 2));
  rem *= mpq_class(pochhammer(s, 2 * M + 1));
  rem *= mpq_pow_si(Nq, -static_cast<long>(s + 2 * M + 1));
  rem = 2 * ::abs(rem);

  Ball v = Ball::from_q(acc, work) + Ball::zero_pm_q(rem, work);
  return v.at_prec(prec);
}

Ball zeta3(mpfr_prec_t prec) { return zeta_int(3, prec); }

Ball zeta_prime2(mpfr_prec_t prec) {
  // zeta'(2) = -sum log k / k^2; tail from N by Euler-Maclaurin on
  // f(x) = log x / x^2 with f^(k)(x) = (a_k log x + b_k) / x^(k+2),
  // a_{k+1} = -(k+2) a_k, b_{k+1} = a_k - (k+2) b_k.
  mpfr_prec_t work = prec + 64;
  unsigned long NM = static_cast<unsigned long>(prec) / 6 + 10;
  unsigned long N = NM, M = NM;
  std::vector<mpq_class> B = bernoulli_list(2 * M);

  Ball sum(work);
  for (unsigned long k = 2; k < N; ++k)
    sum += Ball::from_ui(k, work).log().mul_q(
        mpq_class(1, static_cast<long>(k) * static_cast<long>(k)));

  Ball logN = Ball::from_ui(N, work).log();
  mpq_class Nq(static_cast<long>(N));

  // integral: (log N + 1)/N; midpoint term: f(N)/2
  Ball tail = (logN + 1).mul_q(mpq_class(1) / Nq);
  tail += logN.mul_q(mpq_class(1, 2) / (Nq * Nq));

  std::vector<mpq_class> a(2 * M + 1), b(2 * M + 1);
  a[0] = 1;
  b[0] = 0;
  for (unsigned long k = 0; k < 2 * M; ++k) {
    a[k + 1] = -mpq_class(static_cast<long>(k) + 2) * a[k];
    b[k + 1] = a[k] - mpq_class(static_cast<long>(k) + 2) * b[k];
  }
  for (unsigned long j = 1; j <= M; ++j) {
    mpq_class coef = B[2 * j] / mpq_class(factorial(2 * j));
    mpq_class npow = mpq_pow_si(Nq, -static_cast<long>(2 * j + 1));
    Ball fd = (logN.mul_q(a[2 * j - 1]) + Ball::from_q(b[2 * j - 1], work))
                  .mul_q(npow);
    tail -= fd.mul_q(coef);
  }
  // |R| <= 2 zeta(2M)/(2pi)^(2M) * int_N^inf |f^(2M)|; zeta(2M) <= 2 and the
  // integral is <= (|a|(log N/(2M+1) + 1/(2M+1)^2) + |b|/(2M+1)) N^(-2M-1).
  unsigned long p = 2 * M + 1;
  Ball ia = logN.mul_q(mpq_class(1, static_cast<long>(p))) +
            Ball::from_q(mpq_class(1, static_cast<long>(p * p)), work);
  Ball integ = (ia.mul_q(::abs(a[2 * M])) +
                Ball::from_q(::abs(b[2 * M]) / mpq_class(static_cast<long>(p)),
                             work))
                   .mul_q(mpq_pow_si(Nq, -static_cast<long>(p)));
  Ball twopi = Ball::pi(work).mul_2si(1);
  Ball remb = integ.mul_2si(2) / twopi.pow_si(static_cast<long>(2 * M));
  mpfr_t hi;
  mpfr_init2(hi, work);
  remb.abs().upper(hi);
  Ball rem(work);
  {
    mpfr_t lo;
    mpfr_init2(lo, work);
    mpfr_neg(lo, hi, MPFR_RNDD);
    rem = Ball::from_endpoints(lo, hi, work);
    mpfr_clear(lo);
  }
  mpfr_clear(hi);

  Ball v = -(sum + tail + rem);
  return v.at_prec(prec);
}

Ball zeta_prime_minus_one(mpfr_prec_t prec) {
  mpfr_prec_t work = prec + 32;
  Ball pi = Ball::pi(work);
  Ball zeta2 = pi * pi / 6;
  Ball v = (pi.mul_2si(1)).log() - 1 + Ball::euler_gamma(work) -
           zeta_prime2(work) / zeta2;
  return (-(v / 12)).at_prec(prec);
}

}  // namespace plancert
