#include "plancert/asymptotic.hpp"

#include <stdexcept>

namespace plancert {

Ball n_scale(long n, const ConstantSet& cs) {
  if (n < 1) throw std::invalid_argument("n_scale: n >= 1 required");
  return (Ball::from_si(n, cs.precision) / cs.A.mul_2si(1)).cbrt();
}

Ball main_term(long n, const ConstantSet& cs) {
  const mpfr_prec_t p = cs.precision;
  Ball N = n_scale(n, cs);
  Ball pref = (cs.c + cs.A * N.pow_si(2) * 3).exp() /
              Ball::pi(p).mul_2si(1);
  Ball sum = pref.zero_like();
  for (int s = 0; s <= cs.r + 1; ++s)
    for (int m = 0; m <= cs.r + 1; ++m) {
      Ball term = cs.beta_b(s) * cs.b[s][m] * gamma_half(m, p) /
                  (cs.A.pow_q(mpq_class(m) + mpq_class(1, 2)) *
                   N.pow_q(mpq_class(2 * s + 2 * m) + mpq_class(25, 12)));
      if (m % 2 == 1) term = -term;
      sum = sum + term;
    }
  return pref * sum;
}

ErrorLedger major_error_bound(long n, const ConstantSet& cs) {
  if (!cs.has_curve_constants())
    throw std::logic_error(
        "major_error_bound: constant set was built without C_r / D_r");
  const mpfr_prec_t p = cs.precision;
  const int r = cs.r;
  Ball N = n_scale(n, cs);
  Ball two = Ball::from_si(2, p);
  Ball AN2 = cs.A * N.pow_si(2);
  Ball e_cAN2 = (cs.c + AN2).exp();

  Ball x_part = two.pow_q(mpq_class(r) + mpq_class(49, 24)) * cs.C_r *
                N.pow_q(-(mpq_class(2 * r) + mpq_class(49, 12)));
  Ball X = e_cAN2 * x_part;

  Ball small = Ball::from_si(1, p).mul_2si(r + 5) * Ball::pi(p).pow_si(3) *
                   cs.alpha_b(r + 2) * N.pow_si(2 * r + 4).recip() +
               (-(N.mul_q(mpq_class(47, 10)))).exp() * 10;
  Ball beta_sum = X.zero_like();
  for (int s = 0; s <= r + 1; ++s)
    beta_sum = beta_sum +
               cs.beta_b(s) * two.pow_q(mpq_class(s) + mpq_class(1, 24)) *
                   N.pow_q(-(mpq_class(2 * s) + mpq_class(1, 12)));
  Ball Y = (e_cAN2 * small * (x_part + beta_sum)).abs();

  Ball z_sum = X.zero_like();
  for (int s = 0; s <= r + 1; ++s)
    z_sum = z_sum +
            cs.beta_b(s) * N.pow_q(-(mpq_class(2 * s) + mpq_class(13, 12)));
  Ball Z = cs.c.exp() *
           (cs.D_r * gamma_half(r + 2, p) *
                AN2.pow_q(mpq_class(-2 * r - 5, 2)) * (AN2 * 3).exp() +
            Ball::from_q(mpq_class(16, 25), p).mul_2si(r + 1) *
                (AN2 * 2).exp()) *
           z_sum;

  Ball E_hat = (X + Y) * (AN2 * 2).exp() / (N * Ball::pi(p)) + Z.abs();
  ErrorLedger ledger;
  ledger.X_r = X;
  ledger.Y_r = Y;
  ledger.Z_r = Z;
  ledger.E_hat = E_hat;
  return ledger;
}

Ball minor_error_bound(long n, const ConstantSet& cs) {
  Ball N = n_scale(n, cs);
  Ball expo = (cs.A * 3 - Ball::from_q(mpq_class(2, 5), cs.precision)) *
              N.pow_si(2);
  return expo.exp();
}

Enclosure estimate(long n, const ConstantSet& cs) {
  Enclosure out;
  out.n = n;
  out.r = cs.r;
  out.N_n = n_scale(n, cs);
  out.main = main_term(n, cs);
  out.ledger = major_error_bound(n, cs);
  out.major_radius = out.ledger.E_hat;
  out.minor_radius = minor_error_bound(n, cs);
  out.valid = n >= cs.validity_floor();
  return out;
}

Ball group_coefficient(int i, const ConstantSet& cs) {
  const mpfr_prec_t p = cs.precision;
  Ball ec = cs.c.exp();
  Ball two_a_pow =
      cs.A.mul_2si(1).pow_q(mpq_class(2 * i, 3) + mpq_class(25, 36));
  Ball two_pi = Ball::pi(p).mul_2si(1);
  Ball acc = ec.zero_like();
  for (int s = 0; s <= cs.r + 1; ++s) {
    int m = i - s;
    if (m < 0 || m > cs.r + 1) continue;
    Ball f = ec * cs.beta_b(s) * cs.b[s][m] * gamma_half(m, p) * two_a_pow /
             (two_pi * cs.A.pow_q(mpq_class(m) + mpq_class(1, 2)));
    if (m % 2 == 1) f = -f;
    acc = acc + f;
  }
  return acc;
}

ClosedFormEval::ClosedFormEval(const ConstantSet& cs) : cs_(cs) {
  if (cs.r != 1 && cs.r != 2)
    throw std::invalid_argument("ClosedFormEval: closed form needs r in {1,2}");
  floor_ = (cs.r == 1) ? 105 : 87;
  for (int i = 0; i <= cs.r + 1; ++i) g_.push_back(group_coefficient(i, cs));
}

Ball ClosedFormEval::value_at(long n) const {
  const mpfr_prec_t p = cs_.precision;
  Ball N = n_scale(n, cs_);
  Ball e3 = (cs_.A * N.pow_si(2) * 3).exp();
  Ball w = Ball::from_si(n, p).cbrt().recip();  // n^(-1/3)
  Ball scale = e3 * w.pow_q(mpq_class(25, 12));

  Ball sum = scale.zero_like();
  for (std::size_t i = 0; i < g_.size(); ++i)
    sum = sum + g_[i] * w.pow_si(static_cast<long>(2 * i));
  return scale * sum;
}

ClosedForm ClosedFormEval::operator()(long n) const {
  if (n < floor_)
    throw std::domain_error("closed_form: below validity floor");
  Ball N = n_scale(n, cs_);
  Ball e3 = (cs_.A * N.pow_si(2) * 3).exp();
  Ball w = Ball::from_si(n, cs_.precision).cbrt().recip();  // n^(-1/3)

  ClosedForm out;
  out.n = n;
  out.r = cs_.r;
  out.value = value_at(n);
  if (cs_.r == 1) {
    out.envelope = e3 * w.pow_q(mpq_class(85, 12)) * 527;
  } else {
    out.envelope = e3 * w.pow_q(mpq_class(109, 12)) * 227 +
                   minor_error_bound(n, cs_);
  }
  return out;
}

ClosedForm closed_form(long n, const ConstantSet& cs) {
  return ClosedFormEval(cs)(n);
}

}  // namespace plancert
