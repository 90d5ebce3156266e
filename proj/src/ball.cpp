#include "plancert/ball.hpp"

#include <cmath>

namespace plancert {

namespace {

// One-ulp upper bound for a value stored at `prec` bits: 2^(exp - prec).
// Covers the half-ulp worst case of any single MPFR_RNDN rounding.
void add_ulp(mpfr_t rad, const mpfr_t mid) {
  if (mpfr_zero_p(mid)) return;
  mpfr_t u;
  mpfr_init2(u, 16);
  mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
  mpfr_add(rad, rad, u, MPFR_RNDU);
  mpfr_clear(u);
}

void check_finite(const mpfr_t m) {
  if (!mpfr_number_p(m))
    throw std::overflow_error("ball arithmetic: non-finite midpoint");
}

}  // namespace

Ball::Ball(mpfr_prec_t prec) {
  mpfr_init2(mid_, prec);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& o) {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept {
  mpfr_init2(mid_, 2);
  mpfr_init2(rad_, kRadPrec);
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
}

Ball& Ball::operator=(const Ball& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
  }
  return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
  if (this != &o) {
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
  }
  return *this;
}

Ball::~Ball() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void Ball::bump_rad_ulp(int ternary) {
  if (ternary != 0) add_ulp(rad_, mid_);
}

Ball Ball::from_si(long v, mpfr_prec_t prec) {
  Ball b(prec);
  b.bump_rad_ulp(mpfr_set_si(b.mid_, v, MPFR_RNDN));
  return b;
}

Ball Ball::from_ui(unsigned long v, mpfr_prec_t prec) {
  Ball b(prec);
  b.bump_rad_ulp(mpfr_set_ui(b.mid_, v, MPFR_RNDN));
  return b;
}

Ball Ball::from_d(double v, mpfr_prec_t prec) {
  if (!std::isfinite(v)) throw std::domain_error("Ball::from_d: non-finite");
  Ball b(prec);
  b.bump_rad_ulp(mpfr_set_d(b.mid_, v, MPFR_RNDN));
  return b;
}

Ball Ball::from_z(const mpz_class& v, mpfr_prec_t prec) {
  Ball b(prec);
  b.bump_rad_ulp(mpfr_set_z(b.mid_, v.get_mpz_t(), MPFR_RNDN));
  return b;
}

Ball Ball::from_q(const mpq_class& v, mpfr_prec_t prec) {
  Ball b(prec);
  b.bump_rad_ulp(mpfr_set_q(b.mid_, v.get_mpq_t(), MPFR_RNDN));
  return b;
}

Ball Ball::from_endpoints(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec) {
  if (mpfr_cmp(lo, hi) > 0)
    throw std::invalid_argument("Ball::from_endpoints: lo > hi");
  Ball b(prec);
  mpfr_add(b.mid_, lo, hi, MPFR_RNDN);
  mpfr_div_2ui(b.mid_, b.mid_, 1, MPFR_RNDN);
  mpfr_t t;
  mpfr_init2(t, kRadPrec);
  mpfr_sub(t, hi, b.mid_, MPFR_RNDU);          // covers mid..hi
  mpfr_sub(b.rad_, b.mid_, lo, MPFR_RNDU);     // covers lo..mid
  mpfr_max(b.rad_, b.rad_, t, MPFR_RNDU);
  mpfr_clear(t);
  check_finite(b.mid_);
  return b;
}

Ball Ball::hull_d(double lo, double hi, mpfr_prec_t prec) {
  mpfr_t a, b2;
  mpfr_init2(a, 53);
  mpfr_init2(b2, 53);
  mpfr_set_d(a, lo, MPFR_RNDD);
  mpfr_set_d(b2, hi, MPFR_RNDU);
  Ball r = from_endpoints(a, b2, prec);
  mpfr_clear(a);
  mpfr_clear(b2);
  return r;
}

Ball Ball::zero_pm_q(const mpq_class& r, mpfr_prec_t prec) {
  Ball b(prec);
  mpfr_set_q(b.rad_, r.get_mpq_t(), MPFR_RNDU);
  mpfr_abs(b.rad_, b.rad_, MPFR_RNDU);
  return b;
}

Ball Ball::pi(mpfr_prec_t prec) {
  Ball b(prec);
  b.bump_rad_ulp(mpfr_const_pi(b.mid_, MPFR_RNDN));
  return b;
}

Ball Ball::euler_gamma(mpfr_prec_t prec) {
  Ball b(prec);
  b.bump_rad_ulp(mpfr_const_euler(b.mid_, MPFR_RNDN));
  return b;
}

Ball Ball::at_prec(mpfr_prec_t prec) const {
  Ball b(prec);
  b.bump_rad_ulp(mpfr_set(b.mid_, mid_, MPFR_RNDN));
  mpfr_add(b.rad_, b.rad_, rad_, MPFR_RNDU);
  return b;
}

void Ball::lower(mpfr_t out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }
void Ball::upper(mpfr_t out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }

double Ball::lower_d() const {
  mpfr_t t;
  mpfr_init2(t, 53);
  lower(t);
  double v = mpfr_get_d(t, MPFR_RNDD);
  mpfr_clear(t);
  return v;
}

double Ball::upper_d() const {
  mpfr_t t;
  mpfr_init2(t, 53);
  upper(t);
  double v = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return v;
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec(), b.prec()));
  int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  r.bump_rad_ulp(t);
  check_finite(r.mid_);
  return r;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec(), b.prec()));
  int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  r.bump_rad_ulp(t);
  check_finite(r.mid_);
  return r;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec(), b.prec()));
  int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // |ab - a^b^| <= |a^|rb + |b^|ra + ra rb
  mpfr_t am, bm, acc;
  mpfr_init2(am, Ball::kRadPrec);
  mpfr_init2(bm, Ball::kRadPrec);
  mpfr_init2(acc, Ball::kRadPrec);
  mpfr_abs(am, a.mid_, MPFR_RNDU);
  mpfr_abs(bm, b.mid_, MPFR_RNDU);
  mpfr_mul(acc, am, b.rad_, MPFR_RNDU);
  mpfr_mul(am, bm, a.rad_, MPFR_RNDU);
  mpfr_add(acc, acc, am, MPFR_RNDU);
  mpfr_mul(am, a.rad_, b.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, acc, am, MPFR_RNDU);
  mpfr_clear(am);
  mpfr_clear(bm);
  mpfr_clear(acc);
  r.bump_rad_ulp(t);
  check_finite(r.mid_);
  return r;
}

Ball Ball::recip() const {
  if (contains_zero())
    throw std::domain_error("Ball::recip: interval contains zero");
  Ball r(prec());
  int t = mpfr_si_div(r.mid_, 1, mid_, MPFR_RNDN);
  // |1/b^ - 1/b| <= rad / (|b^| (|b^| - rad))
  mpfr_t m, d;
  mpfr_init2(m, kRadPrec);
  mpfr_init2(d, kRadPrec);
  mpfr_abs(m, mid_, MPFR_RNDD);
  mpfr_sub(d, m, rad_, MPFR_RNDD);
  mpfr_mul(d, d, m, MPFR_RNDD);
  mpfr_div(r.rad_, rad_, d, MPFR_RNDU);
  mpfr_clear(m);
  mpfr_clear(d);
  r.bump_rad_ulp(t);
  check_finite(r.mid_);
  return r;
}

Ball operator/(const Ball& a, const Ball& b) { return a * b.recip(); }

Ball Ball::operator-() const {
  Ball r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);  // exact
  return r;
}

Ball Ball::abs() const {
  if (!contains_zero()) {
    return mpfr_sgn(mid_) > 0 ? *this : -*this;
  }
  // straddles zero: [0, max(|lo|, |hi|)]
  mpfr_t lo, hi, z;
  mpfr_init2(lo, prec());
  mpfr_init2(hi, prec());
  mpfr_init2(z, prec());
  lower(lo);
  upper(hi);
  mpfr_abs(lo, lo, MPFR_RNDU);
  mpfr_max(hi, hi, lo, MPFR_RNDU);
  mpfr_set_zero(z, 1);
  Ball r = from_endpoints(z, hi, prec());
  mpfr_clear(lo);
  mpfr_clear(hi);
  mpfr_clear(z);
  return r;
}

Ball Ball::sqr() const {
  mpfr_prec_t p = prec();
  mpfr_t lo, hi;
  mpfr_init2(lo, p);
  mpfr_init2(hi, p);
  lower(lo);
  upper(hi);
  // Reduce to |x| in [lo, hi] (negation is exact), then square monotonically.
  if (mpfr_sgn(hi) <= 0) {
    mpfr_swap(lo, hi);
    mpfr_neg(lo, lo, MPFR_RNDN);
    mpfr_neg(hi, hi, MPFR_RNDN);
  } else if (mpfr_sgn(lo) < 0) {
    mpfr_neg(lo, lo, MPFR_RNDN);
    mpfr_max(hi, hi, lo, MPFR_RNDU);
    mpfr_set_zero(lo, 1);
  }
  mpfr_sqr(lo, lo, MPFR_RNDD);
  mpfr_sqr(hi, hi, MPFR_RNDU);
  Ball r = from_endpoints(lo, hi, p);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return r;
}

Ball Ball::mul_2si(long k) const {
  Ball r(*this);
  mpfr_mul_2si(r.mid_, r.mid_, k, MPFR_RNDN);
  mpfr_mul_2si(r.rad_, r.rad_, k, MPFR_RNDU);
  check_finite(r.mid_);
  return r;
}

Ball Ball::sqrt_nonneg() const {
  mpfr_t lo, hi;
  mpfr_init2(lo, prec());
  mpfr_init2(hi, prec());
  lower(lo);
  upper(hi);
  if (mpfr_sgn(hi) < 0) {
    mpfr_clear(lo);
    mpfr_clear(hi);
    throw std::domain_error("Ball::sqrt_nonneg: upper endpoint negative");
  }
  if (mpfr_sgn(lo) < 0) mpfr_set_zero(lo, 1);
  mpfr_sqrt(lo, lo, MPFR_RNDD);
  mpfr_sqrt(hi, hi, MPFR_RNDU);
  Ball r = from_endpoints(lo, hi, prec());
  mpfr_clear(lo);
  mpfr_clear(hi);
  return r;
}

namespace {

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

enum class Domain { kAll, kNonNegative, kPositive };

// Monotone increasing f: image of [lo, hi] is [f(lo), f(hi)].
Ball monotone_unary(const Ball& x, UnaryFn f, Domain dom, const char* name) {
  if (dom != Domain::kAll) {
    mpfr_t lo;
    mpfr_init2(lo, x.prec());
    x.lower(lo);
    int s = mpfr_sgn(lo);
    mpfr_clear(lo);
    bool ok = dom == Domain::kPositive ? s > 0 : s >= 0;
    if (!ok)
      throw std::domain_error(
          std::string(name) + ": argument not certified " +
          (dom == Domain::kPositive ? "positive" : "nonnegative"));
  }
  mpfr_prec_t p = x.prec();
  mpfr_t lo, hi;
  mpfr_init2(lo, p);
  mpfr_init2(hi, p);
  x.lower(lo);
  x.upper(hi);
  f(lo, lo, MPFR_RNDD);
  f(hi, hi, MPFR_RNDU);
  Ball r = Ball::from_endpoints(lo, hi, p);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return r;
}

}  // namespace

Ball Ball::sqrt() const {
  return monotone_unary(*this, mpfr_sqrt, Domain::kNonNegative, "sqrt");
}
Ball Ball::cbrt() const {
  return monotone_unary(*this, mpfr_cbrt, Domain::kAll, "cbrt");
}
Ball Ball::exp() const {
  return monotone_unary(*this, mpfr_exp, Domain::kAll, "exp");
}
Ball Ball::log() const {
  return monotone_unary(*this, mpfr_log, Domain::kPositive, "log");
}
Ball Ball::atan() const {
  return monotone_unary(*this, mpfr_atan, Domain::kAll, "atan");
}

Ball Ball::sin() const {
  Ball r(prec());
  int t = mpfr_sin(r.mid_, mid_, MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  r.bump_rad_ulp(t);
  // sin is 1-Lipschitz; also |sin| <= 1, clip the radius at 2 for wide input
  mpfr_t two;
  mpfr_init2(two, 16);
  mpfr_set_ui(two, 2, MPFR_RNDU);
  mpfr_min(r.rad_, r.rad_, two, MPFR_RNDU);
  mpfr_clear(two);
  return r;
}

Ball Ball::cos() const {
  Ball r(prec());
  int t = mpfr_cos(r.mid_, mid_, MPFR_RNDN);
  mpfr_set(r.rad_, rad_, MPFR_RNDU);
  r.bump_rad_ulp(t);
  mpfr_t two;
  mpfr_init2(two, 16);
  mpfr_set_ui(two, 2, MPFR_RNDU);
  mpfr_min(r.rad_, r.rad_, two, MPFR_RNDU);
  mpfr_clear(two);
  return r;
}

Ball Ball::pow(const Ball& e) const { return (log() * e).exp(); }

Ball Ball::pow_q(const mpq_class& e) const {
  if (e == 0) return from_ui(1, prec());
  mpz_class den = e.get_den();
  mpz_class num = e.get_num();
  if (den == 1 && num.fits_slong_p()) return pow_si(num.get_si());
  return (log() * from_q(e, prec())).exp();
}

Ball Ball::pow_si(long e) const {
  if (e == 0) return from_ui(1, prec());
  if (e < 0) return pow_si(-e).recip();
  Ball acc = from_ui(1, prec());
  Ball base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool Ball::is_positive() const {
  return mpfr_sgn(mid_) > 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool Ball::is_negative() const {
  return mpfr_sgn(mid_) < 0 && mpfr_cmpabs(mid_, rad_) > 0;
}

bool Ball::is_finite() const {
  return mpfr_number_p(mid_) && mpfr_number_p(rad_);
}

bool Ball::contains(const mpq_class& v) const {
  mpfr_t lo, hi;
  mpfr_init2(lo, prec());
  mpfr_init2(hi, prec());
  lower(lo);
  upper(hi);
  bool ok = mpfr_cmp_q(lo, v.get_mpq_t()) <= 0 &&
            mpfr_cmp_q(hi, v.get_mpq_t()) >= 0;
  mpfr_clear(lo);
  mpfr_clear(hi);
  return ok;
}

bool Ball::contains(const mpz_class& v) const {
  mpfr_t lo, hi;
  mpfr_init2(lo, prec());
  mpfr_init2(hi, prec());
  lower(lo);
  upper(hi);
  bool ok = mpfr_cmp_z(lo, v.get_mpz_t()) <= 0 &&
            mpfr_cmp_z(hi, v.get_mpz_t()) >= 0;
  mpfr_clear(lo);
  mpfr_clear(hi);
  return ok;
}

bool Ball::contains(const Ball& o) const {
  // |mid - o.mid| + o.rad <= rad
  mpfr_t d;
  mpfr_init2(d, kRadPrec);
  mpfr_sub(d, mid_, o.mid_, MPFR_RNDA);
  mpfr_abs(d, d, MPFR_RNDU);
  mpfr_add(d, d, o.rad_, MPFR_RNDU);
  bool ok = mpfr_cmp(d, rad_) <= 0;
  mpfr_clear(d);
  return ok;
}

bool Ball::overlaps(const Ball& o) const { return !lt(*this, o) && !lt(o, *this); }

bool Ball::lt(const Ball& a, const Ball& b) {
  mpfr_t au, bl;
  mpfr_init2(au, std::max(a.prec(), b.prec()));
  mpfr_init2(bl, std::max(a.prec(), b.prec()));
  a.upper(au);
  b.lower(bl);
  bool ok = mpfr_cmp(au, bl) < 0;
  mpfr_clear(au);
  mpfr_clear(bl);
  return ok;
}

std::string Ball::str(int digits) const {
  char* s = nullptr;
  if (mpfr_zero_p(rad_)) {
    mpfr_asprintf(&s, "%.*Re", digits - 1, mid_);
  } else {
    mpfr_asprintf(&s, "%.*Re +/- %.2Re", digits - 1, mid_, rad_);
  }
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace plancert
