#ifndef PLANCERT_CBALL_HPP
#define PLANCERT_CBALL_HPP

// Complex intervals as a pair of real balls. Principal-branch sqrt/log/pow
// require the argument's quadrant to be certifiable; callers that hit the
// inconclusive region are expected to subdivide their domain and retry.

#include "plancert/ball.hpp"

namespace plancert {

class CBall {
 public:
  Ball re, im;

  explicit CBall(mpfr_prec_t prec = Ball::kDefaultPrec) : re(prec), im(prec) {}
  CBall(Ball r, Ball i) : re(std::move(r)), im(std::move(i)) {}
  explicit CBall(const Ball& r) : re(r), im(Ball(r.prec())) {}

  static CBall from_si(long v, mpfr_prec_t prec = Ball::kDefaultPrec) {
    return CBall(Ball::from_si(v, prec));
  }
  static CBall unit_i(mpfr_prec_t prec = Ball::kDefaultPrec) {
    return CBall(Ball(prec), Ball::from_si(1, prec));
  }

  mpfr_prec_t prec() const { return re.prec(); }
  CBall zero_like() const { return CBall(prec()); }
  CBall one_like() const { return CBall(Ball::from_si(1, prec())); }

  CBall operator-() const { return CBall(-re, -im); }
  CBall conj() const { return CBall(re, -im); }
  Ball norm() const { return re.sqr() + im.sqr(); }  // |z|^2
  Ball abs() const { return norm().sqrt_nonneg(); }

  friend CBall operator+(const CBall& a, const CBall& b) {
    return CBall(a.re + b.re, a.im + b.im);
  }
  friend CBall operator-(const CBall& a, const CBall& b) {
    return CBall(a.re - b.re, a.im - b.im);
  }
  friend CBall operator*(const CBall& a, const CBall& b) {
    return CBall(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  CBall& operator+=(const CBall& b) { *this = *this + b; return *this; }
  CBall& operator-=(const CBall& b) { *this = *this - b; return *this; }
  CBall& operator*=(const CBall& b) { *this = *this * b; return *this; }

  CBall mul_real(const Ball& c) const { return CBall(re * c, im * c); }
  CBall operator*(const Ball& c) const { return mul_real(c); }
  CBall operator*(long v) const { return CBall(re * v, im * v); }
  CBall operator/(long v) const { return CBall(re / v, im / v); }
  CBall mul_i() const { return CBall(-im, re); }

  CBall recip() const {
    Ball n = norm();
    if (!n.is_positive())
      throw std::domain_error("CBall::recip: interval contains zero");
    Ball inv = n.recip();
    return CBall(re * inv, -(im * inv));
  }
  friend CBall operator/(const CBall& a, const CBall& b) {
    return a * b.recip();
  }

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

  // Principal argument, certified by quadrant/half-plane membership.
  Ball arg() const {
    mpfr_prec_t p = prec();
    if (re.is_positive()) return (im / re).atan();
    Ball half_pi = Ball::pi(p).mul_2si(-1);
    if (im.is_positive()) return half_pi - (re / im).atan();
    if (im.is_negative()) return -half_pi - (re / im).atan();
    throw std::domain_error("CBall::arg: quadrant not certifiable");
  }

  CBall exp() const {
    Ball m = re.exp();
    return CBall(m * im.cos(), m * im.sin());
  }
  CBall log() const {
    Ball n = norm();
    if (!n.is_positive())
      throw std::domain_error("CBall::log: interval contains zero");
    return CBall(n.log().mul_2si(-1), arg());
  }
  CBall sqrt() const { return (log().mul_real(half())).exp(); }
  CBall pow_q(const mpq_class& e) const {
    if (e == 0) return one_like();
    return (log().mul_real(Ball::from_q(e, prec()))).exp();
  }

  std::string str(int digits = 20) const {
    return "(" + re.str(digits) + ", " + im.str(digits) + ")";
  }

 private:
  Ball half() const { return Ball::from_si(1, prec()).mul_2si(-1); }
};

}  // namespace plancert

#endif
