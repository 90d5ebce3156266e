#ifndef PLANCERT_BALL_HPP
#define PLANCERT_BALL_HPP

// Certified midpoint-radius arithmetic on MPFR. The midpoint carries the
// working precision; the radius is a low-precision nonnegative float that is
// always rounded outward, so every Ball encloses the mathematical value it
// stands for. Comparisons succeed only when the intervals are disjoint.

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace plancert {

class Ball {
 public:
  static constexpr mpfr_prec_t kRadPrec = 64;
  static constexpr mpfr_prec_t kDefaultPrec = 192;

  explicit Ball(mpfr_prec_t prec = kDefaultPrec);
  Ball(const Ball& o);
  Ball(Ball&& o) noexcept;
  Ball& operator=(const Ball& o);
  Ball& operator=(Ball&& o) noexcept;
  ~Ball();

  static Ball from_si(long v, mpfr_prec_t prec = kDefaultPrec);
  static Ball from_ui(unsigned long v, mpfr_prec_t prec = kDefaultPrec);
  static Ball from_d(double v, mpfr_prec_t prec = kDefaultPrec);
  static Ball from_z(const mpz_class& v, mpfr_prec_t prec = kDefaultPrec);
  static Ball from_q(const mpq_class& v, mpfr_prec_t prec = kDefaultPrec);
  // Smallest ball around [lo, hi] at the given midpoint precision.
  static Ball from_endpoints(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec);
  static Ball hull_d(double lo, double hi, mpfr_prec_t prec = kDefaultPrec);
  // Zero midpoint with radius |r| (an explicit error bar).
  static Ball zero_pm_q(const mpq_class& r, mpfr_prec_t prec = kDefaultPrec);
  static Ball pi(mpfr_prec_t prec = kDefaultPrec);
  static Ball euler_gamma(mpfr_prec_t prec = kDefaultPrec);

  mpfr_prec_t prec() const { return mpfr_get_prec(mid_); }
  Ball zero_like() const { return Ball(prec()); }
  Ball one_like() const { return from_si(1, prec()); }
  const mpfr_t& mid() const { return mid_; }
  const mpfr_t& rad() const { return rad_; }
  // Re-round into a (possibly different) working precision, radius adjusted.
  Ball at_prec(mpfr_prec_t prec) const;

  Ball operator-() const;
  Ball abs() const;
  Ball recip() const;
  Ball sqr() const;  // exact range of x^2: [0, max^2] when 0 is inside
  Ball sqrt() const;
  // sqrt of the intersection with [0, inf).  Sound only when the enclosed
  // quantity is known nonnegative (e.g. |z|^2, where outward rounding may
  // push the enclosure slightly below zero); throws if upper < 0.
  Ball sqrt_nonneg() const;
  Ball cbrt() const;
  Ball exp() const;
  Ball log() const;
  Ball atan() const;
  Ball sin() const;
  Ball cos() const;
  Ball pow(const Ball& e) const;             // requires certified positive base
  Ball pow_q(const mpq_class& e) const;      // x^(p/q), certified positive base
  Ball pow_si(long e) const;                 // integer power, any sign of base
  Ball mul_2si(long k) const;                // exact scaling by 2^k

  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);
  Ball& operator+=(const Ball& b) { *this = *this + b; return *this; }
  Ball& operator-=(const Ball& b) { *this = *this - b; return *this; }
  Ball& operator*=(const Ball& b) { *this = *this * b; return *this; }
  Ball& operator/=(const Ball& b) { *this = *this / b; return *this; }

  Ball operator+(long v) const { return *this + from_si(v, prec()); }
  Ball operator-(long v) const { return *this - from_si(v, prec()); }
  Ball operator*(long v) const { return *this * from_si(v, prec()); }
  Ball operator/(long v) const { return *this / from_si(v, prec()); }
  Ball mul_q(const mpq_class& q) const { return *this * from_q(q, prec()); }

  // Directed endpoints at midpoint precision (caller owns out, must be init'd).
  void lower(mpfr_t out) const;
  void upper(mpfr_t out) const;
  double lower_d() const;
  double upper_d() const;
  double mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }
  double rad_d() const { return mpfr_get_d(rad_, MPFR_RNDU); }

  bool contains_zero() const;
  bool is_positive() const;   // certified: lower endpoint > 0
  bool is_negative() const;   // certified: upper endpoint < 0
  bool is_finite() const;
  bool contains(const mpq_class& v) const;
  bool contains(const mpz_class& v) const;
  bool contains(const Ball& o) const;        // o nested inside *this
  bool overlaps(const Ball& o) const;

  // Certified order: true only when the intervals are disjoint in that order.
  static bool lt(const Ball& a, const Ball& b);
  static bool gt(const Ball& a, const Ball& b) { return lt(b, a); }

  std::string str(int digits = 20) const;

 private:
  mpfr_t mid_;
  mpfr_t rad_;  // kRadPrec bits, always >= 0, all radius arithmetic rounds up

  void bump_rad_ulp(int ternary);  // account for a rounding of mid_
  friend class BallOps;
};

inline Ball operator+(long v, const Ball& b) { return b + v; }
inline Ball operator*(long v, const Ball& b) { return b * v; }
inline Ball operator-(long v, const Ball& b) { return -(b - v); }

}  // namespace plancert

#endif
