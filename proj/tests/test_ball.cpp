#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "plancert/ball.hpp"
#include "plancert/cball.hpp"

using plancert::Ball;
using plancert::CBall;

namespace {

mpq_class rand_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4096, 4096);
  std::uniform_int_distribution<long> den(1, 512);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("constructors enclose their value") {
  CHECK(Ball::from_si(-7).contains(mpq_class(-7)));
  CHECK(Ball::from_ui(7).contains(mpq_class(7)));
  CHECK(Ball::from_d(0.125).contains(mpq_class(1, 8)));
  CHECK(Ball::from_z(mpz_class("123456789012345678901234567890"))
            .contains(mpz_class("123456789012345678901234567890")));
  Ball third = Ball::from_q(mpq_class(1, 3));
  CHECK(third.contains(mpq_class(1, 3)));
  CHECK(third.rad_d() < 1e-55);  // one rounding at 192 bits
  CHECK(!third.contains(mpq_class(1, 3) + mpq_class(1, 1000000)));
}

TEST_CASE("hull and explicit error bars") {
  Ball h = Ball::hull_d(-0.25, 3.5);
  CHECK(h.contains(mpq_class(0)));
  CHECK(h.contains(mpq_class(-1, 4)));
  CHECK(h.contains(mpq_class(7, 2)));
  CHECK(!h.contains(mpq_class(4)));
  CHECK(h.lower_d() <= -0.25);
  CHECK(h.upper_d() >= 3.5);

  Ball pm = Ball::zero_pm_q(mpq_class(1, 1000));
  CHECK(pm.contains(mpq_class(9, 10000)));
  CHECK(!pm.contains(mpq_class(11, 10000)));
}

TEST_CASE("pi and euler gamma against higher-precision references") {
  mpfr_t ref;
  mpfr_init2(ref, 512);
  mpfr_const_pi(ref, MPFR_RNDN);
  Ball pi = Ball::pi(192);
  mpfr_t lo, hi;
  mpfr_init2(lo, 192);
  mpfr_init2(hi, 192);
  pi.lower(lo);
  pi.upper(hi);
  CHECK(mpfr_cmp(lo, ref) < 0);
  CHECK(mpfr_cmp(hi, ref) > 0);
  mpfr_const_euler(ref, MPFR_RNDN);
  Ball eg = Ball::euler_gamma(192);
  eg.lower(lo);
  eg.upper(hi);
  CHECK(mpfr_cmp(lo, ref) < 0);
  CHECK(mpfr_cmp(hi, ref) > 0);
  mpfr_clear(ref);
  mpfr_clear(lo);
  mpfr_clear(hi);
}

TEST_CASE("field operations contain the exact rational result") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    mpq_class a = rand_q(rng), b = rand_q(rng);
    Ball A = Ball::from_q(a), B = Ball::from_q(b);
    CHECK((A + B).contains(a + b));
    CHECK((A - B).contains(a - b));
    CHECK((A * B).contains(a * b));
    if (b != 0 && !B.contains_zero()) CHECK((A / B).contains(mpq_class(a / b)));
    CHECK((-A).contains(mpq_class(-a)));
    CHECK(A.abs().contains(mpq_class(abs(a))));
    CHECK(A.mul_2si(5).contains(mpq_class(a * 32)));
    CHECK(A.mul_2si(-3).contains(mpq_class(a / 8)));
    CHECK(A.pow_si(3).contains(mpq_class(a * a * a)));
    CHECK(A.mul_q(mpq_class(3, 7)).contains(a * mpq_class(3, 7)));
  }
}

TEST_CASE("division by an interval containing zero is refused") {
  Ball z = Ball::hull_d(-1.0, 1.0);
  CHECK_THROWS_AS((void)z.recip(), std::domain_error);
  CHECK_THROWS_AS((void)(Ball::from_si(1) / z), std::domain_error);
}

TEST_CASE("sqr gives the exact square range") {
  Ball s = Ball::hull_d(-2.0, 3.0).sqr();
  CHECK(s.contains(mpq_class(0)));
  CHECK(s.contains(mpq_class(9)));
  CHECK(s.contains(mpq_class(4)));
  CHECK(s.upper_d() >= 9.0);
  CHECK(s.upper_d() < 9.0001);
  CHECK(s.lower_d() <= 0.0);
  // not the naive product range [-6, 9]
  CHECK(s.lower_d() > -1e-15);
  CHECK(!s.contains(mpq_class(-1)));

  Ball neg = Ball::hull_d(-3.0, -2.0).sqr();
  CHECK(neg.contains(mpq_class(4)));
  CHECK(neg.contains(mpq_class(9)));
  CHECK(!neg.contains(mpq_class(3)));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    mpq_class a = rand_q(rng);
    Ball A = Ball::from_q(a);
    CHECK(A.sqr().contains(a * a));
    CHECK(Ball::hull_d(a.get_d() - 0.5, a.get_d() + 0.5).sqr().contains(a * a));
  }
}

TEST_CASE("sqrt domain handling") {
  CHECK(Ball::from_si(2).sqrt().sqr().contains(mpq_class(2)));
  // exact lower endpoint 0 is inside sqrt's domain
  Ball s = Ball::hull_d(0.0, 4.0).sqrt();
  CHECK(s.contains(mpq_class(2)));
  CHECK(s.contains(mpq_class(0)));
  // dirty lower endpoint: sqrt refuses, sqrt_nonneg clamps
  Ball dirty = Ball::hull_d(-1e-30, 4.0);
  CHECK_THROWS_AS((void)dirty.sqrt(), std::domain_error);
  Ball c = dirty.sqrt_nonneg();
  CHECK(c.contains(mpq_class(2)));
  // radius re-rounding may push the lower endpoint ~2^-64 below zero
  CHECK(c.lower_d() >= -1e-18);
  CHECK(c.upper_d() >= 2.0);
  CHECK(c.upper_d() < 2.0001);
  // strictly negative interval: even sqrt_nonneg refuses
  CHECK_THROWS_AS((void)Ball::hull_d(-2.0, -1.0).sqrt_nonneg(),
                  std::domain_error);
  // log needs a strictly positive interval
  CHECK_THROWS_AS((void)Ball::hull_d(0.0, 1.0).log(), std::domain_error);
}

TEST_CASE("elementary functions at checkable points") {
  Ball x = Ball::from_q(mpq_class(3, 2));
  CHECK(x.exp().log().contains(mpq_class(3, 2)));
  CHECK(x.log().exp().contains(mpq_class(3, 2)));
  CHECK(Ball::from_si(8).cbrt().contains(mpq_class(2)));
  CHECK(Ball::from_si(-8).cbrt().contains(mpq_class(-2)));
  CHECK(Ball::from_si(8).pow_q(mpq_class(1, 3)).contains(mpq_class(2)));
  CHECK(Ball::from_si(4).pow_q(mpq_class(3, 2)).contains(mpq_class(8)));
  CHECK(Ball::from_si(2).pow(Ball::from_si(10)).contains(mpq_class(1024)));

  // sin(pi) ~ 0, cos(pi) = -1, atan(1) = pi/4
  Ball pi = Ball::pi();
  CHECK(pi.sin().contains(mpq_class(0)));
  CHECK(pi.cos().contains(mpq_class(-1)));
  Ball q = Ball::from_si(1).atan() * 4;
  CHECK(q.overlaps(pi));
  CHECK(q.rad_d() < 1e-55);
}

TEST_CASE("certified comparisons need disjoint intervals") {
  Ball a = Ball::hull_d(0.0, 1.0), b = Ball::hull_d(2.0, 3.0);
  CHECK(Ball::lt(a, b));
  CHECK(Ball::gt(b, a));
  CHECK(!Ball::lt(b, a));
  Ball c = Ball::hull_d(0.5, 2.5);
  CHECK(!Ball::lt(a, c));
  CHECK(!Ball::gt(a, c));
  CHECK(a.overlaps(c));
  CHECK(!a.overlaps(b));
  CHECK(Ball::hull_d(0.0, 3.0).contains(Ball::hull_d(1.0, 2.0)));
  CHECK(!Ball::hull_d(1.0, 2.0).contains(Ball::hull_d(0.0, 3.0)));
}

TEST_CASE("signs, endpoints and precision changes") {
  Ball p = Ball::from_q(mpq_class(1, 7));
  CHECK(p.is_positive());
  CHECK(!p.is_negative());
  CHECK(!p.contains_zero());
  CHECK((-p).is_negative());
  CHECK(Ball::hull_d(-1, 1).contains_zero());
  CHECK(p.is_finite());
  CHECK(p.lower_d() <= p.mid_d());
  CHECK(p.mid_d() <= p.upper_d());

  Ball down = p.at_prec(64);
  CHECK(down.prec() == 64);
  CHECK(down.contains(mpq_class(1, 7)));
  Ball up = down.at_prec(256);
  CHECK(up.contains(mpq_class(1, 7)));

  CHECK(p.str(10).size() > 5);
}

TEST_CASE("radius stays tight through a computation chain") {
  Ball x = Ball::from_q(mpq_class(355, 113), 192);
  Ball y = ((x.exp().log() * x).sqrt() / x).pow_q(mpq_class(2, 3));
  CHECK(y.rad_d() < 1e-45);
  CHECK(y.is_finite());
}

TEST_CASE("complex balls: arithmetic, abs, principal branch") {
  mpfr_prec_t p = 192;
  CBall z(Ball::from_si(3, p), Ball::from_si(4, p));
  CHECK(z.abs().contains(mpq_class(5)));
  CHECK(z.norm().contains(mpq_class(25)));
  CHECK((z * z.conj()).re.contains(mpq_class(25)));
  CHECK((z * z.conj()).im.contains(mpq_class(0)));
  CHECK((z.recip() * z).re.contains(mpq_class(1)));
  CHECK((z.recip() * z).im.contains(mpq_class(0)));
  CHECK(z.mul_i().re.contains(mpq_class(-4)));
  CHECK(z.mul_i().im.contains(mpq_class(3)));

  // abs of a rectangle straddling both axes: sup = |corner|, inf >= 0
  CBall w(Ball::hull_d(-1.0, 2.0, p), Ball::hull_d(-1.0, 1.0, p));
  Ball a = w.abs();
  CHECK(a.lower_d() >= -1e-15);
  CHECK(a.upper_d() >= std::sqrt(5.0) - 1e-12);
  CHECK(a.contains(mpq_class(1)));

  // exp/log/sqrt consistency on a point away from the branch cut
  CBall s = z.sqrt();
  CHECK((s * s).re.contains(mpq_class(3)));
  CHECK((s * s).im.contains(mpq_class(4)));
  CBall l = z.log().exp();
  CHECK(l.re.contains(mpq_class(3)));
  CHECK(l.im.contains(mpq_class(4)));

  mpfr_t ref, y4, x3, lo, hi;
  mpfr_inits2(512, ref, y4, x3, (mpfr_ptr)nullptr);
  mpfr_inits2(192, lo, hi, (mpfr_ptr)nullptr);
  mpfr_set_si(y4, 4, MPFR_RNDN);
  mpfr_set_si(x3, 3, MPFR_RNDN);
  mpfr_atan2(ref, y4, x3, MPFR_RNDN);
  Ball az = z.arg();
  az.lower(lo);
  az.upper(hi);
  CHECK(mpfr_cmp(lo, ref) < 0);
  CHECK(mpfr_cmp(hi, ref) > 0);
  mpfr_clears(ref, y4, x3, lo, hi, (mpfr_ptr)nullptr);
}
