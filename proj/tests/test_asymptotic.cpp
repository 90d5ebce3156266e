#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "plancert/asymptotic.hpp"
#include "plancert/constants.hpp"
#include "plancert/exact.hpp"

using namespace plancert;

namespace {

bool contains_decimal(const Ball& b, const std::string& digits) {
  auto dot = digits.find('.');
  REQUIRE(dot != std::string::npos);
  int frac = static_cast<int>(digits.size() - dot - 1);
  mpz_class scaled(digits.substr(0, dot) + digits.substr(dot + 1), 10);
  mpz_class den(1);
  for (int i = 0; i < frac; ++i) den *= 10;
  mpq_class center(scaled, den);
  center.canonicalize();
  Ball wide = Ball::from_q(center, b.prec()) +
              Ball::zero_pm_q(mpq_class(1) / den, b.prec());
  return b.overlaps(wide);
}

double rel_gap(const Ball& a, const Ball& b) {
  return std::abs(a.mid_d() / b.mid_d() - 1.0);
}

const ConstantSet& cs2() {
  return constants(2, 192, CurveConstantMode::kNone);
}
const ConstantSet& cs1() {
  return constants(1, 192, CurveConstantMode::kNone);
}
const ConstantSet& tab2() {
  return constants(2, 192, CurveConstantMode::kTabulated);
}

}  // namespace

TEST_CASE("saddle scale inverts the defining cubic") {
  for (long n : {87L, 500L, 12345L}) {
    Ball N = n_scale(n, cs2());
    CHECK((N.pow_si(3) * cs2().A.mul_2si(1)).contains(mpq_class(n)));
  }
  CHECK_THROWS_AS((void)n_scale(0, cs2()), std::invalid_argument);
}

TEST_CASE("group coefficients match frozen references") {
  CHECK(contains_decimal(group_coefficient(0, cs2()), "0.231516813448898"));
  CHECK(contains_decimal(group_coefficient(1, cs2()),
                         "-0.0555511268254838"));
  CHECK(contains_decimal(group_coefficient(2, cs2()),
                         "-0.00596565895438349"));
  CHECK(contains_decimal(group_coefficient(3, cs2()),
                         "-0.00123443677417492348"));
  // r = 1 regroups the same families: identical g_0 and g_1
  CHECK(group_coefficient(0, cs1()).overlaps(group_coefficient(0, cs2())));
  CHECK(group_coefficient(1, cs1()).overlaps(group_coefficient(1, cs2())));
}

TEST_CASE("closed form tracks the ungrouped main term") {
  ClosedFormEval cfe(cs2());
  // they differ only in cross terms s+m > r+1, which decay like n^(-2(r+2)/3)
  CHECK(rel_gap(main_term(500, cs2()), cfe.value_at(500)) < 1e-6);
  CHECK(rel_gap(main_term(5000, cs2()), cfe.value_at(5000)) < 1e-8);
  CHECK(rel_gap(main_term(105, cs1()), ClosedFormEval(cs1()).value_at(105)) <
        1e-4);
}

TEST_CASE("validity floors") {
  ClosedFormEval f2(cs2());
  CHECK(f2.floor() == 87);
  CHECK_THROWS_AS((void)f2(86), std::domain_error);
  CHECK(f2(87).value.is_positive());
  ClosedFormEval f1(cs1());
  CHECK(f1.floor() == 105);
  CHECK_THROWS_AS((void)f1(104), std::domain_error);
  CHECK(f1(105).value.is_positive());
  CHECK(estimate(86, tab2()).valid == false);
  CHECK(estimate(87, tab2()).valid == true);
}

TEST_CASE("bracket table reproduces its frozen endpoints") {
  struct Row {
    long n;
    double lo, hi;
  };
  const Row rows[] = {{100, 5.9328369e15, 1.1247929e17},
                      {200, 3.7062421e27, 4.4262849e27},
                      {500, 2.913452e52, 2.9178550e52},
                      {1000, 3.5422422e84, 3.5429393e84}};
  ClosedFormEval cfe(cs2());
  PlCache cache;
  for (const Row& row : rows) {
    ClosedForm cf = cfe(row.n);
    Ball lower = cf.value - cf.envelope;
    Ball upper = cf.value + cf.envelope;
    CHECK(std::abs(lower.mid_d() / row.lo - 1.0) < 1e-6);
    CHECK(std::abs(upper.mid_d() / row.hi - 1.0) < 1e-6);
    mpz_class pl = cache.at(row.n);
    CHECK(Ball::lt(lower, Ball::from_z(pl)));
    CHECK(Ball::lt(Ball::from_z(pl), upper));
  }
}

TEST_CASE("rescaled residual table matches its frozen values") {
  const long ns[] = {100, 200, 500};
  const double refs[] = {-1.1804281e-7, -3.0059056e-8, -4.8707377e-9};
  ClosedFormEval cfe(cs1());
  PlCache cache;
  for (int i = 0; i < 3; ++i) {
    long n = ns[i];
    Ball N = n_scale(n, cs1());
    Ball rescale = (-(cs1().A * N.pow_si(2) * 3)).exp() *
                   Ball::from_si(n, 192).pow_q(mpq_class(25, 36));
    Ball E = (Ball::from_z(cache.at(n), 192) - cfe.value_at(n)) * rescale;
    CHECK(std::abs(E.mid_d() / refs[i] - 1.0) < 1e-6);
    Ball bound = Ball::from_si(n, 192).pow_q(mpq_class(-5, 3)).mul_q(527);
    CHECK(Ball::lt(E.abs(), bound));
  }
}

TEST_CASE("certified enclosures contain the exact values") {
  PlCache cache;
  for (long n : {87L, 100L, 500L, 1000L}) {
    Enclosure enc = estimate(n, tab2());
    CHECK(enc.valid);
    Ball pl = Ball::from_z(cache.at(n), 192);
    Ball err = enc.major_radius + enc.minor_radius;
    CHECK(Ball::lt(enc.main - err, pl));
    CHECK(Ball::lt(pl, enc.main + err));
  }
  // the error budget shrinks relative to the main term
  Enclosure e500 = estimate(500, tab2());
  CHECK(e500.major_radius.upper_d() / e500.main.mid_d() < 1e-3);
  CHECK(e500.minor_radius.upper_d() / e500.main.mid_d() < 1e-3);
  Enclosure e2000 = estimate(2000, tab2());
  CHECK(e2000.major_radius.upper_d() / e2000.main.mid_d() < 1e-4);
}

TEST_CASE("remainder ledger margins at the validity floor") {
  // at n = 87 with the tabulated C_r / D_r, the three rescaled components
  // stay under the budgets that justify the closed-form envelope constant
  const ConstantSet& cs = tab2();
  Enclosure enc = estimate(87, cs);
  Ball N = enc.N_n;
  Ball u = (cs.A * N.pow_si(2) * 3).exp() *
           Ball::from_si(87, 192).pow_q(mpq_class(-109, 36));
  Ball lift = (cs.A * N.pow_si(2) * 2).exp() / (N * Ball::pi(192));
  double m1 = (enc.ledger.X_r * lift / u).upper_d();
  double m2 = (enc.ledger.Z_r.abs() / u).upper_d();
  double m3 = (enc.ledger.E_hat / u).upper_d();
  CHECK(m1 <= 127.0);
  CHECK(m1 > 120.0);  // the budget is nearly sharp
  CHECK(m2 <= 100.0);
  CHECK(m2 > 95.0);
  CHECK(m3 <= 227.0 - 1e-5);
  CHECK(m3 > 220.0);
  // the minor-arc bound dwarfs the main term at the floor but decays
  // relative to it like e^(-2/5 N^2)
  CHECK((minor_error_bound(87, cs) / main_term(87, cs)).lower_d() > 1.0);
  CHECK((minor_error_bound(1000, cs) / main_term(1000, cs)).upper_d() <
        1e-6);
  CHECK((minor_error_bound(2000, cs) / main_term(2000, cs)).upper_d() <
        1e-12);
}

TEST_CASE("envelope construction for both truncation orders") {
  ClosedFormEval f1(cs1()), f2(cs2());
  PlCache cache;
  for (long n : {105L, 200L, 500L}) {
    ClosedForm cf = f1(n);
    Ball gap = (Ball::from_z(cache.at(n), 192) - cf.value).abs();
    CHECK(Ball::lt(gap, cf.envelope));
    // r = 1 envelope has the closed form 527 e^(3AN^2) n^(-85/36)
    Ball N = n_scale(n, cs1());
    Ball ref = (cs1().A * N.pow_si(2) * 3).exp() *
               Ball::from_si(n, 192).pow_q(mpq_class(-85, 36)) * 527;
    CHECK(cf.envelope.overlaps(ref));
  }
  for (long n : {87L, 300L, 2000L}) {
    ClosedForm cf = f2(n);
    Ball gap = (Ball::from_z(cache.at(n), 192) - cf.value).abs();
    CHECK(Ball::lt(gap, cf.envelope));
    // r = 2 envelope: 227 e^(3AN^2) n^(-109/36) + e^((3A-2/5)N^2)
    Ball N = n_scale(n, cs2());
    Ball ref = (cs2().A * N.pow_si(2) * 3).exp() *
                   Ball::from_si(n, 192).pow_q(mpq_class(-109, 36)) * 227 +
               minor_error_bound(n, cs2());
    CHECK(cf.envelope.overlaps(ref));
  }
}
