#include "plancert/constants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "plancert/curve_bound.hpp"
#include "plancert/rationals.hpp"
#include "plancert/zeta.hpp"

namespace plancert {

Ball alpha_ball(int s, mpfr_prec_t prec) {
  return Ball::from_q(alpha_rational(s), prec);
}

Ball b_coeff(int s, int m, mpfr_prec_t prec) {
  return Ball::from_q(b_rational(s, m), prec) *
         Ball::from_si(3, prec).sqrt().recip();
}

Ball gamma_half(int m, mpfr_prec_t prec) {
  return Ball::from_q(gamma_half_rational(m), prec) * Ball::pi(prec).sqrt();
}

namespace {

// Scan upward for the least n making pred(n) certifiably true; escalate
// working precision when the comparison is inconclusive.
long scan_threshold(
    const std::function<int(long, mpfr_prec_t)>& tristate_pred,
    mpfr_prec_t prec) {
  for (long n = 1; n <= 10000000L; ++n) {
    mpfr_prec_t p = std::max<mpfr_prec_t>(prec, 64);
    int state = 0;
    while (true) {
      state = tristate_pred(n, p);
      if (state != 0) break;
      if (p >= 4096)
        throw std::runtime_error(
            "threshold scan: comparison inconclusive at 4096 bits");
      p *= 2;
    }
    if (state > 0) return n;
  }
  throw std::runtime_error("threshold scan: no admissible n found");
}

}  // namespace

long threshold_n_r(int r, mpfr_prec_t prec) {
  auto pred = [r](long n, mpfr_prec_t p) -> int {
    Ball A = zeta3(p);
    Ball cbrt_n = Ball::from_si(n, p).cbrt();
    Ball base = A.cbrt() / (Ball::from_si(2, p).pow_q(mpq_class(7, 6)) *
                            cbrt_n);
    Ball pi2 = Ball::pi(p).pow_si(2);
    Ball cbrt_2a = A.mul_2si(1).cbrt();
    Ball sum = A.zero_like();
    for (int s = 1; s <= r + 1; ++s) {
      Ball pow = (base * s).pow_si(2 * s);
      Ball lin = pi2 * cbrt_n / (cbrt_2a * s) + 2;
      sum = sum + pow * lin;
    }
    Ball val = sum.mul_q(mpq_class(7, 125));
    Ball one = val.one_like();
    if (Ball::lt(val, one)) return 1;
    if (Ball::gt(val, one)) return -1;
    return 0;
  };
  return scan_threshold(pred, prec);
}

long threshold_ell_r(int r, mpfr_prec_t prec) {
  auto pred = [r](long n, mpfr_prec_t p) -> int {
    Ball A = zeta3(p);
    Ball N = (Ball::from_si(n, p) / A.mul_2si(1)).cbrt();
    Ball term1 = Ball::from_si(1, p).mul_2si(r + 4) * Ball::pi(p).pow_si(3) *
                 Ball::from_q(alpha_rational(r + 2), p) *
                 N.pow_si(2 * r + 4).recip();
    Ball term2 = (-(N.mul_q(mpq_class(47, 10)))).exp() * 5;
    Ball val = term1 + term2;
    Ball half = Ball::from_q(mpq_class(1, 2), p);
    if (Ball::lt(val, half)) return 1;
    if (Ball::gt(val, half)) return -1;
    return 0;
  };
  return scan_threshold(pred, prec);
}

Ball c_r_constant(int r, mpfr_prec_t prec) {
  std::vector<Ball> alpha;
  for (int s = 1; s <= r + 1; ++s) alpha.push_back(alpha_ball(s, prec));

  auto f = [&](const Ball& t) {
    Ball acc = t.zero_like();
    for (int s = 1; s <= r + 1; ++s) acc = acc + alpha[s - 1] * (t * s).cos();
    return acc;
  };

  // Branch-and-bound minimum of f over [0, pi]. The scan domain [0, 3.15]
  // covers it; f is symmetric about pi, so the extra sliver cannot lower
  // the minimum.
  const double t_hi = 3.15;
  double m_hi;  // certified upper bound for the minimum
  {
    Ball best = f(Ball::pi(prec));
    for (int i = 0; i <= 64; ++i) {
      Ball v = f(Ball::from_d(t_hi * i / 64, prec));
      if (v.upper_d() < best.upper_d()) best = v;
    }
    m_hi = best.upper_d();
  }

  double m_lo = m_hi;
  struct Seg {
    double lo, hi;
  };
  std::vector<Seg> stack{{0.0, t_hi}};
  while (!stack.empty()) {
    Seg seg = stack.back();
    stack.pop_back();
    Ball v = f(Ball::hull_d(seg.lo, seg.hi, prec));
    if (v.lower_d() > m_hi) continue;  // cannot contain the minimum
    if (v.upper_d() - v.lower_d() < 1e-13 || seg.hi - seg.lo < 1e-9) {
      m_lo = std::min(m_lo, v.lower_d());
      continue;
    }
    double mid = 0.5 * (seg.lo + seg.hi);
    Ball pm = f(Ball::from_d(mid, prec));
    m_hi = std::min(m_hi, pm.upper_d());
    stack.push_back({seg.lo, mid});
    stack.push_back({mid, seg.hi});
  }

  return (-Ball::hull_d(m_lo, m_hi, prec)).exp().mul_2si(1);
}

std::string ConstantSet::report() const {
  std::ostringstream os;
  int digits = static_cast<int>(precision * 0.3010) + 2;
  digits = std::min(digits, 60);
  os << "r = " << r << "\n";
  os << "precision = " << precision << "\n";
  os << "A = " << A.str(digits) << "\n";
  os << "c = " << c.str(digits) << "\n";
  for (int s = 1; s <= r + 2; ++s)
    os << "alpha_" << s << " = "
       << Ball::from_q(alpha[s], precision).str(digits) << "\n";
  for (int s = 0; s <= r + 1; ++s)
    os << "beta_" << s << " = "
       << Ball::from_q(beta[s], precision).str(digits) << "\n";
  for (int s = 0; s <= r + 1; ++s)
    for (int m = 0; m <= r + 1; ++m)
      os << "b_" << s << "_" << m << " = " << b[s][m].str(digits) << "\n";
  if (has_curve_constants()) {
    os << "C_r = " << C_r.str(digits) << "\n";
    os << "D_r = " << D_r.str(digits) << "\n";
  }
  os << "n_r = " << n_r << "\n";
  os << "ell_r = " << ell_r << "\n";
  os << "d_r_certified = " << (d_r_certified ? "true" : "false") << "\n";
  os << "curve_constants = "
     << (curve_mode == CurveConstantMode::kNone
             ? "none"
             : (curve_mode == CurveConstantMode::kTabulated ? "tabulated"
                                                            : "certified"))
     << "\n";
  return os.str();
}

ConstantSet make_constants(int r, mpfr_prec_t prec, CurveConstantMode mode) {
  if (r < 1) throw std::invalid_argument("make_constants: r >= 1 required");
  if (mode == CurveConstantMode::kTabulated && r != 2)
    throw std::invalid_argument(
        "make_constants: tabulated remainder constants exist only for r = 2");

  ConstantSet cs;
  cs.r = r;
  cs.precision = prec;
  cs.A = zeta3(prec);
  cs.c = zeta_prime_minus_one(prec);

  cs.alpha.assign(r + 3, mpq_class(0));
  for (int s = 1; s <= r + 2; ++s) cs.alpha[s] = alpha_rational(s);
  cs.beta = beta_rationals(r + 1);

  cs.b_rat.assign(r + 2, std::vector<mpq_class>(r + 2));
  cs.b.assign(r + 2, std::vector<Ball>(r + 2, Ball(prec)));
  for (int s = 0; s <= r + 1; ++s)
    for (int m = 0; m <= r + 1; ++m) {
      cs.b_rat[s][m] = b_rational(s, m);
      cs.b[s][m] = b_coeff(s, m, prec);
    }

  cs.n_r = threshold_n_r(r, prec);
  cs.ell_r = threshold_ell_r(r, prec);

  cs.curve_mode = mode;
  switch (mode) {
    case CurveConstantMode::kNone:
      break;  // C_r / D_r stay zero; major_error_bound refuses to use them
    case CurveConstantMode::kTabulated:
      cs.C_r = Ball::from_q(mpq_class(20007, 10000), prec);
      cs.D_r = Ball::from_q(mpq_class(53, 10), prec);
      cs.d_r_certified = false;
      break;
    case CurveConstantMode::kCertified: {
      cs.C_r = c_r_constant(r, prec);
      CurveBound db = d_r_bound(r, prec);
      cs.D_r = db.value;
      cs.d_r_certified = !db.budget_hit;
      break;
    }
  }
  return cs;
}

const ConstantSet& constants(int r, mpfr_prec_t prec, CurveConstantMode mode) {
  static std::map<std::tuple<int, long, int>,
                  std::unique_ptr<ConstantSet>>
      cache;
  auto key =
      std::make_tuple(r, static_cast<long>(prec), static_cast<int>(mode));
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto cs = std::make_unique<ConstantSet>(make_constants(r, prec, mode));
    it = cache.emplace(key, std::move(cs)).first;
  }
  return *it->second;
}

}  // namespace plancert
