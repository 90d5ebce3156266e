#ifndef PLANCERT_CONSTANTS_HPP
#define PLANCERT_CONSTANTS_HPP

// Everything the effective asymptotic consumes: A = zeta(3), c = zeta'(-1),
// the exact-rational coefficient families alpha_s / beta_s / b_{s,m}, the
// validity thresholds n_r and ell_r, and the certified remainder constants
// C_r (circle maximum) and D_r (curve derivative bound).

#include <string>
#include <vector>

#include "plancert/ball.hpp"

namespace plancert {

Ball alpha_ball(int s, mpfr_prec_t prec);
Ball b_coeff(int s, int m, mpfr_prec_t prec);      // b_rational(s,m)/sqrt(3)
Ball gamma_half(int m, mpfr_prec_t prec);          // Gamma(m + 1/2)

// Least n >= 1 satisfying the respective validity predicate; comparisons are
// certified, precision escalates (up to 4096 bits) on inconclusive balls.
long threshold_n_r(int r, mpfr_prec_t prec = Ball::kDefaultPrec);
long threshold_ell_r(int r, mpfr_prec_t prec = Ball::kDefaultPrec);

// C_r = 2 max_{|z|=1} |exp(-sum_{s=1}^{r+1} alpha_s z^s)|, certified by
// branch-and-bound minimization of sum alpha_s cos(s t) over [0, pi].
Ball c_r_constant(int r, mpfr_prec_t prec = Ball::kDefaultPrec);

// How the remainder constants C_r / D_r are obtained.  kNone skips them
// entirely (closed-form evaluation, tables, and the log-concavity
// certification never touch them); kTabulated uses the built-in upper
// bounds (r = 2 only); kCertified runs the branch-and-bound certification
// (tens of seconds for D_2 on one core).
enum class CurveConstantMode { kNone, kTabulated, kCertified };

struct ConstantSet {
  int r = 2;
  mpfr_prec_t precision = Ball::kDefaultPrec;
  Ball A, c;
  std::vector<mpq_class> alpha;              // index 1..r+2 (slot 0 unused)
  std::vector<mpq_class> beta;               // index 0..r+1
  std::vector<std::vector<mpq_class>> b_rat; // b[s][m] = b_rat[s][m]/sqrt(3)
  std::vector<std::vector<Ball>> b;          // 0..r+1 x 0..r+1
  Ball C_r, D_r;
  long n_r = 0, ell_r = 0;
  bool d_r_certified = false;
  CurveConstantMode curve_mode = CurveConstantMode::kCertified;

  Ball alpha_b(int s) const { return Ball::from_q(alpha[s], precision); }
  Ball beta_b(int s) const { return Ball::from_q(beta[s], precision); }
  bool has_curve_constants() const {
    return curve_mode != CurveConstantMode::kNone;
  }
  long validity_floor() const { return std::max({n_r, ell_r, 87L}); }
  std::string report() const;
};

// Build (or fetch from a per-process cache) the constant set for a given r.
ConstantSet make_constants(
    int r, mpfr_prec_t prec = Ball::kDefaultPrec,
    CurveConstantMode mode = CurveConstantMode::kCertified);
const ConstantSet& constants(
    int r, mpfr_prec_t prec = Ball::kDefaultPrec,
    CurveConstantMode mode = CurveConstantMode::kCertified);

}  // namespace plancert

#endif
