#ifndef PLANCERT_CURVE_BOUND_HPP
#define PLANCERT_CURVE_BOUND_HPP

// Certified upper bound for the curve-derivative remainder constant
//
//   D_r = (1/(2r+4)!) max_{0<=s<=r+1} sup_t |chi_s^{(2r+4)}(t)|,
//   chi_s(t) = v^(2s+25/12) sqrt(2v+1) / (2 pi (v^2+v+1)),
//
// where v runs over the steepest-descent curve |v|^4 = Re v (upper branch,
// v = x + i sqrt(sqrt x - x^2)) and t is the curve parameter tied to v by
// t^2 = 3 - 2v - 1/v^2, i.e. t = -i (v-1) sqrt(2v+1) / v.
//
// Derivatives are computed in Taylor mode on three overlapping charts (the
// chart parameter's 0th Taylor coefficient is a panel hull, which makes every
// extracted value an enclosure over the whole panel):
//   - y-chart, parameter y = Im v in [0, 0.5]: covers the saddle t = 0,
//     with u = sqrt(x) certified by interval Newton on u^4 - u + y^2 = 0;
//   - x-chart, parameter x = Re v in [0.001, 0.85]: explicit parametrization;
//   - sigma-chart, parameter sigma = 1/t in [0, 0.18]: covers the tail
//     including t = infinity; the branch W = v/sigma solves
//     W^2 (1-3 sigma^2) + 2 sigma^3 W^3 + 1 = 0 (regular at sigma = 0, W = i),
//     certified by a Krawczyk step; chi^(k) = sigma^(a+k) Psi_k with
//     Psi_{k+1} = -(a+k) Psi_k - sigma Psi_k'.
// The chart images overlap in t (checked at runtime), so their union covers
// the whole parameter range.

#include "plancert/ball.hpp"

namespace plancert {

struct CurveBound {
  Ball value;        // encloses max_s sup_t |chi_s^(2r+4)(t)| / (2r+4)!
  bool budget_hit = false;
  long panel_evals = 0;
};

CurveBound d_r_bound(int r, mpfr_prec_t prec = Ball::kDefaultPrec);

// Single-point evaluation helpers, exposed for tests and cross-validation:
// enclosure of |chi_s^(K)(t)| at the given chart point (zero-width panel),
// together with an enclosure of t there.
struct CurvePoint {
  Ball t;
  Ball abs_deriv;
};
CurvePoint curve_point_x(int s, int K, double x0,
                         mpfr_prec_t prec = Ball::kDefaultPrec);
CurvePoint curve_point_y(int s, int K, double y0,
                         mpfr_prec_t prec = Ball::kDefaultPrec);
CurvePoint curve_point_sigma(int s, int K, double sigma0,
                             mpfr_prec_t prec = Ball::kDefaultPrec);

// Interval evaluation over a whole chart panel [lo, hi]: abs_deriv bounds
// sup over the panel, t encloses the panel's t-image.  The sigma chart
// requires lo > 0 here (the branch-and-bound handles panels touching 0
// internally, where no finite t enclosure exists).
CurvePoint curve_panel_x(int s, int K, double lo, double hi,
                         mpfr_prec_t prec = Ball::kDefaultPrec);
CurvePoint curve_panel_y(int s, int K, double lo, double hi,
                         mpfr_prec_t prec = Ball::kDefaultPrec);
CurvePoint curve_panel_sigma(int s, int K, double lo, double hi,
                             mpfr_prec_t prec = Ball::kDefaultPrec);

}  // namespace plancert

#endif
