#include "plancert/curve_bound.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "plancert/cball.hpp"
#include "plancert/rationals.hpp"
#include "plancert/series.hpp"

namespace plancert {

namespace {

using CSer = Series<CBall>;

mpq_class chi_exponent(int s) { return mpq_class(2 * s) + mpq_class(25, 12); }

CSer scale_i(const CSer& a) {
  CSer out;
  out.reserve(a.size());
  for (const auto& z : a) out.push_back(z.mul_i());
  return out;
}

CSer neg_i(const CSer& a) {
  CSer out;
  out.reserve(a.size());
  for (const auto& z : a) out.push_back(CBall(z.im, -z.re));
  return out;
}

// t = -i (V - 1) sqrt(2V + 1) / V
CSer t_from_v(const CSer& V, std::size_t L) {
  CBall one = V[0].one_like();
  CSer sq = ser::sqrt(ser::add(ser::scale(V, 2L), CSer{one}), L);
  CSer num = ser::mul(ser::add(V, CSer{-one}), sq, L);
  return neg_i(ser::div(num, V, L));
}

// chi_s = v^(2s+25/12) sqrt(2v+1) / (2 pi (v^2+v+1))
CSer chi_from_v(int s, const CSer& V, std::size_t L) {
  mpfr_prec_t prec = V[0].prec();
  CBall one = V[0].one_like();
  CSer p = ser::pow_q(V, chi_exponent(s), L);
  CSer sq = ser::sqrt(ser::add(ser::scale(V, 2L), CSer{one}), L);
  CSer num = ser::mul(p, sq, L);
  CSer den = ser::add(ser::add(ser::mul(V, V, L), V), CSer{one});
  CSer q = ser::div(num, den, L);
  return ser::scale(q, Ball::pi(prec).mul_2si(1).recip());
}

// K rounds of d/dt = (d/dparam) / (dT/dparam); returns the series of
// chi^(K) in the chart parameter (length shrinks to chi.size() - K).
CSer deriv_series_by_t(const CSer& chi, const CSer& T, int K) {
  CSer dT = ser::deriv(T);
  CSer cur = chi;
  for (int j = 0; j < K; ++j) {
    CSer dF = ser::deriv(cur);
    cur = ser::div(dF, dT, dF.size());
  }
  return cur;
}

struct Eval {
  Ball t0;
  Ball absval;
  // When false, absval.upper() is NOT a sup bound (the evaluation was cut
  // short because the midpoint Taylor sum already exceeded the rejection
  // threshold); absval.lower() remains a certified lower bound.
  bool bounded = true;
};

struct Chain {
  CSer f;  // series of chi^(K) in the chart parameter
  Ball t;  // t-image of the parameter ball
};

// x chart: v = x + i g(x) with g = sqrt(sqrt(x) - x^2).
std::optional<Chain> chain_x(int s, int K, const Ball& x0, std::size_t L,
                             mpfr_prec_t prec) {
  try {
    CSer X{CBall(x0), CBall::from_si(1, prec)};
    CSer sqx = ser::sqrt(X, L);
    CSer g2 = ser::add(sqx, ser::scale(ser::mul(X, X, L), -1L));
    if (!g2[0].re.is_positive()) return std::nullopt;
    CSer g = ser::sqrt(g2, L);
    CSer V = ser::add(X, scale_i(g));
    CSer T = t_from_v(V, L);
    return Chain{deriv_series_by_t(chi_from_v(s, V, L), T, K), T[0].re};
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

// y chart: v = u(y)^2 + i y where u is the right branch of
// u^4 - u + y^2 = 0, certified by interval Newton.
std::optional<Chain> chain_y(int s, int K, const Ball& y0, std::size_t L,
                             mpfr_prec_t prec) {
  try {
    Ball y2 = y0.sqr();
    double ym = y0.mid_d();
    double u = 1.0;
    for (int i = 0; i < 64; ++i)
      u -= (((u * u) * (u * u)) - u + ym * ym) / (4 * u * u * u - 1);
    Ball u0(prec);
    {
      double delta = 1.4 * y0.rad_d() + 1e-12;
      bool ok = false;
      for (int attempt = 0; attempt < 14 && !ok; ++attempt, delta *= 2) {
        Ball B = Ball::hull_d(u - delta, u + delta, prec);
        Ball gp = (B * B * B) * 4 - 1;
        if (gp.contains_zero()) return std::nullopt;
        Ball m = Ball::from_d(u, prec);
        Ball gm = m.pow_si(4) - m + y2;
        Ball N = m - gm / gp;
        if (B.contains(N)) {
          u0 = N;
          ok = true;
        }
      }
      if (!ok) return std::nullopt;
    }

    CSer Y{CBall(y0), CBall::from_si(1, prec)};
    CSer Y2 = ser::mul(Y, Y, L);
    Ball inv_dg = ((u0 * u0 * u0) * 4 - 1).recip();
    CSer U(L, CBall(prec));
    U[0] = CBall(u0);
    for (std::size_t k = 1; k < L; ++k) {
      CSer U2 = ser::mul(U, U, k + 1);
      CSer U4 = ser::mul(U2, U2, k + 1);
      CSer R = ser::add(ser::add(U4, ser::scale(U, -1L)), Y2);
      U[k] = (-R[k]).mul_real(inv_dg);
    }
    CSer X = ser::mul(U, U, L);
    CSer V = ser::add(X, scale_i(Y));
    CSer T = t_from_v(V, L);
    return Chain{deriv_series_by_t(chi_from_v(s, V, L), T, K), T[0].re};
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

// Bound sup |chi^(K)| over a panel by a Taylor expansion at the midpoint
// with a Lagrange tail: the first kTailOrder derivative coefficients come
// from a tight midpoint series, and only the tail coefficient uses the
// (heavily overestimated) whole-panel series, damped by h^(kTailOrder+1).
constexpr int kTailOrder = 6;

// Clamp a ball's lower endpoint to >= 0 and pair it with an upper bound.
Ball nonneg_enclosure(const Ball& lower_src, const Ball& upper_src,
                      mpfr_prec_t prec) {
  mpfr_t a, b;
  mpfr_init2(a, prec);
  mpfr_init2(b, prec);
  lower_src.lower(a);
  if (mpfr_sgn(a) < 0) mpfr_set_zero(a, 1);
  upper_src.upper(b);
  Ball out = Ball::from_endpoints(a, b, prec);
  mpfr_clear(a);
  mpfr_clear(b);
  return out;
}

template <typename ChainFn>
std::optional<Eval> taylor_sup_eval(ChainFn&& chain, double lo, double hi,
                                    int K, mpfr_prec_t prec,
                                    double reject_above) {
  const int J = kTailOrder;
  if (hi <= lo) {  // point evaluation
    auto c = chain(Ball::from_d(lo, prec), static_cast<std::size_t>(K) + 2);
    if (!c) return std::nullopt;
    return Eval{c->t, c->f[0].abs(), true};
  }
  std::size_t L = static_cast<std::size_t>(K) + J + 2;
  auto cm = chain(Ball::from_d(0.5 * (lo + hi), prec), L);
  if (!cm) return std::nullopt;
  Ball h = (Ball::from_d(hi, prec) - Ball::from_d(lo, prec)).mul_2si(-1);
  Ball mid_abs = cm->f[0].abs();
  Ball sup = mid_abs;
  Ball hp = Ball::from_si(1, prec);
  for (int j = 1; j <= J; ++j) {
    hp = hp * h;
    sup = sup + cm->f[j].abs() * hp;
  }
  // The midpoint Taylor sum alone already exceeds the threshold: skip the
  // expensive whole-panel pass, the caller will subdivide anyway.
  if (sup.upper_d() > reject_above)
    return Eval{cm->t, nonneg_enclosure(mid_abs, sup, prec), false};
  auto ch = chain(Ball::hull_d(lo, hi, prec), L);
  if (!ch) return std::nullopt;
  hp = hp * h;
  sup = sup + ch->f[J + 1].abs() * hp;
  // The sup over the panel is at least the midpoint value, at most the
  // Taylor-with-Lagrange-tail bound.
  return Eval{ch->t, nonneg_enclosure(mid_abs, sup, prec), true};
}

std::optional<Eval> eval_x(int s, int K, double lo, double hi,
                           mpfr_prec_t prec, double reject_above) {
  return taylor_sup_eval(
      [&](const Ball& p, std::size_t L) { return chain_x(s, K, p, L, prec); },
      lo, hi, K, prec, reject_above);
}

std::optional<Eval> eval_y(int s, int K, double lo, double hi,
                           mpfr_prec_t prec, double reject_above) {
  return taylor_sup_eval(
      [&](const Ball& p, std::size_t L) { return chain_y(s, K, p, L, prec); },
      lo, hi, K, prec, reject_above);
}

std::optional<Eval> eval_sigma(int s, int K, double lo, double hi,
                               mpfr_prec_t prec, double /*reject_above*/) {
  try {
    std::size_t L = static_cast<std::size_t>(K) + 2;
    Ball sh = Ball::hull_d(lo, hi, prec);
    Ball one_m3s2_0 = -((sh * sh) * 3 - 1);
    Ball s3_0 = sh.pow_si(3);

    // W(sigma) near i: W^2 (1-3s^2) + 2 s^3 W^3 + 1 = 0, Krawczyk-certified.
    double sm = 0.5 * (lo + hi);
    std::complex<double> w(0.0, 1.0);
    for (int i = 0; i < 64; ++i) {
      std::complex<double> gw =
          w * w * (1 - 3 * sm * sm) + 2 * sm * sm * sm * w * w * w + 1.0;
      std::complex<double> gpw =
          2.0 * w * (1 - 3 * sm * sm) + 6 * sm * sm * sm * w * w;
      w -= gw / gpw;
    }
    CBall W0(prec);
    {
      auto contains2 = [](const CBall& a, const CBall& b) {
        return a.re.contains(b.re) && a.im.contains(b.im);
      };
      std::complex<double> gpw =
          2.0 * w * (1 - 3 * sm * sm) + 6 * sm * sm * sm * w * w;
      CBall Yop = CBall(Ball::from_d(gpw.real(), prec),
                        Ball::from_d(gpw.imag(), prec))
                      .recip();
      double delta = 0.7 * (hi - lo) + 1e-12;
      bool ok = false;
      for (int attempt = 0; attempt < 14 && !ok; ++attempt, delta *= 2) {
        CBall B(Ball::hull_d(w.real() - delta, w.real() + delta, prec),
                Ball::hull_d(w.imag() - delta, w.imag() + delta, prec));
        CBall m(Ball::from_d(w.real(), prec), Ball::from_d(w.imag(), prec));
        CBall Gm = m * m * one_m3s2_0 + (m * m * m).mul_real(s3_0) * 2 +
                   m.one_like();
        CBall GpB = B * one_m3s2_0 * 2 + (B * B).mul_real(s3_0) * 6;
        CBall Kw = m - Yop * Gm +
                   (m.one_like() - Yop * GpB) * (B - m);
        if (contains2(B, Kw)) {
          W0 = Kw;
          ok = true;
        }
      }
      if (!ok) return std::nullopt;
    }

    CSer Sg{CBall(sh), CBall::from_si(1, prec)};
    CSer Sg2 = ser::mul(Sg, Sg, L);
    CSer Sg3 = ser::mul(Sg2, Sg, L);
    CSer one_m3s2 =
        ser::add(CSer{CBall::from_si(1, prec)}, ser::scale(Sg2, -3L));
    CBall inv_dg =
        (W0 * one_m3s2_0 * 2 + (W0 * W0).mul_real(s3_0) * 6).recip();
    CSer W(L, CBall(prec));
    W[0] = W0;
    for (std::size_t k = 1; k < L; ++k) {
      CSer W2 = ser::mul(W, W, k + 1);
      CSer W3 = ser::mul(W2, W, k + 1);
      CSer R = ser::add(
          ser::add(ser::mul(W2, one_m3s2, k + 1),
                   ser::scale(ser::mul(Sg3, W3, k + 1), 2L)),
          CSer{CBall::from_si(1, prec)});
      W[k] = -R[k] * inv_dg;
    }

    mpq_class a = chi_exponent(s);
    CSer V = ser::mul(Sg, W, L);
    CBall one = CBall::from_si(1, prec);
    CSer p = ser::pow_q(W, a, L);
    CSer sq = ser::sqrt(ser::add(ser::scale(V, 2L), CSer{one}), L);
    CSer num = ser::mul(p, sq, L);
    CSer den = ser::add(ser::add(ser::mul(V, V, L), V), CSer{one});
    CSer Phi = ser::scale(ser::div(num, den, L),
                          Ball::pi(prec).mul_2si(1).recip());

    CSer Psi = Phi;
    for (int k = 0; k < K; ++k) {
      CSer dPsi = ser::deriv(Psi);
      CSer term = ser::mul(Sg, dPsi, dPsi.size());
      Psi.resize(dPsi.size(), CBall(prec));
      Ball coef = -Ball::from_q(a + k, prec);
      Psi = ser::add(ser::scale(Psi, coef), ser::scale(term, -1L));
    }

    Ball abs_psi = Psi[0].abs();
    mpq_class aK = a + K;
    Ball spow(prec);
    if (lo > 0) {
      spow = sh.pow_q(aK);
    } else {
      mpfr_t z, up;
      mpfr_init2(z, prec);
      mpfr_init2(up, prec);
      mpfr_set_zero(z, 1);
      Ball hb = Ball::from_d(hi, prec).pow_q(aK);
      hb.upper(up);
      spow = Ball::from_endpoints(z, up, prec);
      mpfr_clear(z);
      mpfr_clear(up);
    }
    Ball absval = spow * abs_psi;

    Ball t0(prec);
    if (lo > 0) t0 = sh.recip();
    Eval e{t0, absval, true};
    return e;
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

struct Chart {
  char id;
  double lo, hi;
  std::function<std::optional<Eval>(int, int, double, double, mpfr_prec_t,
                                    double)>
      eval;
};

constexpr double kNoReject = std::numeric_limits<double>::infinity();

}  // namespace

CurvePoint curve_point_x(int s, int K, double x0, mpfr_prec_t prec) {
  auto e = eval_x(s, K, x0, x0, prec, kNoReject);
  if (!e) throw std::domain_error("curve_point_x: evaluation failed");
  return CurvePoint{e->t0, e->absval};
}

CurvePoint curve_point_y(int s, int K, double y0, mpfr_prec_t prec) {
  auto e = eval_y(s, K, y0, y0, prec, kNoReject);
  if (!e) throw std::domain_error("curve_point_y: evaluation failed");
  return CurvePoint{e->t0, e->absval};
}

CurvePoint curve_point_sigma(int s, int K, double sigma0, mpfr_prec_t prec) {
  if (sigma0 <= 0)
    throw std::domain_error("curve_point_sigma: sigma0 > 0 required");
  auto e = eval_sigma(s, K, sigma0, sigma0, prec, kNoReject);
  if (!e) throw std::domain_error("curve_point_sigma: evaluation failed");
  return CurvePoint{e->t0, e->absval};
}

CurvePoint curve_panel_x(int s, int K, double lo, double hi,
                         mpfr_prec_t prec) {
  auto e = eval_x(s, K, lo, hi, prec, kNoReject);
  if (!e) throw std::domain_error("curve_panel_x: evaluation failed");
  return CurvePoint{e->t0, e->absval};
}

CurvePoint curve_panel_y(int s, int K, double lo, double hi,
                         mpfr_prec_t prec) {
  auto e = eval_y(s, K, lo, hi, prec, kNoReject);
  if (!e) throw std::domain_error("curve_panel_y: evaluation failed");
  return CurvePoint{e->t0, e->absval};
}

CurvePoint curve_panel_sigma(int s, int K, double lo, double hi,
                             mpfr_prec_t prec) {
  if (lo <= 0)
    throw std::domain_error("curve_panel_sigma: lo > 0 required");
  auto e = eval_sigma(s, K, lo, hi, prec, kNoReject);
  if (!e) throw std::domain_error("curve_panel_sigma: evaluation failed");
  return CurvePoint{e->t0, e->absval};
}

CurveBound d_r_bound(int r, mpfr_prec_t prec) {
  if (r < 1) throw std::invalid_argument("d_r_bound: r >= 1 required");
  const int K = 2 * r + 4;
  const Chart charts[3] = {
      {'y', 0.0, 0.5, eval_y},
      {'x', 0.001, 0.85, eval_x},
      {'g', 0.0, 0.18, eval_sigma},
  };

  // The three chart images must chain up in t so their union covers the
  // whole curve: y-chart [0, t_y(0.5)], x-chart [t_x(0.85), t_x(0.001)],
  // sigma-chart [1/0.18, inf].
  {
    Ball ty = curve_point_y(0, 0, 0.5, prec).t;
    Ball tx_hi = curve_point_x(0, 0, 0.85, prec).t;
    Ball tx_lo = curve_point_x(0, 0, 0.001, prec).t;
    Ball t_sigma = Ball::from_q(mpq_class(100, 18), prec);
    if (!Ball::gt(ty, tx_hi) || !Ball::gt(tx_lo, t_sigma))
      throw std::logic_error("d_r_bound: chart overlap check failed");
  }

  const double tol = 0.004;
  const long budget = 1L << 20;
  // Wrapping-error bounding, not final precision, dominates here; a shorter
  // working precision keeps the same certified result and runs faster.
  const mpfr_prec_t bb_prec = std::min<mpfr_prec_t>(prec, 128);
  long evals = 0;
  double lb = 0.0;  // certified lower bound for max_s sup |chi^(K)|
  double ub = 0.0;
  bool budget_hit = false;

  // Seed the lower bound with a point scan before any pruning.
  for (int s = 0; s <= r + 1; ++s) {
    for (const Chart& ch : charts) {
      const int seeds = 33;
      for (int i = 0; i <= seeds; ++i) {
        double p = ch.lo + (ch.hi - ch.lo) * i / seeds;
        if (ch.id == 'g' && p <= 0) continue;
        auto e = ch.eval(s, K, p, p, bb_prec, kNoReject);
        ++evals;
        if (e) lb = std::max(lb, e->absval.lower_d());
      }
    }
  }

  struct Seg {
    double lo, hi;
  };
  for (int s = 0; s <= r + 1; ++s) {
    for (const Chart& ch : charts) {
      std::vector<Seg> stack{{ch.lo, ch.hi}};
      const double wmin = (ch.hi - ch.lo) * 0x1p-26;
      while (!stack.empty()) {
        Seg seg = stack.back();
        stack.pop_back();
        if (evals >= budget) budget_hit = true;
        bool final_eval = (seg.hi - seg.lo) <= wmin || budget_hit;
        // While subdivision remains possible the evaluation may stop early
        // once the panel provably needs refinement; a final evaluation must
        // produce a complete sup bound.
        double thresh = final_eval ? kNoReject : lb * (1 + tol);
        auto e = ch.eval(s, K, seg.lo, seg.hi, bb_prec, thresh);
        ++evals;
        // A panel's absval lower bound (the midpoint value for the Taylor
        // charts) is a certified lower bound for the global sup.
        if (e) lb = std::max(lb, e->absval.lower_d());
        if (e && e->bounded && e->absval.upper_d() <= lb * (1 + tol)) {
          ub = std::max(ub, e->absval.upper_d());
          continue;
        }
        if (final_eval) {
          if (!e)
            throw std::runtime_error(
                "d_r_bound: domain certification failed at minimal width");
          ub = std::max(ub, e->absval.upper_d());
          continue;
        }
        double mid = 0.5 * (seg.lo + seg.hi);
        stack.push_back({seg.lo, mid});
        stack.push_back({mid, seg.hi});
      }
    }
  }

  CurveBound out;
  out.value = Ball::hull_d(lb, ub, prec)
                  .mul_q(mpq_class(1) / mpq_class(factorial(K)));
  out.budget_hit = budget_hit;
  out.panel_evals = evals;
  return out;
}

}  // namespace plancert
