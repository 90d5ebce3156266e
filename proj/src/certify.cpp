#include "plancert/certify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "plancert/rationals.hpp"

namespace plancert {

bool logconcave_exact(long n, PlCache& cache) {
  if (n < 1) throw std::invalid_argument("logconcave_exact: n >= 1 required");
  cache.extend(n + 1);
  mpz_class lhs = cache.at(n) * cache.at(n);
  mpz_class rhs = cache.at(n - 1) * cache.at(n + 1);
  return lhs >= rhs;
}

Tri logconcave_analytic(long n, const ClosedFormEval& cfe) {
  if (n - 1 < cfe.floor()) return Tri::kUnknown;
  ClosedForm lo = cfe(n - 1), mid = cfe(n), hi = cfe(n + 1);
  Ball lower = mid.value - mid.envelope;
  Ball expr = lower * lower - (lo.value + lo.envelope) * (hi.value + hi.envelope);
  if (lower.is_positive() && expr.is_positive()) return Tri::kYes;
  if (expr.is_negative()) return Tri::kNo;
  return Tri::kUnknown;
}

Tri logconcave_analytic(long n, const ConstantSet& cs) {
  return logconcave_analytic(n, ClosedFormEval(cs));
}

bool CertReport::failed_at(long n) const {
  return std::binary_search(failures.begin(), failures.end(), n);
}

std::string CertReport::to_text() const {
  std::ostringstream os;
  for (long n = from; n <= to; ++n)
    os << n << '\t' << method_at(n) << '\t'
       << (failed_at(n) ? "fail" : "pass") << '\n';
  os << "# claim = " << claim << '\n';
  if (claim == "turan") os << "# d = " << d << '\n';
  os << "# range = [" << from << ", " << to << "]\n";
  os << "# analytic_threshold = ";
  if (analytic_threshold >= 0)
    os << analytic_threshold << '\n';
  else
    os << "none\n";
  os << "# holds_from = ";
  if (holds_from >= 0)
    os << holds_from << '\n';
  else
    os << "none\n";
  os << "# failures =";
  for (std::size_t i = 0; i < failures.size(); ++i)
    os << (i == 0 ? " " : ",") << failures[i];
  os << '\n';
  os << "# status = " << status << '\n';
  return os.str();
}

std::string CertReport::to_records() const {
  std::ostringstream os;
  os << "claim=" << claim;
  if (claim == "turan") os << " d=" << d;
  os << " from=" << from << " to=" << to;
  os << " threshold=";
  if (analytic_threshold >= 0)
    os << analytic_threshold;
  else
    os << "none";
  os << " holds_from=";
  if (holds_from >= 0)
    os << holds_from;
  else
    os << "none";
  os << " failures=";
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) os << ',';
    os << failures[i];
  }
  os << " status=" << status << '\n';
  return os.str();
}

namespace {

long compute_holds_from(const std::vector<long>& failures, long from, long to) {
  if (failures.empty()) return from;
  long h = failures.back() + 1;
  return h <= to ? h : -1;
}

}  // namespace

CertReport certify_logconcavity(const ConstantSet& cs, PlCache& cache,
                                long from, long to) {
  if (from < 1)
    throw std::invalid_argument("certify_logconcavity: from >= 1 required");
  CertReport rep;
  rep.claim = "logconcave";
  rep.from = from;

  if (to >= 0) {
    rep.to = to;
    for (long n = from; n <= to; ++n)
      if (!logconcave_exact(n, cache)) rep.failures.push_back(n);
    rep.holds_from = compute_holds_from(rep.failures, from, to);
    rep.status = rep.failures.empty() ? "certified" : "refuted";
    return rep;
  }

  // Analytic phase. Escalate precision only if a comparison stays
  // inconclusive (it does not at the default 192 bits).
  long n0 = -1;
  mpfr_prec_t p = cs.precision;
  const ConstantSet* active = &cs;
  while (true) {
    ClosedFormEval cfe(*active);
    auto ok = [&](long n) { return logconcave_analytic(n, cfe) == Tri::kYes; };

    long lo = std::max(from, cfe.floor() + 1), hi = lo;
    bool found = false;
    for (; hi <= (1L << 20); hi = hi * 2) {
      if (ok(hi)) {
        found = true;
        break;
      }
      lo = hi + 1;
    }
    if (found) {
      while (lo < hi) {
        long mid = lo + (hi - lo) / 2;
        if (ok(mid))
          hi = mid;
        else
          lo = mid + 1;
      }
      n0 = lo;
      // Margin scan: every n in [n0, 2 n0] must certify; bump past any gap.
      for (long m = n0; m <= 2 * n0; ++m) {
        if (!ok(m)) {
          n0 = m + 1;
          m = n0 - 1;  // restart the window from the new n0
        }
      }
      break;
    }
    if (p >= 4096) {
      rep.to = 1L << 20;
      rep.status = "inconclusive";
      return rep;
    }
    p *= 2;
    active = &constants(cs.r, p, cs.curve_mode);
  }

  rep.analytic_threshold = n0;
  rep.to = 2 * n0;
  for (long n = from; n < n0; ++n)
    if (!logconcave_exact(n, cache)) rep.failures.push_back(n);
  rep.holds_from = compute_holds_from(rep.failures, from, rep.to);
  rep.status = rep.failures.empty() ? "certified" : "refuted";
  return rep;
}

CertReport turan_check_range(int d, long from, long to, PlCache& cache,
                             long shift) {
  if (d < 1) throw std::invalid_argument("turan_check_range: d >= 1 required");
  if (from + shift < 0)
    throw std::invalid_argument("turan_check_range: from + shift >= 0 required");
  if (to < from)
    throw std::invalid_argument("turan_check_range: to >= from required");
  CertReport rep;
  rep.claim = "turan";
  rep.d = d;
  rep.from = from;
  rep.to = to;
  cache.extend(to + shift + d);
  for (long n = from; n <= to; ++n)
    if (!jensen_poly(d, n + shift, cache).is_hyperbolic())
      rep.failures.push_back(n);
  rep.holds_from = compute_holds_from(rep.failures, from, to);
  rep.status = rep.holds_from >= 0 ? "certified" : "refuted";
  return rep;
}

RenormData hermite_renormalize(int d, long n, PlCache& cache,
                               mpfr_prec_t prec) {
  if (d < 1) throw std::invalid_argument("hermite_renormalize: d >= 1");
  if (n < 1) throw std::invalid_argument("hermite_renormalize: n >= 1");
  cache.extend(std::max(n + d, n + 1));

  auto L = [&](long k) { return Ball::from_z(cache.at(k), prec).log(); };
  Ball Ln = L(n), Lp = L(n + 1), Lm = L(n - 1);
  Ball A = (Lp - Lm).mul_q(mpq_class(1, 2));
  Ball delta2 = -((Lp - Ln * 2 + Lm).mul_q(mpq_class(1, 2)));
  if (!delta2.is_positive())
    throw std::domain_error("hermite_renormalize: delta(n)^2 not positive");
  Ball delta = delta2.sqrt();

  std::vector<Ball> rho;
  for (int j = 0; j <= d; ++j) rho.push_back((L(n + j) - Ln - A * j).exp());

  RenormData out;
  out.d = d;
  out.n = n;
  out.A_n = A.mid_d();
  out.delta_n = delta.mid_d();

  IntPolynomial hd = IntPolynomial::hermite(d);
  double dist = 0;
  for (int k = 0; k <= d; ++k) {
    Ball acc = A.zero_like();
    for (int j = k; j <= d; ++j) {
      Ball term = rho[j] * Ball::from_z(binomial(d, j) * binomial(j, k), prec);
      if ((j - k) % 2 == 1) term = -term;
      acc = acc + term;
    }
    Ball ck = acc * delta.pow_si(k - d);
    out.coeffs.push_back(ck.mid_d());
    double gap = std::abs(ck.mid_d() - hd.coeff(k).get_d());
    dist = std::max(dist, gap);
  }
  out.hermite_distance = dist;
  return out;
}

}  // namespace plancert
