#include "plancert/poly.hpp"

#include <stdexcept>
#include <utility>

#include "plancert/rationals.hpp"

namespace plancert {

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
    : c_(std::move(coeffs)) {
  trim();
}

const mpz_class& IntPolynomial::coeff(long i) const {
  static const mpz_class zero(0);
  if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
  return c_[i];
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return IntPolynomial();
  std::vector<mpz_class> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    out[i - 1] = c_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return IntPolynomial();
  mpz_class g = 0;
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  std::vector<mpz_class> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

namespace {

// Pseudo-remainder scaled so the result is a *positive* multiple of the true
// remainder of a by b (sign matters for Sturm chains).
IntPolynomial prem_signfixed(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = a;
  const mpz_class& lcb = b.lc();
  long k = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    long shift = r.degree() - b.degree();
    mpz_class lr = r.lc();
    std::vector<mpz_class> next(
        static_cast<std::size_t>(std::max(r.degree(), b.degree() + shift)) +
        1);
    for (long i = 0; i <= r.degree(); ++i) next[i] = r.coeff(i) * lcb;
    for (long i = 0; i <= b.degree(); ++i) next[i + shift] -= lr * b.coeff(i);
    r = IntPolynomial(std::move(next));
    ++k;
  }
  if (mpz_sgn(lcb.get_mpz_t()) < 0 && (k % 2 == 1)) r = -r;
  return r;
}

// gcd of primitive parts, primitive with positive leading coefficient.
IntPolynomial gcd_primitive(IntPolynomial a, IntPolynomial b) {
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.is_zero()) std::swap(a, b);
  while (!b.is_zero()) {
    if (a.degree() < b.degree()) std::swap(a, b);
    IntPolynomial r = prem_signfixed(a, b);
    a = std::move(b);
    b = r.is_zero() ? IntPolynomial() : r.primitive_part();
  }
  if (!a.is_zero() && mpz_sgn(a.lc().get_mpz_t()) < 0) a = -a;
  return a;
}

// Exact quotient a / b for primitive b dividing a.
IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
  if (a.is_zero()) return IntPolynomial();
  long dq = a.degree() - b.degree();
  if (dq < 0) throw std::logic_error("exact_div: degree mismatch");
  std::vector<mpz_class> rem(a.coeffs());
  std::vector<mpz_class> q(static_cast<std::size_t>(dq) + 1);
  for (long i = dq; i >= 0; --i) {
    mpz_class& lead = rem[i + b.degree()];
    if (!mpz_divisible_p(lead.get_mpz_t(), b.lc().get_mpz_t()))
      throw std::logic_error("exact_div: not divisible");
    mpz_divexact(q[i].get_mpz_t(), lead.get_mpz_t(), b.lc().get_mpz_t());
    for (long j = 0; j <= b.degree(); ++j) rem[i + j] -= q[i] * b.coeff(j);
  }
  for (const auto& x : rem)
    if (x != 0) throw std::logic_error("exact_div: nonzero remainder");
  return IntPolynomial(std::move(q));
}

int sign_at_infinity(const IntPolynomial& p, bool plus) {
  int s = mpz_sgn(p.lc().get_mpz_t());
  if (!plus && p.degree() % 2 == 1) s = -s;
  return s;
}

long sturm_distinct_roots_squarefree(const IntPolynomial& q) {
  if (q.degree() <= 0) return 0;
  std::vector<IntPolynomial> chain;
  chain.push_back(q);
  chain.push_back(q.derivative().primitive_part());
  while (!chain.back().is_zero()) {
    IntPolynomial r = prem_signfixed(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back((-r).primitive_part());
  }
  auto variations = [&](bool plus) {
    long v = 0;
    int prev = 0;
    for (const auto& p : chain) {
      if (p.is_zero()) continue;
      int s = sign_at_infinity(p, plus);
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

}  // namespace

IntPolynomial IntPolynomial::squarefree_part() const {
  if (is_zero())
    throw std::invalid_argument("squarefree_part: zero polynomial");
  if (degree() <= 1) return primitive_part();
  IntPolynomial g = gcd_primitive(*this, derivative());
  return exact_div(primitive_part(), g);
}

long IntPolynomial::distinct_real_roots() const {
  if (is_zero())
    throw std::invalid_argument("distinct_real_roots: zero polynomial");
  return sturm_distinct_roots_squarefree(squarefree_part());
}

bool IntPolynomial::is_hyperbolic() const {
  if (is_zero()) throw std::invalid_argument("is_hyperbolic: zero polynomial");
  if (degree() <= 1) return true;
  IntPolynomial q = squarefree_part();
  return sturm_distinct_roots_squarefree(q) == q.degree();
}

IntPolynomial IntPolynomial::hermite(int d) {
  if (d < 0) throw std::invalid_argument("hermite: d >= 0 required");
  IntPolynomial prev(std::vector<mpz_class>{1});
  if (d == 0) return prev;
  IntPolynomial cur(std::vector<mpz_class>{0, 1});
  for (int k = 1; k < d; ++k) {
    // next = X*cur - 2k*prev
    std::vector<mpz_class> next(static_cast<std::size_t>(k) + 2);
    for (long i = 0; i <= cur.degree(); ++i) next[i + 1] = cur.coeff(i);
    for (long i = 0; i <= prev.degree(); ++i) next[i] -= 2 * k * prev.coeff(i);
    prev = std::move(cur);
    cur = IntPolynomial(std::move(next));
  }
  return cur;
}

IntPolynomial jensen_poly(int d, long n, PlCache& cache) {
  if (d < 0 || n < 0)
    throw std::invalid_argument("jensen_poly: d, n >= 0 required");
  cache.extend(n + d);
  std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) c[j] = binomial(d, j) * cache.at(n + j);
  return IntPolynomial(std::move(c));
}

}  // namespace plancert
