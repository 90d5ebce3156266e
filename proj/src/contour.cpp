#include "plancert/contour.hpp"

#include <cmath>
#include <stdexcept>

namespace plancert {

double log_macmahon_tail_bound(double s, long m_terms) {
  double den = 1.0 - std::exp(-s);
  return std::exp(-static_cast<double>(m_terms + 1) * s) / (den * den * den);
}

std::complex<double> log_macmahon(std::complex<double> z) {
  double s = z.real();
  if (s <= 0) throw std::domain_error("log_macmahon: Re z > 0 required");
  long M = static_cast<long>(std::ceil(52.0 / s)) + 8;
  std::complex<double> acc = 0;
  for (long m = M; m >= 1; --m) {  // ascending magnitude for stable summation
    std::complex<double> e = std::exp(-static_cast<double>(m) * z);
    std::complex<double> d = 1.0 - e;
    acc += e / (static_cast<double>(m) * d * d);
  }
  return acc;
}

namespace {

struct Integrand {
  double sigma;
  long n;
  std::complex<double> operator()(double theta) const {
    std::complex<double> z(sigma, -theta);
    return std::exp(log_macmahon(z) + static_cast<double>(n) * z);
  }
};

std::complex<double> simpson(double a, double b, std::complex<double> fa,
                             std::complex<double> fm,
                             std::complex<double> fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

std::complex<double> adapt(const Integrand& f, double a, double b,
                           std::complex<double> fa, std::complex<double> fm,
                           std::complex<double> fb, std::complex<double> whole,
                           double eps, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  std::complex<double> flm = f(lm), frm = f(rm);
  std::complex<double> left = simpson(a, m, fa, flm, fm);
  std::complex<double> right = simpson(m, b, fm, frm, fb);
  std::complex<double> delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
    return left + right + delta / 15.0;
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

std::complex<double> integrate(const Integrand& f, double a, double b,
                               double eps, int panels) {
  std::complex<double> total = 0;
  double w = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    double x0 = a + i * w;
    double x1 = (i + 1 == panels) ? b : a + (i + 1) * w;
    double xm = 0.5 * (x0 + x1);
    std::complex<double> f0 = f(x0), fm = f(xm), f1 = f(x1);
    total += adapt(f, x0, x1, f0, fm, f1, simpson(x0, x1, f0, fm, f1),
                   eps / panels, 28);
  }
  return total;
}

constexpr double kA = 1.2020569031595942854;  // zeta(3)
constexpr double kPi = 3.14159265358979323846;

}  // namespace

OracleResult contour_oracle(long n, PlCache& cache) {
  if (n < 1 || n > 200)
    throw std::invalid_argument("contour_oracle: 1 <= n <= 200 required");
  OracleResult out;
  out.n = n;
  out.N = std::cbrt(static_cast<double>(n) / (2 * kA));
  double sigma = 1.0 / out.N;
  Integrand f{sigma, n};

  double scale = std::abs(f(0.0));
  double eps = scale * 1e-13;
  out.J = (1.0 / kPi) * integrate(f, 0.0, sigma, eps, 16).real();
  int minor_panels = static_cast<int>(std::max(64L, 4 * n));
  out.E_min =
      (1.0 / kPi) * integrate(f, sigma, kPi, eps, minor_panels).real();

  out.pl = mpz_get_d(cache.at(n).get_mpz_t());
  out.residual = std::abs(out.J + out.E_min - out.pl) / out.pl;
  out.minor_bound = std::exp((3 * kA - 0.4) * out.N * out.N);
  return out;
}

}  // namespace plancert
