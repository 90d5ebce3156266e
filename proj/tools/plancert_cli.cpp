// Command-line surface: exact values, certified estimates, table
// reproduction, certification runs, Jensen/Hermite reports, contour oracle.
//
// Exit codes: 0 success/certified; 1 ran but not certified (refuted,
// inconclusive, failed residual); 2 usage or domain errors.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plancert/asymptotic.hpp"
#include "plancert/ball.hpp"
#include "plancert/certify.hpp"
#include "plancert/constants.hpp"
#include "plancert/contour.hpp"
#include "plancert/exact.hpp"
#include "plancert/poly.hpp"

namespace {

using namespace plancert;

struct Config {
  long precision = 192;
  std::string cache_path;
  std::string format = "text";
  int r = 2;
  bool tabulated = false;
  bool records() const { return format == "records"; }
};

std::string fmt(const mpfr_t x, int digits) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", digits, x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string fmt_mid(const Ball& b, int digits = 30) {
  return fmt(b.mid(), digits);
}

std::string fmt_rad(const Ball& b) { return fmt(b.rad(), 2); }

std::string fmt_lower(const Ball& b, int digits = 30) {
  mpfr_t t;
  mpfr_init2(t, b.prec());
  b.lower(t);
  std::string out = fmt(t, digits);
  mpfr_clear(t);
  return out;
}

std::string fmt_upper(const Ball& b, int digits = 30) {
  mpfr_t t;
  mpfr_init2(t, b.prec());
  b.upper(t);
  std::string out = fmt(t, digits);
  mpfr_clear(t);
  return out;
}

// zero +/- upper(b): widens an enclosure by a certified error bar.
Ball pm_upper(const Ball& b) {
  mpfr_t u, nu;
  mpfr_init2(u, b.prec());
  mpfr_init2(nu, b.prec());
  b.upper(u);
  mpfr_neg(nu, u, MPFR_RNDD);
  Ball out = Ball::from_endpoints(nu, u, b.prec());
  mpfr_clear(u);
  mpfr_clear(nu);
  return out;
}

CurveConstantMode curve_mode(const Config& cfg) {
  return cfg.tabulated ? CurveConstantMode::kTabulated
                       : CurveConstantMode::kCertified;
}

PlCache open_cache(const Config& cfg) {
  if (!cfg.cache_path.empty() && std::filesystem::exists(cfg.cache_path))
    return PlCache::load(cfg.cache_path);
  return PlCache();
}

void close_cache(const Config& cfg, const PlCache& cache) {
  if (!cfg.cache_path.empty()) cache.save(cfg.cache_path);
}

int cmd_exact(const Config& cfg, long n, long from, long to) {
  if (n < 0 && (from < 0 || to < 0)) {
    std::cerr << "exact: give n or both --from and --to\n";
    return 2;
  }
  if (n >= 0) from = to = n;
  if (to < from) {
    std::cerr << "exact: --to must be >= --from\n";
    return 2;
  }
  PlCache cache = open_cache(cfg);
  cache.extend(to);
  for (long k = from; k <= to; ++k) {
    if (cfg.records())
      std::cout << "n=" << k << " pl=" << cache.at(k).get_str() << "\n";
    else
      std::cout << k << '\t' << cache.at(k).get_str() << "\n";
  }
  close_cache(cfg, cache);
  return 0;
}

int cmd_estimate(const Config& cfg, long n, bool ledger) {
  const ConstantSet& cs = constants(cfg.r, cfg.precision, curve_mode(cfg));
  bool has_cf = (cfg.r == 1 || cfg.r == 2);
  long floor = has_cf ? ((cfg.r == 1) ? 105 : 87) : cs.validity_floor();
  if (n < floor) {
    std::cerr << "estimate: n >= " << floor << " required for r=" << cfg.r
              << " (validity floor)\n";
    return 2;
  }
  Enclosure enc = estimate(n, cs);
  Ball widened = enc.main + pm_upper(enc.major_radius) +
                 pm_upper(enc.minor_radius);

  if (cfg.records()) {
    std::cout << "n=" << n << " r=" << cfg.r << " N=" << fmt_mid(enc.N_n)
              << " main=" << fmt_mid(enc.main)
              << " main_rad=" << fmt_rad(enc.main)
              << " major=" << fmt_upper(enc.major_radius, 8)
              << " minor=" << fmt_upper(enc.minor_radius, 8)
              << " lower=" << fmt_lower(widened)
              << " upper=" << fmt_upper(widened)
              << " valid=" << (enc.valid ? 1 : 0);
    if (ledger)
      std::cout << " X=" << fmt_upper(enc.ledger.X_r, 8)
                << " Y=" << fmt_upper(enc.ledger.Y_r, 8)
                << " Z=" << fmt_mid(enc.ledger.Z_r, 8)
                << " Ehat=" << fmt_upper(enc.ledger.E_hat, 8);
    if (has_cf) {
      ClosedForm cf = closed_form(n, cs);
      std::cout << " cf=" << fmt_mid(cf.value)
                << " cf_rad=" << fmt_rad(cf.value)
                << " env=" << fmt_upper(cf.envelope, 8);
    }
    std::cout << "\n";
  } else {
    std::cout << "n = " << n << "\n";
    std::cout << "r = " << cfg.r << "\n";
    std::cout << "N_n = " << enc.N_n.str(30) << "\n";
    std::cout << "main = " << enc.main.str(30) << "\n";
    std::cout << "major_radius <= " << fmt_upper(enc.major_radius, 8) << "\n";
    std::cout << "minor_radius <= " << fmt_upper(enc.minor_radius, 8) << "\n";
    std::cout << "lower = " << fmt_lower(widened) << "\n";
    std::cout << "upper = " << fmt_upper(widened) << "\n";
    std::cout << "valid = " << (enc.valid ? "true" : "false") << "\n";
    if (ledger) {
      std::cout << "X_r <= " << fmt_upper(enc.ledger.X_r, 8) << "\n";
      std::cout << "Y_r <= " << fmt_upper(enc.ledger.Y_r, 8) << "\n";
      std::cout << "Z_r = " << enc.ledger.Z_r.str(8) << "\n";
      std::cout << "E_hat <= " << fmt_upper(enc.ledger.E_hat, 8) << "\n";
    }
    if (has_cf) {
      ClosedForm cf = closed_form(n, cs);
      std::cout << "closed_form = " << cf.value.str(30) << "\n";
      std::cout << "envelope <= " << fmt_upper(cf.envelope, 8) << "\n";
    }
  }
  return 0;
}

int cmd_tables(const Config& cfg, int which) {
  PlCache cache = open_cache(cfg);
  if (which == 2) {
    const ConstantSet& cs =
        constants(2, cfg.precision, CurveConstantMode::kNone);
    ClosedFormEval cfe(cs);
    for (long n : {100L, 200L, 500L, 1000L}) {
      ClosedForm cf = cfe(n);
      Ball lower = cf.value - cf.envelope;
      Ball upper = cf.value + cf.envelope;
      cache.extend(n);
      bool contains = Ball::lt(lower, Ball::from_z(cache.at(n))) &&
                      Ball::lt(Ball::from_z(cache.at(n)), upper);
      if (cfg.records())
        std::cout << "table=2 n=" << n << " lower=" << fmt_mid(lower, 10)
                  << " pl=" << cache.at(n).get_str()
                  << " upper=" << fmt_mid(upper, 10)
                  << " contains=" << (contains ? 1 : 0) << "\n";
      else
        std::cout << n << '\t' << fmt_mid(lower, 10) << '\t'
                  << cache.at(n).get_str() << '\t' << fmt_mid(upper, 10)
                  << '\t' << (contains ? "contains" : "VIOLATION") << "\n";
    }
  } else {
    const ConstantSet& cs =
        constants(1, cfg.precision, CurveConstantMode::kNone);
    ClosedFormEval cfe(cs);
    for (long n : {100L, 200L, 500L}) {
      cache.extend(n);
      Ball value = cfe.value_at(n);
      Ball N = n_scale(n, cs);
      Ball rescale = (-(cs.A * N.pow_si(2) * 3)).exp() *
                     Ball::from_si(n, cs.precision).pow_q(mpq_class(25, 36));
      Ball E = (Ball::from_z(cache.at(n), cs.precision) - value) * rescale;
      Ball bound = Ball::from_si(n, cs.precision)
                       .pow_q(mpq_class(-5, 3))
                       .mul_q(527);
      bool ok = Ball::lt(E.abs(), bound);
      if (cfg.records())
        std::cout << "table=1 n=" << n << " E=" << fmt_mid(E, 6)
                  << " bound=" << fmt_mid(bound, 6) << " ok=" << (ok ? 1 : 0)
                  << "\n";
      else
        std::cout << n << '\t' << fmt_mid(E, 6) << '\t' << fmt_mid(bound, 6)
                  << '\t' << (ok ? "ok" : "VIOLATION") << "\n";
    }
  }
  close_cache(cfg, cache);
  return 0;
}

int cmd_certify(const Config& cfg, const std::string& claim, int d, long from,
                long to, long shift, bool from_set, bool to_set) {
  PlCache cache = open_cache(cfg);
  CertReport rep;
  if (claim == "logconcave") {
    if (cfg.r != 1 && cfg.r != 2) {
      std::cerr << "certify logconcave: needs --r 1 or 2 (closed form)\n";
      return 2;
    }
    const ConstantSet& cs =
        constants(cfg.r, cfg.precision, CurveConstantMode::kNone);
    rep = certify_logconcavity(cs, cache, from_set ? from : 12,
                               to_set ? to : -1);
  } else {  // turan
    rep = turan_check_range(d, from_set ? from : 1, to_set ? to : 10000,
                            cache, shift);
  }
  std::cout << (cfg.records() ? rep.to_records() : rep.to_text());
  close_cache(cfg, cache);
  return rep.exit_code();
}

int cmd_jensen(const Config& cfg, int d, long n) {
  PlCache cache = open_cache(cfg);
  IntPolynomial p = jensen_poly(d, n, cache);
  bool hyp = p.is_hyperbolic();
  if (cfg.records()) {
    std::cout << "d=" << d << " n=" << n << " coeffs=";
    for (long i = 0; i <= p.degree(); ++i)
      std::cout << (i ? "," : "") << p.coeff(i).get_str();
    std::cout << " hyperbolic=" << (hyp ? 1 : 0) << "\n";
  } else {
    std::cout << "d = " << d << "\n";
    std::cout << "n = " << n << "\n";
    std::cout << "coeffs =";
    for (long i = 0; i <= p.degree(); ++i)
      std::cout << ' ' << p.coeff(i).get_str();
    std::cout << "\n";
    std::cout << "hyperbolic = " << (hyp ? "true" : "false") << "\n";
  }
  close_cache(cfg, cache);
  return 0;
}

int cmd_hermite(const Config& cfg, int d, long renorm_n, bool renorm_set) {
  IntPolynomial h = IntPolynomial::hermite(d);
  auto print_coeffs = [&](char sep) {
    for (long i = 0; i <= h.degree(); ++i)
      std::cout << (i ? std::string(1, sep) : std::string())
                << h.coeff(i).get_str();
  };
  if (cfg.records()) {
    std::cout << "d=" << d << " coeffs=";
    print_coeffs(',');
  } else {
    std::cout << "d = " << d << "\n";
    std::cout << "coeffs = ";
    print_coeffs(' ');
  }
  std::cout << "\n";
  if (renorm_set) {
    PlCache cache = open_cache(cfg);
    RenormData rd = hermite_renormalize(d, renorm_n, cache);
    char buf[64];
    auto g = [&](double v) {
      std::snprintf(buf, sizeof buf, "%.12g", v);
      return std::string(buf);
    };
    if (cfg.records()) {
      std::cout << "d=" << d << " n=" << renorm_n << " A=" << g(rd.A_n)
                << " delta=" << g(rd.delta_n) << " rcoeffs=";
      for (std::size_t i = 0; i < rd.coeffs.size(); ++i)
        std::cout << (i ? "," : "") << g(rd.coeffs[i]);
      std::cout << " distance=" << g(rd.hermite_distance) << "\n";
    } else {
      std::cout << "n = " << renorm_n << "\n";
      std::cout << "A_n = " << g(rd.A_n) << "\n";
      std::cout << "delta_n = " << g(rd.delta_n) << "\n";
      std::cout << "renormalized =";
      for (double c : rd.coeffs) std::cout << ' ' << g(c);
      std::cout << "\n";
      std::cout << "hermite_distance = " << g(rd.hermite_distance) << "\n";
    }
    close_cache(cfg, cache);
  }
  return 0;
}

int cmd_oracle(const Config& cfg, long n) {
  if (n < 1 || n > 200) {
    std::cerr << "oracle: n must be in [1, 200] (quadrature budget gate)\n";
    return 2;
  }
  PlCache cache = open_cache(cfg);
  cache.extend(n);
  OracleResult res = contour_oracle(n, cache);
  bool residual_ok = res.residual <= 1e-6;
  bool minor_ok = std::abs(res.E_min) <= res.minor_bound;
  char buf[64];
  auto g = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::string(buf);
  };
  if (cfg.records()) {
    std::cout << "n=" << n << " J=" << g(res.J) << " E_min=" << g(res.E_min)
              << " pl=" << cache.at(n).get_str()
              << " residual=" << g(res.residual)
              << " minor_bound=" << g(res.minor_bound)
              << " residual_ok=" << (residual_ok ? 1 : 0)
              << " minor_ok=" << (minor_ok ? 1 : 0) << "\n";
  } else {
    std::cout << "n = " << n << "\n";
    std::cout << "J = " << g(res.J) << "\n";
    std::cout << "E_min = " << g(res.E_min) << "\n";
    std::cout << "PL = " << cache.at(n).get_str() << "\n";
    std::cout << "residual = " << g(res.residual) << "\n";
    std::cout << "minor_bound = " << g(res.minor_bound) << "\n";
    std::cout << "residual_ok = " << (residual_ok ? "true" : "false") << "\n";
    std::cout << "minor_ok = " << (minor_ok ? "true" : "false") << "\n";
  }
  close_cache(cfg, cache);
  return (residual_ok && minor_ok) ? 0 : 1;
}

int cmd_constants(const Config& cfg) {
  const ConstantSet& cs = constants(cfg.r, cfg.precision, curve_mode(cfg));
  if (!cfg.records()) {
    std::cout << cs.report();
    return 0;
  }
  std::cout << "r=" << cs.r << " precision=" << cs.precision
            << " A=" << fmt_mid(cs.A) << " A_rad=" << fmt_rad(cs.A)
            << " c=" << fmt_mid(cs.c) << " c_rad=" << fmt_rad(cs.c);
  for (int s = 1; s <= cs.r + 2; ++s)
    std::cout << " alpha_" << s << "=" << cs.alpha[s].get_str();
  for (int s = 0; s <= cs.r + 1; ++s)
    std::cout << " beta_" << s << "=" << cs.beta[s].get_str();
  for (int s = 0; s <= cs.r + 1; ++s)
    for (int m = 0; m <= cs.r + 1; ++m)
      std::cout << " b_rat_" << s << "_" << m << "="
                << cs.b_rat[s][m].get_str();
  std::cout << " C_r=" << fmt_mid(cs.C_r) << " C_r_rad=" << fmt_rad(cs.C_r)
            << " D_r=" << fmt_mid(cs.D_r) << " D_r_rad=" << fmt_rad(cs.D_r)
            << " n_r=" << cs.n_r << " ell_r=" << cs.ell_r
            << " d_r_certified=" << (cs.d_r_certified ? 1 : 0)
            << " tabulated="
            << (cs.curve_mode == CurveConstantMode::kTabulated ? 1 : 0)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "plancert: certified plane-partition counting (exact values, effective "
      "asymptotics with rigorous error bounds, log-concavity / Turan "
      "certification, contour-integration cross-checks)"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--precision", cfg.precision, "working precision in bits")
      ->check(CLI::Range(32L, 1L << 20));
  app.add_option("--cache", cfg.cache_path,
                 "PL value cache file (PLCACHE v1), loaded and saved");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "records"}));
  app.add_option("--r", cfg.r, "series truncation order")
      ->check(CLI::Range(1, 8));
  app.add_flag("--tabulated-constants", cfg.tabulated,
               "use the built-in remainder-constant table (r=2) instead of "
               "certifying C_r and D_r here");

  auto* sc_exact = app.add_subcommand("exact", "exact PL(n)");
  long ex_n = -1, ex_from = -1, ex_to = -1;
  sc_exact->add_option("n", ex_n, "index");
  sc_exact->add_option("--from", ex_from, "range start");
  sc_exact->add_option("--to", ex_to, "range end");

  auto* sc_est = app.add_subcommand(
      "estimate", "certified asymptotic enclosure of PL(n)");
  long est_n = 0;
  bool est_ledger = false;
  sc_est->add_option("n", est_n, "index")->required();
  sc_est->add_flag("--ledger", est_ledger, "print X/Y/Z error components");

  auto* sc_tab = app.add_subcommand("tables", "reproduce the numeric tables");
  int tab_which = 2;
  sc_tab->add_option("--which", tab_which, "table number")
      ->required()
      ->check(CLI::IsMember({1, 2}));

  auto* sc_cert = app.add_subcommand(
      "certify", "certify log-concavity or a degree-d Turan property");
  std::string cert_claim;
  int cert_d = 3;
  long cert_from = 0, cert_to = 0, cert_shift = -1;
  sc_cert->add_option("claim", cert_claim, "logconcave | turan")
      ->required()
      ->check(CLI::IsMember({"logconcave", "turan"}));
  sc_cert->add_option("--d", cert_d, "Jensen degree (turan)")
      ->check(CLI::Range(1, 64));
  auto* opt_from = sc_cert->add_option("--from", cert_from, "range start");
  auto* opt_to = sc_cert->add_option(
      "--to", cert_to, "range end (logconcave: forces exact-only scan)");
  sc_cert->add_option("--shift", cert_shift,
                      "index shift: property at n checks J^{d,n+shift}");

  auto* sc_jen = app.add_subcommand("jensen", "Jensen polynomial report");
  int jen_d = 0;
  long jen_n = 0;
  sc_jen->add_option("--d", jen_d, "degree")->required();
  sc_jen->add_option("--n", jen_n, "shift")->required();

  auto* sc_her = app.add_subcommand("hermite", "Hermite polynomial report");
  int her_d = 0;
  long her_n = 0;
  sc_her->add_option("--d", her_d, "degree")->required();
  auto* opt_renorm = sc_her->add_option(
      "--renorm", her_n, "also renormalize J^{d,n} at this n");

  auto* sc_ora = app.add_subcommand(
      "oracle", "contour-integration decomposition check (floating point)");
  long ora_n = 0;
  sc_ora->add_option("n", ora_n, "index (<= 200)")->required();

  app.add_subcommand("constants", "dump the certified constant set");

  // Global options (--precision, --format, ...) may appear after the
  // subcommand name as well as before it.
  for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sc_exact))
      return cmd_exact(cfg, ex_n, ex_from, ex_to);
    if (app.got_subcommand(sc_est)) return cmd_estimate(cfg, est_n, est_ledger);
    if (app.got_subcommand(sc_tab)) return cmd_tables(cfg, tab_which);
    if (app.got_subcommand(sc_cert))
      return cmd_certify(cfg, cert_claim, cert_d, cert_from, cert_to,
                         cert_shift, opt_from->count() > 0,
                         opt_to->count() > 0);
    if (app.got_subcommand(sc_jen)) return cmd_jensen(cfg, jen_d, jen_n);
    if (app.got_subcommand(sc_her))
      return cmd_hermite(cfg, her_d, her_n, opt_renorm->count() > 0);
    if (app.got_subcommand(sc_ora)) return cmd_oracle(cfg, ora_n);
    return cmd_constants(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
