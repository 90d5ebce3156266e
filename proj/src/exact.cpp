#include "plancert/exact.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plancert {

std::vector<std::uint64_t> sigma2_table(long n) {
  if (n < 0) throw std::invalid_argument("sigma2_table: n >= 0 required");
  if (n > 3000000000L)
    throw std::invalid_argument("sigma2_table: uint64 range exceeded");
  std::vector<std::uint64_t> s(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t d = 1; d <= static_cast<std::uint64_t>(n); ++d) {
    std::uint64_t dd = d * d;
    for (std::uint64_t m = d; m <= static_cast<std::uint64_t>(n); m += d)
      s[m] += dd;
  }
  return s;
}

PlCache::PlCache() { pl_.emplace_back(1); }

void PlCache::extend(long n) {
  if (n <= limit()) return;
  std::vector<std::uint64_t> sigma2 = sigma2_table(n);
  pl_.reserve(static_cast<std::size_t>(n) + 1);
  mpz_class acc;
  for (long m = limit() + 1; m <= n; ++m) {
    acc = 0;
    for (long k = 1; k <= m; ++k)
      mpz_addmul_ui(acc.get_mpz_t(), pl_[m - k].get_mpz_t(), sigma2[k]);
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(m)))
      throw std::logic_error("PlCache: recurrence sum not divisible by n");
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(),
                    static_cast<unsigned long>(m));
    pl_.push_back(acc);
  }
}

const mpz_class& PlCache::at(long n) {
  if (n < 0) throw std::invalid_argument("PlCache::at: n >= 0 required");
  extend(n);
  return pl_[n];
}

void PlCache::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("PlCache::save: cannot open " + path);
  out << "PLCACHE v1\n";
  for (std::size_t k = 0; k < pl_.size(); ++k)
    out << k << '\t' << pl_[k].get_str() << '\n';
  out.flush();
  if (!out) throw std::runtime_error("PlCache::save: write failed: " + path);
}

namespace {

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
  std::ostringstream os;
  os << "PlCache::load: line " << lineno << ": " << what;
  throw std::runtime_error(os.str());
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

PlCache PlCache::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("PlCache::load: cannot open " + path);

  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) bad_line(1, "missing header");
  if (line != "PLCACHE v1") bad_line(1, "bad header: \"" + line + "\"");

  std::vector<mpz_class> values;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) bad_line(lineno, "blank line");
    auto tab = line.find('\t');
    if (tab == std::string::npos) bad_line(lineno, "missing tab separator");
    std::string idx = line.substr(0, tab);
    std::string val = line.substr(tab + 1);
    if (!all_digits(idx)) bad_line(lineno, "bad index field");
    if (!all_digits(val)) bad_line(lineno, "bad value field");
    unsigned long k = std::stoul(idx);
    if (k != values.size()) {
      std::ostringstream os;
      os << "expected index " << values.size() << ", got " << k;
      bad_line(lineno, os.str());
    }
    values.emplace_back(val, 10);
  }
  if (values.empty()) bad_line(2, "no records");
  if (values[0] != 1) bad_line(2, "PL(0) must be 1");

  // One-row recurrence check at the top index: the sum touches every cached
  // value, so any single corrupted entry breaks the identity.
  long top = static_cast<long>(values.size()) - 1;
  if (top >= 1) {
    std::vector<std::uint64_t> sigma2 = sigma2_table(top);
    mpz_class acc = 0;
    for (long k = 1; k <= top; ++k)
      mpz_addmul_ui(acc.get_mpz_t(), values[top - k].get_mpz_t(), sigma2[k]);
    mpz_class lhs = values[top] * top;
    if (acc != lhs)
      throw std::runtime_error(
          "PlCache::load: recurrence check failed at top index " +
          std::to_string(top));
  }

  PlCache cache;
  cache.pl_ = std::move(values);
  return cache;
}

}  // namespace plancert
