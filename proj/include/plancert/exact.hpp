#ifndef PLANCERT_EXACT_HPP
#define PLANCERT_EXACT_HPP

// Exact values of the plane-partition counting function PL(n), generating
// function prod_{k>=1} (1-x^k)^(-k), via the divisor-sum recurrence
//
//   n PL(n) = sum_{k=1}^{n} sigma_2(k) PL(n-k),   PL(0) = 1,
//
// with sigma_2 sieved in uint64 (sigma_2(k) < 1.645 k^2 keeps that exact for
// every reachable index), plus a persistent line-based text cache.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace plancert {

// sigma_2(k) for k = 1..n at indices 1..n (index 0 unused).
std::vector<std::uint64_t> sigma2_table(long n);

// Cache file format ("PLCACHE v1"):
//   line 1:       PLCACHE v1
//   line k+2:     <k><TAB><PL(k) in decimal>
// indices contiguous from 0, 7-bit text, no blank lines.
class PlCache {
 public:
  PlCache();

  void extend(long n);
  const mpz_class& at(long n);
  long limit() const { return static_cast<long>(pl_.size()) - 1; }

  void save(const std::string& path) const;
  // Throws std::runtime_error naming the first offending line on malformed
  // input; verifies the recurrence at the top index to catch corruption.
  static PlCache load(const std::string& path);

 private:
  std::vector<mpz_class> pl_;
};

}  // namespace plancert

#endif
