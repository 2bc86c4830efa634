#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace nichols {

using Int = mpz_class;
using Rat = mpq_class;

inline long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long lcm_long(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_long(a, b) * b;
}

// Positive divisors of k > 0, ascending.
inline std::vector<long> divisors(long k) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= k; ++d) {
    if (k % d == 0) {
      small.push_back(d);
      if (d != k / d) large.push_back(k / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Deterministic RNG for replayable randomized checks.  Draws use the raw
// engine output so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

  // seed bytes spell "N1CH"
  static constexpr std::uint64_t kDefaultSeed = 0x4E314348ull;

  // uniform in [0, bound)
  long below(long bound) { return static_cast<long>(eng_() % static_cast<std::uint64_t>(bound)); }

  // uniform in [lo, hi]
  long between(long lo, long hi) { return lo + below(hi - lo + 1); }

  // small nonzero rational, numerator in ±[1,max_num], denominator in [1,max_den]
  Rat nonzero_rational(long max_num = 4, long max_den = 3) {
    long num = between(1, max_num);
    if (below(2) == 0) num = -num;
    long den = between(1, max_den);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace nichols
