#include "lefschetz/primes.hpp"

#include <stdexcept>

namespace lefschetz {

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (long long d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<long long> primes_below(long long bound) {
  std::vector<long long> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound), false);
  for (long long i = 2; i < bound; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long long j = i * i; j < bound; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

std::vector<PrimePower> prime_powers_in(long long lo, long long hi) {
  if (lo < 0) throw std::invalid_argument("prime_powers_in: bounds must be nonnegative");
  std::vector<PrimePower> out;
  if (hi < lo) return out;
  for (long long p : primes_below(hi + 1)) {
    long long value = p;
    int n = 1;
    while (value <= hi) {
      if (value >= lo) out.push_back({p, n, value});
      if (value > hi / p) break;
      value *= p;
      ++n;
    }
  }
  return out;
}

}  // namespace lefschetz
