#pragma once

#include <vector>

namespace lefschetz {

bool is_prime(long long n);

// Primes strictly below bound, ascending.
std::vector<long long> primes_below(long long bound);

struct PrimePower {
  long long p = 0;
  int n = 0;
  long long value = 0;  // p^n
  bool operator==(const PrimePower&) const = default;
};

// All prime powers p^n (n >= 1) with lo <= p^n <= hi, sorted by (p, n).
std::vector<PrimePower> prime_powers_in(long long lo, long long hi);

}  // namespace lefschetz
