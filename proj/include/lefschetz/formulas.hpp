#pragma once

#include <gmpxx.h>

#include <map>

#include "lefschetz/exactla.hpp"
#include "lefschetz/hilbert.hpp"

namespace lefschetz {

// Side lengths of a box of plane partitions; all nonnegative.
struct BoxDims {
  long long a = 0, b = 0, c = 0;

  BoxDims(long long a, long long b, long long c);

  BoxDims sorted() const;
  long long side_sum() const noexcept { return a + b + c; }
  bool operator==(const BoxDims&) const = default;
};

using PrimeFactorization = std::map<long long, long long>;  // prime -> exponent

// Binomial coefficient, zero outside 0 <= k <= n.  Requires n >= 0.
mpz_class binomial(long long n, long long k);

mpz_class factorial(long long n);

// Number of plane partitions in an a x b x c box:
//   prod_{i=1}^{a} (b+c+i-1)! (i-1)! / ((b+i-1)! (c+i-1)!).
// Any zero side gives 1 (only the empty partition).
mpz_class macmahon(const BoxDims& box);

// v_p(n!) = sum_{i>=1} floor(n / p^i).
long long legendre_valuation(long long n, long long p);

// v_p of macmahon(box), computed from factorial valuations without
// forming the product.
long long macmahon_valuation(const BoxDims& box, long long p);

// Factorization of macmahon(box).  Every prime factor is below
// a + b + c; prime_bound = 0 means that default.
PrimeFactorization macmahon_factorization(const BoxDims& box, long long prime_bound = 0);

// The n x n matrix (binomial(a+b, a-i+j)) with 1 <= j <= n and i running
// over 1..n+1 skipping i = k.
IntMatrix binomial_matrix_nk(long long a, long long b, int n, int k);

// Its determinant in closed form:
//   prod_{i=1}^{k-1} (n+1-i)(b+i) / (i (n+a-i))
//   * prod_{i=1}^{n} (a+b+i-1)! (i-1)! / ((a-2+i)! (b+i)!).
// Requires a >= 1.
mpz_class det_nk_closed(long long a, long long b, int n, int k);

// Maximal minors of the middle multiplication matrix in the single-peak
// regime, as a closed form.  Requires alpha+beta+gamma odd and
// gamma <= alpha+beta-3; k ranges over 1..m with m = (alpha+beta-gamma+1)/2:
//   H(k) = prod_{i=1}^{k-1} (m-i)((-alpha+beta+gamma-1)/2 + i) / (i (alpha-i))
//          * macmahon((alpha+beta-gamma-1)/2, (alpha-beta+gamma-1)/2, (-alpha+beta+gamma+1)/2).
mpz_class h_of_k(const CIParams& params, int k);

// Equal-exponent specialization of h_of_k: alpha = beta = gamma = d with
// d odd, k in 1..(d+1)/2.
mpz_class f_of_k(int d, int k);

}  // namespace lefschetz
