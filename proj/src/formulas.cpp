#include "lefschetz/formulas.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "lefschetz/primes.hpp"

namespace lefschetz {

BoxDims::BoxDims(long long a_, long long b_, long long c_) : a(a_), b(b_), c(c_) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("BoxDims: sides must be nonnegative");
}

BoxDims BoxDims::sorted() const {
  std::array<long long, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

mpz_class binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class macmahon(const BoxDims& box) {
  mpz_class num(1), den(1);
  for (long long i = 1; i <= box.a; ++i) {
    num *= factorial(box.b + box.c + i - 1) * factorial(i - 1);
    den *= factorial(box.b + i - 1) * factorial(box.c + i - 1);
  }
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("macmahon: product is not integral");
  return q;
}

long long legendre_valuation(long long n, long long p) {
  if (n < 0) throw std::invalid_argument("legendre_valuation: n must be nonnegative");
  if (!is_prime(p)) throw std::invalid_argument("legendre_valuation: p must be prime");
  long long acc = 0;
  for (long long pk = p; pk <= n; pk *= p) {
    acc += n / pk;
    if (pk > n / p) break;  // avoid overflow on the next power
  }
  return acc;
}

long long macmahon_valuation(const BoxDims& box, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("macmahon_valuation: p must be prime");
  long long acc = 0;
  for (long long i = 1; i <= box.a; ++i) {
    acc += legendre_valuation(box.b + box.c + i - 1, p) + legendre_valuation(i - 1, p);
    acc -= legendre_valuation(box.b + i - 1, p) + legendre_valuation(box.c + i - 1, p);
  }
  return acc;
}

PrimeFactorization macmahon_factorization(const BoxDims& box, long long prime_bound) {
  if (prime_bound == 0) prime_bound = box.side_sum();
  if (prime_bound < 0) throw std::invalid_argument("macmahon_factorization: bound must be nonnegative");
  PrimeFactorization out;
  for (long long p : primes_below(prime_bound)) {
    const long long v = macmahon_valuation(box, p);
    if (v > 0) out[p] = v;
  }
  return out;
}

IntMatrix binomial_matrix_nk(long long a, long long b, int n, int k) {
  if (a < 0 || b < 0) throw std::invalid_argument("binomial_matrix_nk: a, b must be nonnegative");
  if (n < 1) throw std::invalid_argument("binomial_matrix_nk: n must be >= 1");
  if (k < 1 || k > n + 1) throw std::invalid_argument("binomial_matrix_nk: k out of range");
  IntMatrix out(n, n);
  int r = 0;
  for (int i = 1; i <= n + 1; ++i) {
    if (i == k) continue;
    for (int j = 1; j <= n; ++j) out.at(r, j - 1) = binomial(a + b, a - i + j);
    ++r;
  }
  return out;
}

namespace {

// gmpxx has no long long constructor; every value here is desk scale.
mpz_class z(long long v) { return mpz_class(static_cast<long>(v)); }

mpq_class ratio(mpz_class num, mpz_class den) {
  mpq_class q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

mpz_class integral_value(const mpq_class& q, const char* who) {
  if (q.get_den() != 1) throw std::logic_error(std::string(who) + ": value is not integral");
  return q.get_num();
}

}  // namespace

mpz_class det_nk_closed(long long a, long long b, int n, int k) {
  if (a < 1) throw std::invalid_argument("det_nk_closed: a must be >= 1");
  if (b < 0) throw std::invalid_argument("det_nk_closed: b must be nonnegative");
  if (n < 1) throw std::invalid_argument("det_nk_closed: n must be >= 1");
  if (k < 1 || k > n + 1) throw std::invalid_argument("det_nk_closed: k out of range");
  mpq_class acc(1);
  for (long long i = 1; i <= k - 1; ++i) {
    acc *= ratio(z(n + 1 - i) * z(b + i), z(i) * z(n + a - i));
  }
  for (long long i = 1; i <= n; ++i) {
    acc *= ratio(factorial(a + b + i - 1) * factorial(i - 1), factorial(a - 2 + i) * factorial(b + i));
  }
  return integral_value(acc, "det_nk_closed");
}

mpz_class h_of_k(const CIParams& params, int k) {
  const long long alpha = params.alpha(), beta = params.beta(), gamma = params.gamma();
  if ((alpha + beta + gamma) % 2 == 0) {
    throw std::invalid_argument("h_of_k: alpha+beta+gamma must be odd");
  }
  if (gamma > alpha + beta - 3) {
    throw std::invalid_argument("h_of_k: requires gamma <= alpha+beta-3");
  }
  const long long m = (alpha + beta - gamma + 1) / 2;
  if (k < 1 || k > m) throw std::invalid_argument("h_of_k: k out of range");
  mpq_class acc(1);
  for (long long i = 1; i <= k - 1; ++i) {
    acc *= ratio(z(m - i) * z((-alpha + beta + gamma - 1) / 2 + i), z(i) * z(alpha - i));
  }
  const BoxDims box((alpha + beta - gamma - 1) / 2, (alpha - beta + gamma - 1) / 2,
                    (-alpha + beta + gamma + 1) / 2);
  acc *= mpq_class(macmahon(box));
  return integral_value(acc, "h_of_k");
}

mpz_class f_of_k(int d, int k) {
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("f_of_k: d must be odd and >= 3");
  if (k < 1 || k > (d + 1) / 2) throw std::invalid_argument("f_of_k: k out of range");
  const long long dd = d;
  mpq_class acc(1);
  for (long long i = 1; i <= k - 1; ++i) {
    acc *= ratio(z((dd + 1) / 2 - i) * z((dd - 1) / 2 + i), z(i) * z(dd - i));
  }
  acc *= mpq_class(macmahon({(dd - 1) / 2, (dd - 1) / 2, (dd + 1) / 2}));
  return integral_value(acc, "f_of_k");
}

}  // namespace lefschetz
