#include "lefschetz/wlp.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lefschetz {

const char* to_string(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::theorem: return "theorem";
    case Method::trivial: return "trivial";
    case Method::window: return "window";
  }
  return "?";
}

std::string Witness::flat(long long p) const {
  std::ostringstream os;
  switch (kind) {
    case Kind::rank:
      os << "rank=" << rank << ";expected=" << expected;
      break;
    case Kind::divisor:
      for (std::size_t i = 0; i < valuations.size(); ++i) {
        if (i > 0) os << ";";
        os << "v_" << p << "(" << valuations[i].first << ")=" << valuations[i].second;
      }
      break;
    case Kind::trivial_region:
      os << "trivial-region";
      break;
    case Kind::prime_power:
      os << pp.p << "^" << pp.n << "=" << pp.value;
      break;
    case Kind::nonzero_determinant:
      os << "nonzero-determinant";
      break;
  }
  return os.str();
}

namespace {

std::string box_label(const BoxDims& box) {
  std::ostringstream os;
  os << "M(" << box.a << "," << box.b << "," << box.c << ")";
  return os.str();
}

std::string h_label(int k) {
  std::ostringstream os;
  os << "H(" << k << ")";
  return os.str();
}

long long valuation_of(const mpz_class& v, long long p) {
  if (v == 0) throw std::logic_error("valuation_of: zero value");
  mpz_class reduced;
  const mpz_class pz(static_cast<long>(p));
  return static_cast<long long>(mpz_remove(reduced.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t()));
}

WlpVerdict char_zero_verdict(const CIParams& params, Method method) {
  WlpVerdict v{params, 0, true, method, {}};
  v.witness.kind = Witness::Kind::nonzero_determinant;
  return v;
}

void validate_prime(long long p, const char* who) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::string(who) + ": characteristic must be 0 or a prime");
  }
}

}  // namespace

WlpVerdict wlp_direct(const CIParams& params, const IntMatrix& middle_matrix, long long p) {
  if (p == 0) return char_zero_verdict(params, Method::direct);
  validate_prime(p, "wlp_direct");
  WlpVerdict v{params, p, true, Method::direct, {}};
  const int r = rank_mod_p(middle_matrix, p);
  v.holds = (r == middle_matrix.cols());
  v.witness.kind = Witness::Kind::rank;
  v.witness.rank = r;
  v.witness.expected = middle_matrix.cols();
  return v;
}

WlpVerdict wlp_direct(const CIParams& params, long long p) {
  if (p == 0) return char_zero_verdict(params, Method::direct);
  validate_prime(p, "wlp_direct");
  if (params.socle_degree() == 0) {
    WlpVerdict v{params, p, true, Method::trivial, {}};
    v.witness.kind = Witness::Kind::trivial_region;
    return v;
  }
  return wlp_direct(params, lefschetz_matrix(params).matrix, p);
}

WlpVerdict wlp_by_theorem(const CIParams& params, long long p) {
  if (p == 0) return char_zero_verdict(params, Method::theorem);
  validate_prime(p, "wlp_by_theorem");
  if (is_trivially_wlp(params)) {
    WlpVerdict v{params, p, true, Method::trivial, {}};
    v.witness.kind = Witness::Kind::trivial_region;
    return v;
  }

  const long long alpha = params.alpha(), beta = params.beta(), gamma = params.gamma();
  WlpVerdict v{params, p, true, Method::theorem, {}};
  v.witness.kind = Witness::Kind::divisor;

  if ((alpha + beta + gamma) % 2 == 0) {
    // Odd socle degree: the middle matrix is square and its determinant
    // is the box count below; failure is exactly divisibility by p.
    const BoxDims box((alpha + beta - gamma) / 2, (alpha - beta + gamma) / 2,
                      (-alpha + beta + gamma) / 2);
    const long long val = macmahon_valuation(box, p);
    v.holds = (val == 0);
    v.witness.valuations = {{box_label(box), val}};
    return v;
  }

  // Even socle degree: failure means p divides every maximal minor.  The
  // minors omitting row k <= m are exactly H(k); the remaining ones are
  // integer combinations of those, so checking k = 1..m decides.  (H is
  // not palindromic in k unless alpha = beta, so the range cannot be
  // halved in general.)
  const long long m = (alpha + beta - gamma + 1) / 2;
  std::vector<std::pair<std::string, long long>> terms;
  bool all_divisible = true;
  for (int k = 1; k <= m; ++k) {
    const long long val = valuation_of(h_of_k(params, k), p);
    terms.emplace_back(h_label(k), val);
    if (val == 0) {
      all_divisible = false;
      v.witness.valuations = {terms.back()};
      break;
    }
  }
  v.holds = !all_divisible;
  if (all_divisible) v.witness.valuations = std::move(terms);
  return v;
}

std::vector<long long> failing_primes(const CIParams& params, FailingPrimesMethod method) {
  std::vector<long long> out;
  const long long bound = params.alpha() + params.beta() + params.gamma();
  const std::vector<long long> candidates = primes_below(bound);

  if (method == FailingPrimesMethod::direct) {
    if (params.socle_degree() == 0) return out;
    const IntMatrix m = lefschetz_matrix(params).matrix;
    for (long long p : candidates) {
      if (!wlp_direct(params, m, p).holds) out.push_back(p);
    }
    return out;
  }
  for (long long p : candidates) {
    if (!wlp_by_theorem(params, p).holds) out.push_back(p);
  }
  return out;
}

std::pair<long long, long long> prime_power_window_bounds(const CIParams& params) {
  return {params.gamma(), (params.alpha() + params.beta() + params.gamma() - 3) / 2};
}

std::vector<PrimePower> prime_power_window(const CIParams& params) {
  const auto [lo, hi] = prime_power_window_bounds(params);
  return prime_powers_in(lo, hi);
}

std::vector<WlpVerdict> window_verdicts(const CIParams& params) {
  std::vector<WlpVerdict> out;
  std::set<long long> seen;
  for (const PrimePower& pp : prime_power_window(params)) {
    if (!seen.insert(pp.p).second) continue;
    WlpVerdict v{params, pp.p, false, Method::window, {}};
    v.witness.kind = Witness::Kind::prime_power;
    v.witness.pp = pp;
    out.push_back(std::move(v));
  }
  return out;
}

std::pair<long long, long long> box_divisor_window_bounds(const BoxDims& box_in) {
  const BoxDims box = box_in.sorted();
  if (box.a < 1) throw std::invalid_argument("box_divisor_window: sides must be >= 1");
  if (box.b < box.c) return {box.b + box.c, box.side_sum() - 1};
  return {2 * box.b, box.a + 2 * box.b - 2};
}

std::vector<long long> box_divisor_window(const BoxDims& box_in) {
  const BoxDims box = box_in.sorted();
  const auto [lo, hi] = box_divisor_window_bounds(box);
  std::vector<long long> out;
  for (const PrimePower& pp : prime_powers_in(lo, hi)) {
    if (out.empty() || out.back() != pp.p) out.push_back(pp.p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (long long p : out) {
    if (macmahon_valuation(box, p) == 0) {
      throw std::logic_error("box_divisor_window: window prime does not divide the count");
    }
  }
  return out;
}

std::vector<ConjectureRow> conjecture_char2_scan(int d_max) {
  if (d_max < 1) throw std::invalid_argument("conjecture_char2_scan: d_max must be >= 1");
  std::set<int> predicted;
  for (long long pw = 2;; pw *= 2) {
    const long long d = (pw + 1) / 3;
    if (d >= 1) predicted.insert(static_cast<int>(d));
    if (d > d_max) break;
  }
  std::vector<ConjectureRow> rows;
  rows.reserve(static_cast<std::size_t>(d_max));
  for (int d = 1; d <= d_max; ++d) {
    const bool holds = wlp_direct(CIParams(d, d, d), 2).holds;
    const bool pred = predicted.count(d) > 0;
    rows.push_back({d, holds, pred, holds == pred});
  }
  return rows;
}

CrossValidationReport cross_validate(const CIParams& params, long long prime_bound) {
  CrossValidationReport report{params, prime_bound, {}};
  const IntMatrix* matrix = nullptr;
  IntMatrix storage;
  if (params.socle_degree() > 0) {
    storage = lefschetz_matrix(params).matrix;
    matrix = &storage;
  }
  for (long long p : primes_below(prime_bound + 1)) {
    const bool direct_holds =
        matrix ? wlp_direct(params, *matrix, p).holds : wlp_direct(params, p).holds;
    const bool theorem_holds = wlp_by_theorem(params, p).holds;
    if (direct_holds != theorem_holds) report.disagreements.push_back({p, direct_holds, theorem_holds});
  }
  return report;
}

}  // namespace lefschetz
