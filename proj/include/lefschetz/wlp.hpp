#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/colex.hpp"
#include "lefschetz/formulas.hpp"
#include "lefschetz/primes.hpp"

namespace lefschetz {

enum class Method { direct, theorem, trivial, window };
const char* to_string(Method m);

// Evidence attached to a verdict.  Exactly one of the shapes is active,
// selected by kind:
//   rank            - computed rank vs. full column rank
//   divisor         - p-adic valuations of the relevant counts/minors
//   trivial_region  - parameters lie in the always-holds region
//   prime_power     - a prime power inside the failure window
//   nonzero_determinant - characteristic zero, where the square
//                     determinant (or some maximal minor) never vanishes
struct Witness {
  enum class Kind { rank, divisor, trivial_region, prime_power, nonzero_determinant };

  Kind kind = Kind::trivial_region;
  std::int64_t rank = 0, expected = 0;
  std::vector<std::pair<std::string, long long>> valuations;  // (quantity, v_p)
  PrimePower pp{};

  std::string flat(long long p) const;  // single-token summary for text/csv
};

struct WlpVerdict {
  CIParams params;
  long long characteristic = 0;  // 0 or a prime
  bool holds = true;
  Method method = Method::direct;
  Witness witness;
};

// Decide by computing the rank of the middle multiplication matrix over
// F_p.  p = 0 short-circuits: in characteristic zero the property always
// holds here.
WlpVerdict wlp_direct(const CIParams& params, long long p);

// Same decision against a caller-supplied middle matrix (it must be
// lefschetz_matrix(params).matrix), so prime sweeps can build it once.
WlpVerdict wlp_direct(const CIParams& params, const IntMatrix& middle_matrix, long long p);

// Decide from the divisibility characterization: for odd socle degree the
// square determinant equals a box count, for even socle degree the
// property fails exactly when p divides every H(k), k = 1..m.
WlpVerdict wlp_by_theorem(const CIParams& params, long long p);

enum class FailingPrimesMethod { direct, theorem };

// All primes p where the property fails.  Candidates are the primes below
// alpha+beta+gamma; no larger prime can divide the relevant minors.
std::vector<long long> failing_primes(const CIParams& params, FailingPrimesMethod method);

// Failure window: any prime power p^n with
// gamma <= p^n <= (alpha+beta+gamma-3)/2 forces failure in
// characteristic p.
std::pair<long long, long long> prime_power_window_bounds(const CIParams& params);
std::vector<PrimePower> prime_power_window(const CIParams& params);

// One failure verdict per distinct prime in the window (smallest n kept).
std::vector<WlpVerdict> window_verdicts(const CIParams& params);

// Divisor window for box counts, sides sorted ascending a <= b <= c:
//   b < c:  b+c <= p^n <= a+b+c-1  forces p | macmahon(box)
//   b == c: 2b  <= p^n <= a+2b-2   forces p | macmahon(box)
std::pair<long long, long long> box_divisor_window_bounds(const BoxDims& box);
std::vector<long long> box_divisor_window(const BoxDims& box);

// Characteristic-2 scan of equal parameters (d,d,d).  The predicted set
// of d where the property holds is { floor((2^n + 1)/3) : n >= 1 }.
struct ConjectureRow {
  int d;
  bool holds_in_char2;
  bool predicted;
  bool agree;
};

std::vector<ConjectureRow> conjecture_char2_scan(int d_max);

// Compare the two decision paths over all primes <= prime_bound.
struct Disagreement {
  long long p;
  bool direct_holds;
  bool theorem_holds;
};

struct CrossValidationReport {
  CIParams params;
  long long prime_bound;
  std::vector<Disagreement> disagreements;
};

CrossValidationReport cross_validate(const CIParams& params, long long prime_bound);

}  // namespace lefschetz
