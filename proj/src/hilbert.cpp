#include "lefschetz/hilbert.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace lefschetz {

CIParams::CIParams(int a, int b, int g) {
  if (a < 1 || b < 1 || g < 1) {
    throw std::invalid_argument("CIParams: exponents must be >= 1");
  }
  std::array<int, 3> v{a, b, g};
  std::sort(v.begin(), v.end());
  alpha_ = v[0];
  beta_ = v[1];
  gamma_ = v[2];
}

namespace {

// The inclusion-exclusion below only needs C(n, 2), truncated to 0 for
// n < 2 (monomial counts of negative degree vanish).
std::int64_t choose2(std::int64_t n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

}  // namespace

HVector h_vector(const CIParams& params) {
  const std::int64_t a = params.alpha(), b = params.beta(), g = params.gamma();
  const int e = params.socle_degree();
  HVector h(static_cast<std::size_t>(e) + 1);
  for (int d = 0; d <= e; ++d) {
    std::int64_t v = choose2(d + 2);
    v -= choose2(d - a + 2) + choose2(d - b + 2) + choose2(d - g + 2);
    v += choose2(d - a - b + 2) + choose2(d - a - g + 2) + choose2(d - b - g + 2);
    v -= choose2(d - a - b - g + 2);
    h[static_cast<std::size_t>(d)] = v;
  }
  return h;
}

PeakProfile peak_profile(const CIParams& params) {
  const int e = params.socle_degree();
  const int s = e >= 1 ? (e - 1) / 2 : -1;  // floor, and e = 0 has no lower middle degree
  const int s1 = s + 1;
  const HVector h = h_vector(params);
  const std::int64_t gap = h[static_cast<std::size_t>(s1)] - (s >= 0 ? h[static_cast<std::size_t>(s)] : 0);
  return {s, s1, gap};
}

bool is_trivially_wlp(const CIParams& params) {
  const int e = params.socle_degree();
  const int ab = params.alpha() + params.beta();
  return e % 2 == 1 ? params.gamma() > ab - 2 : params.gamma() > ab - 3;
}

}  // namespace lefschetz
