#pragma once

#include <cstdint>
#include <vector>

namespace lefschetz {

// Exponents of the monomial complete intersection K[x,y,z]/(x^a, y^b, z^g).
// Stored sorted so that alpha <= beta <= gamma; all must be >= 1.
class CIParams {
 public:
  CIParams(int a, int b, int g);

  int alpha() const noexcept { return alpha_; }
  int beta() const noexcept { return beta_; }
  int gamma() const noexcept { return gamma_; }

  // Top nonzero degree of the quotient: alpha + beta + gamma - 3.
  int socle_degree() const noexcept { return alpha_ + beta_ + gamma_ - 3; }

  auto operator<=>(const CIParams&) const = default;

 private:
  int alpha_, beta_, gamma_;
};

using HVector = std::vector<std::int64_t>;

// Dimensions of the graded pieces, degrees 0..socle_degree.
HVector h_vector(const CIParams& params);

// The two middle degrees s = floor((e-1)/2) and s+1 around the peak,
// plus gap = h_{s+1} - h_s.  For e = 0 there is no degree below the
// peak and s = -1 (gap is then h_0).
struct PeakProfile {
  int s;
  int s_plus_1;
  std::int64_t gap;
};

PeakProfile peak_profile(const CIParams& params);

// True when the parameters fall in the region where the weak Lefschetz
// property holds in every characteristic: gamma > alpha+beta-2 for odd
// socle degree, gamma > alpha+beta-3 for even.
bool is_trivially_wlp(const CIParams& params);

}  // namespace lefschetz
