#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "lefschetz/formulas.hpp"

namespace lefschetz {

using PlanePartitionArray = std::vector<std::vector<std::int64_t>>;

// True when arr is an a x b array, weakly decreasing along rows and
// columns, with entries in [0, c].  Ragged input is rejected.
bool is_box_plane_partition(const PlanePartitionArray& arr, std::int64_t c);

struct EnumerationGuard {
  std::int64_t max_cells = 12;  // a*b
  std::int64_t max_height = 8;  // c
};

struct TransferGuard {
  std::int64_t max_states = 500000;  // binomial(a+c, a)
};

// Count by direct backtracking over all fillings.  Exact but exponential;
// guarded by box size.
mpz_class count_by_enumeration(const BoxDims& box, const EnumerationGuard& guard = {});

// Count by a transfer DP over the b columns; the state is one weakly
// decreasing column.  Guarded by the state count binomial(a+c, a).
mpz_class count_by_transfer(const BoxDims& box, const TransferGuard& guard = {});

// Count as the determinant of the a x a matrix (binomial(b+c, c+i-j)).
mpz_class count_by_determinant(const BoxDims& box);

}  // namespace lefschetz
