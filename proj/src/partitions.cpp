#include "lefschetz/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace lefschetz {

bool is_box_plane_partition(const PlanePartitionArray& arr, std::int64_t c) {
  if (arr.empty()) return true;
  const std::size_t cols = arr[0].size();
  for (const auto& row : arr) {
    if (row.size() != cols) throw std::invalid_argument("is_box_plane_partition: ragged array");
  }
  for (std::size_t i = 0; i < arr.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t v = arr[i][j];
      if (v < 0 || v > c) return false;
      if (j + 1 < cols && arr[i][j + 1] > v) return false;
      if (i + 1 < arr.size() && arr[i + 1][j] > v) return false;
    }
  }
  return true;
}

mpz_class count_by_enumeration(const BoxDims& box, const EnumerationGuard& guard) {
  if (box.a * box.b > guard.max_cells || box.c > guard.max_height) {
    throw std::invalid_argument(
        "count_by_enumeration: box exceeds the enumeration guard; use count_by_transfer");
  }
  if (box.a == 0 || box.b == 0 || box.c == 0) return 1;
  const int a = static_cast<int>(box.a), b = static_cast<int>(box.b), c = static_cast<int>(box.c);
  std::vector<std::vector<int>> grid(a, std::vector<int>(b, 0));
  mpz_class count(0);

  // Row-major backtracking; each cell is capped by its upper and left
  // neighbors.
  auto fill = [&](auto&& self, int cell) -> void {
    if (cell == a * b) {
      ++count;
      return;
    }
    const int i = cell / b, j = cell % b;
    const int cap = std::min(i > 0 ? grid[i - 1][j] : c, j > 0 ? grid[i][j - 1] : c);
    for (int v = 0; v <= cap; ++v) {
      grid[i][j] = v;
      self(self, cell + 1);
    }
  };
  fill(fill, 0);
  return count;
}

mpz_class count_by_transfer(const BoxDims& box, const TransferGuard& guard) {
  if (box.a == 0 || box.b == 0 || box.c == 0) return 1;
  if (binomial(box.a + box.c, box.a) > guard.max_states) {
    throw std::invalid_argument("count_by_transfer: state space exceeds the guard");
  }
  const int n = static_cast<int>(box.a);  // column height
  const int cap = static_cast<int>(box.c);

  // States: weakly decreasing columns, flattened, in lexicographic order.
  std::vector<std::int32_t> states;
  std::vector<std::int32_t> stack(static_cast<std::size_t>(n));
  auto gen = [&](auto&& self, int r, int hi) -> void {
    if (r == n) {
      states.insert(states.end(), stack.begin(), stack.end());
      return;
    }
    for (int v = 0; v <= hi; ++v) {
      stack[static_cast<std::size_t>(r)] = v;
      self(self, r + 1, v);
    }
  };
  gen(gen, 0, cap);
  const std::int64_t S = static_cast<std::int64_t>(states.size()) / n;

  auto state = [&](std::int64_t idx) { return states.data() + idx * n; };
  auto find_state = [&](const std::int32_t* key) -> std::int64_t {
    std::int64_t lo = 0, hi = S;
    while (lo < hi) {
      const std::int64_t mid = (lo + hi) / 2;
      if (std::lexicographical_compare(state(mid), state(mid) + n, key, key + n)) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  };

  // up[idx*n + r]: index of the state with coordinate r incremented, or -1
  // when that leaves the decreasing region.
  std::vector<std::int64_t> up(static_cast<std::size_t>(S) * n, -1);
  std::vector<std::int32_t> key(static_cast<std::size_t>(n));
  for (std::int64_t idx = 0; idx < S; ++idx) {
    for (int r = 0; r < n; ++r) {
      const std::int32_t* st = state(idx);
      const int bound = r > 0 ? st[r - 1] : cap;
      if (st[r] + 1 > bound) continue;
      std::copy(st, st + n, key.begin());
      ++key[static_cast<std::size_t>(r)];
      up[static_cast<std::size_t>(idx) * n + r] = find_state(key.data());
    }
  }

  // f starts as the one-column counts; each transition replaces f(t) by
  // the sum of f over columns dominating t.  The dominance sum factors
  // into per-coordinate suffix sums, processed bottom row first; within a
  // pass, descending lexicographic order sees the incremented state
  // already transformed.
  std::vector<mpz_class> f(static_cast<std::size_t>(S), mpz_class(1));
  for (long long col = 2; col <= box.b; ++col) {
    for (int r = n - 1; r >= 0; --r) {
      for (std::int64_t idx = S - 1; idx >= 0; --idx) {
        const std::int64_t u = up[static_cast<std::size_t>(idx) * n + r];
        if (u >= 0) f[static_cast<std::size_t>(idx)] += f[static_cast<std::size_t>(u)];
      }
    }
  }

  mpz_class total(0);
  for (const mpz_class& v : f) total += v;
  return total;
}

mpz_class count_by_determinant(const BoxDims& box) {
  const int a = static_cast<int>(box.a);
  IntMatrix m(a, a);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) m.at(i, j) = binomial(box.b + box.c, box.c + i - j);
  return det_fraction_free(std::move(m));
}

}  // namespace lefschetz
