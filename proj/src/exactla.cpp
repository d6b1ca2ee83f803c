#include "lefschetz/exactla.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "lefschetz/primes.hpp"

namespace lefschetz {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
  data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw std::invalid_argument("IntMatrix: ragged initializer");
    }
    for (long v : row) data_.emplace_back(v);
  }
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

IntMatrix IntMatrix::without_row(int k) const {
  if (k < 0 || k >= rows_) throw std::invalid_argument("IntMatrix::without_row: row out of range");
  IntMatrix out(rows_ - 1, cols_);
  int r = 0;
  for (int i = 0; i < rows_; ++i) {
    if (i == k) continue;
    for (int j = 0; j < cols_; ++j) out.at(r, j) = at(i, j);
    ++r;
  }
  return out;
}

IntMatrix IntMatrix::block(int i0, int j0, int h, int w) const {
  if (i0 < 0 || j0 < 0 || h < 0 || w < 0 || i0 + h > rows_ || j0 + w > cols_) {
    throw std::invalid_argument("IntMatrix::block: out of range");
  }
  IntMatrix out(h, w);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < w; ++j) out.at(i, j) = at(i0 + i, j0 + j);
  return out;
}

mpz_class det_fraction_free(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_fraction_free: matrix must be square");
  const int n = m.rows();
  if (n == 0) return 1;
  mpz_class prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m.at(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class& t = m.at(i, j);
        t = t * m.at(k, k) - m.at(i, k) * m.at(k, j);
        // exact by the Sylvester identity; keeps entries at minor size
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  mpz_class det = m.at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

mpz_class det_condensation(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_condensation: matrix must be square");
  const int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);

  // Level t holds the determinants of all contiguous (t+1) x (t+1)
  // minors; level t entry (i,j) covers rows i..i+t, cols j..j+t.
  auto level_entry = [&](int t, int i, int j) {
    return det_fraction_free(m.block(i, j, t + 1, t + 1));
  };

  std::vector<mpz_class> prev(static_cast<std::size_t>(n) * n);  // level 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) prev[static_cast<std::size_t>(i) * n + j] = m.at(i, j);

  std::vector<mpz_class> cur(static_cast<std::size_t>(n - 1) * (n - 1));  // level 1
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j)
      cur[static_cast<std::size_t>(i) * (n - 1) + j] =
          m.at(i, j) * m.at(i + 1, j + 1) - m.at(i, j + 1) * m.at(i + 1, j);

  for (int t = 1; t + 1 < n; ++t) {
    const int cs = n - t;      // side of cur (level t)
    const int ns = n - t - 1;  // side of next (level t+1)
    std::vector<mpz_class> next(static_cast<std::size_t>(ns) * ns);
    for (int i = 0; i < ns; ++i) {
      for (int j = 0; j < ns; ++j) {
        const mpz_class& divisor = prev[static_cast<std::size_t>(i + 1) * (cs + 1) + (j + 1)];
        if (divisor == 0) {
          // The interior minor vanishes, so the condensation step is
          // undefined here; compute this one minor directly instead.
          next[static_cast<std::size_t>(i) * ns + j] = level_entry(t + 1, i, j);
          continue;
        }
        mpz_class t2 = cur[static_cast<std::size_t>(i) * cs + j] *
                           cur[static_cast<std::size_t>(i + 1) * cs + (j + 1)] -
                       cur[static_cast<std::size_t>(i) * cs + (j + 1)] *
                           cur[static_cast<std::size_t>(i + 1) * cs + j];
        mpz_divexact(t2.get_mpz_t(), t2.get_mpz_t(), divisor.get_mpz_t());
        next[static_cast<std::size_t>(i) * ns + j] = std::move(t2);
      }
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur[0];
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t acc = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return acc;
}

}  // namespace

int rank_mod_p(const IntMatrix& m, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: p must be prime");
  if (p >= (1LL << 31)) throw std::invalid_argument("rank_mod_p: p must be < 2^31");
  const int rows = m.rows(), cols = m.cols();
  const std::uint64_t up = static_cast<std::uint64_t>(p);

  std::vector<std::uint64_t> a(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      a[static_cast<std::size_t>(i) * cols + j] = mpz_fdiv_ui(m.at(i, j).get_mpz_t(), up);

  auto row = [&](int i) { return a.data() + static_cast<std::size_t>(i) * cols; };

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (row(i)[col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = col; j < cols; ++j) std::swap(row(pivot)[j], row(rank)[j]);
    }
    const std::uint64_t inv = pow_mod(row(rank)[col], up - 2, up);
    for (int i = rank + 1; i < rows; ++i) {
      const std::uint64_t f = row(i)[col] * inv % up;
      if (f == 0) continue;
      const std::uint64_t nf = up - f;
      for (int j = col; j < cols; ++j) {
        row(i)[j] = (row(i)[j] + nf * row(rank)[j]) % up;  // products < 2^62
      }
    }
    ++rank;
  }
  return rank;
}

mpz_class omit_row_minor(const IntMatrix& m, int k) {
  if (m.rows() != m.cols() + 1) {
    throw std::invalid_argument("omit_row_minor: matrix must be (n+1) x n");
  }
  if (k < 1 || k > m.rows()) throw std::invalid_argument("omit_row_minor: k out of range");
  return det_fraction_free(m.without_row(k - 1));
}

std::vector<mpz_class> all_maximal_minors(const IntMatrix& m) {
  if (m.rows() != m.cols() + 1) {
    throw std::invalid_argument("all_maximal_minors: matrix must be (n+1) x n");
  }
  std::vector<mpz_class> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (int k = 1; k <= m.rows(); ++k) out.push_back(abs(omit_row_minor(m, k)));
  return out;
}

}  // namespace lefschetz
