#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

namespace lefschetz {

// Dense matrix with exact integer entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  mpz_class& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  void swap_rows(int i, int j);
  IntMatrix without_row(int k) const;                      // k is 0-based
  IntMatrix block(int i0, int j0, int h, int w) const;     // contiguous block

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

// Determinant by fraction-free elimination: every division along the way
// is exact, so intermediate entries stay integral and of moderate size.
mpz_class det_fraction_free(IntMatrix m);

// Determinant by condensation on contiguous minors.  Independent recurrence
// from elimination; zero interior pivots fall back to fraction-free
// elimination of the offending submatrix.
mpz_class det_condensation(const IntMatrix& m);

// Rank over the prime field F_p.  Requires p prime and p < 2^31 so the
// reduced entries fit machine words.
int rank_mod_p(const IntMatrix& m, long long p);

// For an (n+1) x n matrix: determinant of the square matrix obtained by
// deleting row k (1-based).
mpz_class omit_row_minor(const IntMatrix& m, int k);

// Absolute values of all n+1 maximal minors of an (n+1) x n matrix,
// indexed by deleted row.
std::vector<mpz_class> all_maximal_minors(const IntMatrix& m);

}  // namespace lefschetz
