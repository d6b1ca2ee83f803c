#include "lefschetz/colex.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace lefschetz {

std::strong_ordering colex_compare(const Monomial& m1, const Monomial& m2) {
  if (m1.degree() != m2.degree()) {
    throw std::invalid_argument("colex_compare: monomials must have equal degree");
  }
  return std::tie(m1.c, m1.b, m1.a) <=> std::tie(m2.c, m2.b, m2.a);
}

bool colex_less(const Monomial& m1, const Monomial& m2) noexcept {
  return std::tie(m1.c, m1.b, m1.a) < std::tie(m2.c, m2.b, m2.a);
}

std::vector<Monomial> monomial_basis(const CIParams& params, int d) {
  if (d < 0 || d > params.socle_degree()) {
    throw std::invalid_argument("monomial_basis: degree out of range");
  }
  std::vector<Monomial> basis;
  // Ascending c then ascending b produces colex order directly.
  for (int c = 0; c < params.gamma() && c <= d; ++c) {
    for (int b = 0; b < params.beta() && b + c <= d; ++b) {
      const int a = d - b - c;
      if (a < params.alpha()) basis.push_back({a, b, c});
    }
  }
  return basis;
}

LefschetzMatrix lefschetz_matrix(const CIParams& params, int d) {
  if (d < 0 || d >= params.socle_degree()) {
    throw std::invalid_argument("lefschetz_matrix: need 0 <= d < socle degree");
  }
  LefschetzMatrix lm;
  lm.col_basis = monomial_basis(params, d);
  lm.row_basis = monomial_basis(params, d + 1);
  lm.matrix = IntMatrix(static_cast<int>(lm.row_basis.size()), static_cast<int>(lm.col_basis.size()));

  auto row_index = [&](const Monomial& mono) {
    auto it = std::lower_bound(lm.row_basis.begin(), lm.row_basis.end(), mono, colex_less);
    return static_cast<int>(it - lm.row_basis.begin());
  };

  for (int j = 0; j < static_cast<int>(lm.col_basis.size()); ++j) {
    const Monomial& mono = lm.col_basis[j];
    if (mono.a + 1 < params.alpha()) lm.matrix.at(row_index({mono.a + 1, mono.b, mono.c}), j) = 1;
    if (mono.b + 1 < params.beta()) lm.matrix.at(row_index({mono.a, mono.b + 1, mono.c}), j) = 1;
    if (mono.c + 1 < params.gamma()) lm.matrix.at(row_index({mono.a, mono.b, mono.c + 1}), j) = 1;
  }
  return lm;
}

LefschetzMatrix lefschetz_matrix(const CIParams& params) {
  return lefschetz_matrix(params, peak_profile(params).s);
}

LefschetzMatrix assemble_block_matrix(const CIParams& params) {
  const int alpha = params.alpha(), beta = params.beta(), gamma = params.gamma();
  const int diff = alpha + beta - gamma;
  bool twin;
  int m;
  if (diff >= 2 && diff % 2 == 0) {
    twin = true;  // gamma = alpha + beta - 2m, odd socle degree, square matrix
    m = diff / 2;
  } else if (diff >= 3 && diff % 2 == 1) {
    twin = false;  // gamma = alpha + beta - 2m + 1, even socle degree
    m = (diff + 1) / 2;
  } else {
    throw std::invalid_argument("assemble_block_matrix: parameters outside the block-structure regimes");
  }

  // Diagonal blocks along the gamma column groups: w x (w+1) upper
  // bidiagonal for w = m..alpha-1, then beta-alpha square bidiagonal
  // blocks, then the transposes back down to m (twin) or m-1.
  enum class Shape { wide, square, tall };
  struct Block {
    int rows, cols;
    Shape shape;
  };
  std::vector<Block> diag;
  for (int w = m; w <= alpha - 1; ++w) diag.push_back({w, w + 1, Shape::wide});
  for (int i = 0; i < beta - alpha; ++i) diag.push_back({alpha, alpha, Shape::square});
  for (int w = alpha - 1; w >= (twin ? m : m - 1); --w) diag.push_back({w + 1, w, Shape::tall});

  if (static_cast<int>(diag.size()) != gamma) {
    throw std::logic_error("assemble_block_matrix: block count does not match gamma");
  }

  int total_rows = 0, total_cols = 0;
  std::vector<int> row_off(diag.size()), col_off(diag.size());
  for (std::size_t r = 0; r < diag.size(); ++r) {
    row_off[r] = total_rows;
    col_off[r] = total_cols;
    total_rows += diag[r].rows;
    total_cols += diag[r].cols;
  }

  IntMatrix mat(total_rows, total_cols);
  for (std::size_t r = 0; r < diag.size(); ++r) {
    const Block& blk = diag[r];
    const int i0 = row_off[r], j0 = col_off[r];
    switch (blk.shape) {
      case Shape::wide:  // rows w, cols w+1: ones at (i,i) and (i,i+1)
        for (int i = 0; i < blk.rows; ++i) {
          mat.at(i0 + i, j0 + i) = 1;
          mat.at(i0 + i, j0 + i + 1) = 1;
        }
        break;
      case Shape::square:  // ones at (i,i), and (i,i+1) above the diagonal
        for (int i = 0; i < blk.rows; ++i) {
          mat.at(i0 + i, j0 + i) = 1;
          if (i + 1 < blk.cols) mat.at(i0 + i, j0 + i + 1) = 1;
        }
        break;
      case Shape::tall:  // rows w+1, cols w: ones at (i,i) and (i+1,i)
        for (int j = 0; j < blk.cols; ++j) {
          mat.at(i0 + j, j0 + j) = 1;
          mat.at(i0 + j + 1, j0 + j) = 1;
        }
        break;
    }
  }

  // Multiplication by z is an inclusion between consecutive column
  // groups: identity blocks one step below the diagonal.
  for (std::size_t r = 0; r + 1 < diag.size(); ++r) {
    if (diag[r + 1].rows != diag[r].cols) {
      throw std::logic_error("assemble_block_matrix: inconsistent adjacent block sizes");
    }
    for (int i = 0; i < diag[r].cols; ++i) mat.at(row_off[r + 1] + i, col_off[r] + i) = 1;
  }

  return {std::move(mat), {}, {}};
}

}  // namespace lefschetz
