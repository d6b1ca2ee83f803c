#pragma once

#include <compare>
#include <vector>

#include "lefschetz/exactla.hpp"
#include "lefschetz/hilbert.hpp"

namespace lefschetz {

struct Monomial {
  int a = 0, b = 0, c = 0;  // exponents of x, y, z

  int degree() const noexcept { return a + b + c; }
  bool operator==(const Monomial&) const = default;
};

// Colexicographic order: reversed exponent tuples (c, b, a) compared
// lexicographically.  Only defined between monomials of equal degree.
std::strong_ordering colex_compare(const Monomial& m1, const Monomial& m2);

// Unchecked comparator usable with std::sort and friends.
bool colex_less(const Monomial& m1, const Monomial& m2) noexcept;

// Monomials of degree d surviving in the quotient (exponents below the
// respective alpha, beta, gamma), in colex order.  Requires
// 0 <= d <= socle_degree.
std::vector<Monomial> monomial_basis(const CIParams& params, int d);

// Matrix of multiplication by x+y+z from degree d to d+1, with both bases
// in colex order.  Entries are 0/1.  A block-assembled matrix carries
// empty bases.
struct LefschetzMatrix {
  IntMatrix matrix;
  std::vector<Monomial> row_basis;  // degree d+1
  std::vector<Monomial> col_basis;  // degree d
};

LefschetzMatrix lefschetz_matrix(const CIParams& params, int d);

// Default degree: the lower middle degree s from peak_profile.
LefschetzMatrix lefschetz_matrix(const CIParams& params);

// The same middle-degree matrix assembled from its block description,
// without touching monomials: bidiagonal 0/1 diagonal blocks and identity
// sub-diagonal blocks, sizes read off the parameters.  Only defined in the
// two nontrivial regimes (gamma = alpha+beta-2m or alpha+beta-2m+1).
LefschetzMatrix assemble_block_matrix(const CIParams& params);

}  // namespace lefschetz
