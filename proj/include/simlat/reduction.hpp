#pragma once

// Integer lattice reduction helpers: Hermite normal forms, integer kernels,
// and an exact Gram-matrix LLL used to precondition enumeration.

#include "simlat/matrix.hpp"

namespace simlat {

/// Column-style HNF of the lattice generated by the columns of b (full rank):
/// an upper-triangular H with positive diagonal, entries above the diagonal
/// reduced into [0, H_ii), and H Z^n = b Z^n.
IntMatrix column_hnf(const IntMatrix& b);

/// Row-style HNF basis of the Z-span of the given integer row vectors:
/// rows of the result are a basis in echelon form (pivots strictly moving
/// right, positive pivots). Zero rows are dropped.
IntMatrix row_hnf(const IntMatrix& generators);

/// Basis (as rows) of { x in Z^m : x * m = 0 } for an m-by-k integer matrix.
IntMatrix integer_left_kernel(const IntMatrix& m);

struct LllResult {
  RatMatrix gram;       // reduced Gram = U^T A U
  IntMatrix transform;  // U, unimodular; column j = old coordinates of new basis vector j
};

/// LLL reduction (delta = 3/4) of a positive definite Gram matrix, exact
/// rational arithmetic.
LllResult lll_reduce(const RatMatrix& gram);

}  // namespace simlat
