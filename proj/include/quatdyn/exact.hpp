#pragma once

#include <utility>
#include <vector>

#include "quatdyn/dynamics.hpp"
#include "quatdyn/hmatrix.hpp"
#include "quatdyn/rational.hpp"

namespace quatdyn {

/// Exact-arithmetic backend over quaternions with rational components.
/// Inputs are matrices already in Jordan form whose diagonal entries are
/// complex rationals (re + im*i, im >= 0); everything downstream of that is
/// division-free combinatorics plus exact linear algebra, so subspace answers
/// are exact, not approximate.

struct ExactBlock {
  Rational re;
  Rational im;
  int size = 1;
};

/// Gauss-Jordan inverse using left row operations (valid over a division
/// ring).  Throws SingularMatrix when no pivot can be found.
Mat<Rational> exact_inverse(const Mat<Rational>& a);

/// Column rank over the quaternions by exact elimination.
int exact_rank(Mat<Rational> a);

/// Parse a matrix that must already be in Jordan form: complex-rational
/// diagonal with non-negative imaginary parts, 0/1 superdiagonal, zeros
/// elsewhere.  Throws Error when the shape does not hold.
std::vector<ExactBlock> read_exact_jordan(const Mat<Rational>& a);

/// Dynamical type from exact block data; unit modulus is re^2 + im^2 == 1.
DynamicalType classify_exact(const std::vector<ExactBlock>& blocks);

/// Kept 0-based coordinate indices of the limit kernel in the given
/// direction, decided with exact squared-modulus comparisons.
std::vector<int> exact_limit_kernel(const std::vector<ExactBlock>& blocks, Direction dir);

/// Whether two column families span the same right submodule, by exact rank
/// of the individual and concatenated families.
bool exact_same_span(const Mat<Rational>& a_cols, const Mat<Rational>& b_cols);

/// Columns of the identity selected by `indices`, as an n x k matrix.
Mat<Rational> exact_coordinate_columns(int n, const std::vector<int>& indices);

}  // namespace quatdyn
