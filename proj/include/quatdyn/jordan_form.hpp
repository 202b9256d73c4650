#pragma once

#include <vector>

#include "hmatrix.hpp"
#include "spectral.hpp"

namespace quatdyn {

/// Upper Jordan block J(lambda, size): lambda on the diagonal, 1 on the
/// superdiagonal.  Scalar-generic so the exact backend can build forms too.
template <class S>
Mat<S> jordan_block(const Quat<S>& lambda, int size) {
  Mat<S> m(size, size);
  for (int i = 0; i < size; ++i) {
    m(i, i) = lambda;
    if (i + 1 < size) m(i, i + 1) = Quat<S>(S(1));
  }
  return m;
}

template <class S>
Mat<S> direct_sum(const std::vector<Mat<S>>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.rows();
  Mat<S> m(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

/// Diagonal matrix with the given quaternion entries.
template <class S>
Mat<S> diagonal(const Vec<S>& entries) {
  Mat<S> m(int(entries.size()), int(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) m(int(i), int(i)) = entries[i];
  return m;
}

/// Structural reading of a matrix that is already an exact direct sum of
/// Jordan blocks with complex diagonal entries (imaginary part >= 0).
/// Validates the shape entrywise at tolerance `tol` (pass 0 for exact
/// validation) and returns the block list in input order together with the
/// 0-based permutation that sorts blocks canonically.
///
/// Used by the assume-jordan pipeline: no eigen-solving is involved and the
/// change of basis is the exact block permutation.
struct StructuralJordan {
  std::vector<JordanBlock> blocks;   // input order
  std::vector<int> sorted_of_input;  // sorted_of_input[s] = input index of s-th sorted block
};

StructuralJordan read_jordan_structure(const HMatrix& a, double tol);

/// JordanData for a structurally-read Jordan matrix; S is the exact 0/1
/// permutation matrix that reorders blocks into canonical order.
JordanData jordan_data_from_structure(const HMatrix& a, double tol);

}  // namespace quatdyn
