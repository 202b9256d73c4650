#pragma once

#include <string>
#include <vector>

#include "quaternion.hpp"

namespace quatdyn {

template <class S>
using Vec = std::vector<Quat<S>>;

/// Dense quaternionic matrix over scalar field S, row-major, 0-based access.
/// Vectors in H^n are columns and matrices act on the left, so column vectors
/// form a right H-module: A(v q) = (A v) q for scalars q in H.
template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Quat<S>(S(1));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Quat<S>& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Quat<S>& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.require_same_shape(b, "matrix sum");
    Mat r(a.rows_, a.cols_);
    for (size_t t = 0; t < a.e_.size(); ++t) r.e_[t] = a.e_[t] + b.e_[t];
    return r;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    a.require_same_shape(b, "matrix difference");
    Mat r(a.rows_, a.cols_);
    for (size_t t = 0; t < a.e_.size(); ++t) r.e_[t] = a.e_[t] - b.e_[t];
    return r;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("matrix product: " + a.shape_str() + " * " + b.shape_str());
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Quat<S>& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const Mat& b, const char* what) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw DimensionMismatch(std::string(what) + ": " + shape_str() + " vs " + b.shape_str());
  }

  int rows_ = 0, cols_ = 0;
  std::vector<Quat<S>> e_;
};

using HMatrix = Mat<double>;
using HVector = Vec<double>;

template <class S>
Vec<S> apply(const Mat<S>& a, const Vec<S>& v) {
  if (a.cols() != int(v.size()))
    throw DimensionMismatch("matrix-vector product: " + a.shape_str() + " * " +
                            std::to_string(v.size()));
  Vec<S> r(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

template <class S>
Mat<S> conjugate_transpose(const Mat<S>& a) {
  Mat<S> r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(j, i) = conj(a(i, j));
  return r;
}

template <class S>
Mat<S> scale(const Mat<S>& a, const S& s) {
  Mat<S> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = scale(a(i, j), s);
  return r;
}

/// Stack column vectors into a matrix.
template <class S>
Mat<S> from_columns(int ambient, const std::vector<Vec<S>>& cols) {
  Mat<S> m(ambient, int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (int(cols[j].size()) != ambient)
      throw DimensionMismatch("column length " + std::to_string(cols[j].size()) +
                              " does not match ambient " + std::to_string(ambient));
    for (int i = 0; i < ambient; ++i) m(i, size_t(j)) = cols[j][i];
  }
  return m;
}

template <class S>
Vec<S> column(const Mat<S>& m, int j) {
  Vec<S> v(m.rows());
  for (int i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

/// Largest entry by quaternion norm with its 1-based position; positional
/// ties resolve to the smallest (row, col) in lexicographic order.
struct MaxEntry {
  double value = 0.0;
  int row = 0;  // 1-based
  int col = 0;  // 1-based
};

MaxEntry max_entry(const HMatrix& a);  // throws ZeroInput on the zero matrix

double frobenius_norm(const HMatrix& a);

/// Study determinant det(Phi(A)); real and nonnegative for every square A.
double study_determinant(const HMatrix& a);

/// Inverse computed over the complex embedding; throws SingularMatrix when
/// the smallest singular value of Phi(A) is below rank tolerance.
HMatrix inverse(const HMatrix& a, double rank_rel = 1e-9);

/// Quaternionic rank = (number of singular values of Phi(A) above
/// rank_rel * max(rows, cols) * sigma_max) / 2; the division is exact because
/// singular values of an embedded matrix come in equal pairs.
int rank(const HMatrix& a, double rank_rel = 1e-9);

}  // namespace quatdyn
