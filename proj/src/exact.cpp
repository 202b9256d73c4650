#include "quatdyn/exact.hpp"

#include <algorithm>

#include "quatdyn/errors.hpp"

namespace quatdyn {

namespace {

using QMat = Mat<Rational>;

void swap_rows(QMat& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row_r := row_r - f * row_p (left coefficient, valid over a division ring).
void eliminate(QMat& m, int r, int p, const QuatQ& f) {
  for (int j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) - f * m(p, j);
}

void scale_row_left(QMat& m, int r, const QuatQ& s) {
  for (int j = 0; j < m.cols(); ++j) m(r, j) = s * m(r, j);
}

}  // namespace

Mat<Rational> exact_inverse(const Mat<Rational>& a) {
  if (!a.square()) throw NonSquare("exact inverse requires a square matrix");
  const int n = a.rows();
  QMat work = a;
  QMat inv = QMat::identity(n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!is_zero(work(r, c))) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularMatrix("exact inverse: no pivot in column " + std::to_string(c + 1));
    swap_rows(work, c, pivot);
    swap_rows(inv, c, pivot);
    QuatQ pinv = inverse(work(c, c));
    scale_row_left(work, c, pinv);
    scale_row_left(inv, c, pinv);
    for (int r = 0; r < n; ++r) {
      if (r == c || is_zero(work(r, c))) continue;
      QuatQ f = work(r, c);
      eliminate(work, r, c, f);
      eliminate(inv, r, c, f);
    }
  }
  return inv;
}

int exact_rank(Mat<Rational> a) {
  int rank = 0;
  int prow = 0;
  for (int c = 0; c < a.cols() && prow < a.rows(); ++c) {
    int pivot = -1;
    for (int r = prow; r < a.rows(); ++r)
      if (!is_zero(a(r, c))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    swap_rows(a, prow, pivot);
    scale_row_left(a, prow, inverse(a(prow, c)));
    for (int r = prow + 1; r < a.rows(); ++r)
      if (!is_zero(a(r, c))) {
        QuatQ f = a(r, c);  // copy: eliminate() overwrites this entry first
        eliminate(a, r, prow, f);
      }
    ++rank;
    ++prow;
  }
  return rank;
}

std::vector<ExactBlock> read_exact_jordan(const Mat<Rational>& a) {
  if (!a.square()) throw NonSquare("Jordan-form input must be square");
  const int n = a.rows();
  if (n == 0) throw Error("Jordan-form input must be non-empty");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const QuatQ& q = a(i, j);
      std::string pos = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (i == j) {
        if (!(q.y == 0 && q.z == 0) || q.x < 0)
          throw Error("diagonal entry " + pos + " must be complex with non-negative imaginary part");
      } else if (j == i + 1) {
        if (!is_zero(q) && q != QuatQ(Rational(1)))
          throw Error("superdiagonal entry " + pos + " must be 0 or 1");
      } else if (!is_zero(q)) {
        throw Error("entry " + pos + " must be zero");
      }
    }
  std::vector<ExactBlock> blocks;
  int start = 0;
  for (int i = 0; i < n; ++i) {
    bool chained = i + 1 < n && a(i, i + 1) == QuatQ(Rational(1));
    if (chained) {
      if (!(a(i, i) == a(i + 1, i + 1)))
        throw Error("chained rows " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                    " must share one diagonal value");
      continue;
    }
    blocks.push_back(ExactBlock{a(start, start).w, a(start, start).x, i - start + 1});
    start = i + 1;
  }
  return blocks;
}

namespace {

Rational mod_sq(const ExactBlock& b) { return b.re * b.re + b.im * b.im; }

// Strictly-greater growth comparison; `forward` flips which modulus wins.
bool growth_greater(const ExactBlock& a, const ExactBlock& b, Direction dir) {
  Rational ma = mod_sq(a), mb = mod_sq(b);
  if (ma != mb) return dir == Direction::Forward ? ma > mb : ma < mb;
  return a.size > b.size;
}

}  // namespace

DynamicalType classify_exact(const std::vector<ExactBlock>& blocks) {
  if (blocks.empty()) throw Error("classification of an empty block list");
  bool semisimple = true;
  bool unit = true;
  for (const auto& b : blocks) {
    if (b.size > 1) semisimple = false;
    if (mod_sq(b) != 1) unit = false;
  }
  if (semisimple) return unit ? DynamicalType::Elliptic : DynamicalType::Loxodromic;
  return unit ? DynamicalType::Parabolic : DynamicalType::Loxoparabolic;
}

std::vector<int> exact_limit_kernel(const std::vector<ExactBlock>& blocks, Direction dir) {
  if (blocks.empty()) throw Error("limit kernel of an empty block list");
  size_t best = 0;
  for (size_t b = 1; b < blocks.size(); ++b)
    if (growth_greater(blocks[b], blocks[best], dir)) best = b;
  std::vector<int> sizes;
  std::vector<bool> dominant;
  for (const auto& b : blocks) {
    sizes.push_back(b.size);
    dominant.push_back(mod_sq(b) == mod_sq(blocks[best]) && b.size == blocks[best].size);
  }
  return limit_kernel_indices(sizes, dominant);
}

bool exact_same_span(const Mat<Rational>& a_cols, const Mat<Rational>& b_cols) {
  if (a_cols.rows() != b_cols.rows())
    throw DimensionMismatch("span comparison needs a shared ambient dimension");
  if (a_cols.cols() == 0 && b_cols.cols() == 0) return true;
  Mat<Rational> both(a_cols.rows(), a_cols.cols() + b_cols.cols());
  for (int i = 0; i < a_cols.rows(); ++i) {
    for (int j = 0; j < a_cols.cols(); ++j) both(i, j) = a_cols(i, j);
    for (int j = 0; j < b_cols.cols(); ++j) both(i, a_cols.cols() + j) = b_cols(i, j);
  }
  int ra = exact_rank(a_cols);
  int rb = exact_rank(b_cols);
  return ra == rb && exact_rank(both) == ra;
}

Mat<Rational> exact_coordinate_columns(int n, const std::vector<int>& indices) {
  Mat<Rational> m(n, int(indices.size()));
  for (size_t j = 0; j < indices.size(); ++j) m(indices[j], int(j)) = QuatQ(Rational(1));
  return m;
}

}  // namespace quatdyn
