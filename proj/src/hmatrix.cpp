#include "quatdyn/hmatrix.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "quatdyn/embedding.hpp"

namespace quatdyn {

MaxEntry max_entry(const HMatrix& a) {
  MaxEntry best;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      double v = norm(a(i, j));
      if (v > best.value) best = {v, i + 1, j + 1};
    }
  if (best.value == 0.0) throw ZeroInput("max_entry of the zero matrix");
  return best;
}

double frobenius_norm(const HMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += norm_sq(a(i, j));
  return std::sqrt(s);
}

double study_determinant(const HMatrix& a) {
  ComplexMatrix m = complex_embedding(a);
  std::complex<double> d = Eigen::PartialPivLU<ComplexMatrix>(m).determinant();
  // The determinant of an embedded matrix is real and nonnegative; the
  // imaginary part is numerical noise.
  return std::max(d.real(), 0.0);
}

HMatrix inverse(const HMatrix& a, double rank_rel) {
  ComplexMatrix m = complex_embedding(a);
  if (m.rows() == 0) return a;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  double cutoff = rank_rel * std::max(a.rows(), a.cols()) * sv(0);
  if (sv(0) == 0.0 || sv(sv.size() - 1) <= cutoff)
    throw SingularMatrix("matrix is singular at rank tolerance (sigma_min/sigma_max = " +
                         std::to_string(sv(0) == 0.0 ? 0.0 : sv(sv.size() - 1) / sv(0)) + ")");
  return pullback_mat(m.partialPivLu().inverse());
}

int rank(const HMatrix& a, double rank_rel) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  ComplexMatrix m = complex_embedding_rect(a);
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0;
  double cutoff = rank_rel * std::max(a.rows(), a.cols()) * sv(0);
  int above = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++above;
  // Singular values of an embedded matrix come in equal pairs, so the count
  // is even whenever the cutoff does not split a pair.
  return (above + 1) / 2;
}

}  // namespace quatdyn
