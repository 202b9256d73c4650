#include "quatdyn/embedding.hpp"

namespace quatdyn {

static ComplexMatrix embed_impl(const HMatrix& a) {
  const int r = a.rows(), c = a.cols();
  ComplexMatrix m(2 * r, 2 * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      auto [a1, a2] = complex_parts(a(i, j));
      m(i, j) = a1;
      m(i, j + c) = a2;
      m(i + r, j) = -std::conj(a2);
      m(i + r, j + c) = std::conj(a1);
    }
  return m;
}

ComplexMatrix complex_embedding(const HMatrix& a) {
  if (!a.square()) throw NonSquare("complex embedding requires a square matrix, got " + a.shape_str());
  return embed_impl(a);
}

ComplexMatrix complex_embedding_rect(const HMatrix& a) { return embed_impl(a); }

ComplexVector phi_vec(const HVector& v) {
  const int n = int(v.size());
  ComplexVector u(2 * n);
  for (int i = 0; i < n; ++i) {
    auto [v1, v2] = complex_parts(v[i]);
    u(i) = v1;
    u(i + n) = -std::conj(v2);
  }
  return u;
}

HVector pullback_vec(const ComplexVector& u) {
  const int n = int(u.size()) / 2;
  HVector v(n);
  for (int i = 0; i < n; ++i) v[i] = from_complex_parts(u(i), -std::conj(u(i + n)));
  return v;
}

ComplexVector tau(const ComplexVector& u) {
  const int n = int(u.size()) / 2;
  ComplexVector t(2 * n);
  for (int i = 0; i < n; ++i) {
    t(i) = -std::conj(u(i + n));
    t(i + n) = std::conj(u(i));
  }
  return t;
}

HMatrix pullback_mat(const ComplexMatrix& m) {
  const int n = int(m.rows()) / 2;
  HMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = from_complex_parts(m(i, j), m(i, j + n));
  return a;
}

ComplexMatrix phi_columns(int ambient, const std::vector<HVector>& cols) {
  ComplexMatrix m(2 * ambient, int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.col(long(j)) = phi_vec(cols[j]);
  return m;
}

}  // namespace quatdyn
