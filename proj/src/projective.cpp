#include "quatdyn/projective.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "quatdyn/embedding.hpp"

namespace quatdyn {

Quaternion hermitian_pairing(const HVector& x, const HVector& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("pairing of vectors of lengths " + std::to_string(x.size()) +
                            " and " + std::to_string(y.size()));
  Quaternion s;
  for (size_t i = 0; i < x.size(); ++i) s += conj(x[i]) * y[i];
  return s;
}

static double vec_norm_sq(const HVector& v) {
  double s = 0.0;
  for (const auto& q : v) s += norm_sq(q);
  return s;
}

double vec_norm(const HVector& v) { return std::sqrt(vec_norm_sq(v)); }

HVector canonicalize_vector(HVector v) {
  double mx = 0.0;
  for (const auto& q : v) mx = std::max(mx, norm(q));
  if (mx == 0.0) throw ZeroInput("cannot canonicalize the zero vector");
  size_t lead = 0;
  while (norm(v[lead]) <= 1e-12 * mx) ++lead;
  Quaternion u = conj(v[lead]);
  double s = 1.0 / (norm(u) * vec_norm(v));
  for (auto& q : v) q = scale(q * u, s);  // right scaling keeps the projective point
  return v;
}

ProjectivePoint make_point(HVector lift) { return {canonicalize_vector(std::move(lift))}; }

double point_dist(const ProjectivePoint& x, const ProjectivePoint& y) {
  double nx = vec_norm_sq(x.v), ny = vec_norm_sq(y.v);
  if (nx == 0.0 || ny == 0.0) throw ZeroInput("projective distance needs nonzero lifts");
  double c = norm_sq(hermitian_pairing(x.v, y.v)) / (nx * ny);
  if (c < 0.5) return std::sqrt(1.0 - std::min(1.0, c));
  // Close points: sqrt(1 - c) cancels, so measure the projection residual
  // of y off the line of x instead (equal to the chordal distance exactly).
  double sx = 1.0 / std::sqrt(nx), sy = 1.0 / std::sqrt(ny);
  Quaternion ip = scale(hermitian_pairing(x.v, y.v), sx * sy);
  double res = 0.0;
  for (size_t i = 0; i < x.v.size(); ++i)
    res += norm_sq(scale(y.v[i], sy) - scale(x.v[i], sx) * ip);
  return std::min(1.0, std::sqrt(res));
}

ProjectiveSubspace coordinate_subspace(int ambient, const std::vector<int>& indices) {
  ProjectiveSubspace s;
  s.ambient = ambient;
  for (int i : indices) {
    HVector e(ambient);
    e[i] = Quaternion(1.0);
    s.basis.push_back(std::move(e));
  }
  return s;
}

/// Modified Gram-Schmidt over H (right coefficients), two passes per vector.
static std::vector<HVector> orthonormalize(const std::vector<HVector>& input, double drop_tol) {
  std::vector<HVector> basis;
  double scale_max = 0.0;
  for (const auto& v : input) scale_max = std::max(scale_max, vec_norm(v));
  if (scale_max == 0.0) return basis;
  for (const auto& v0 : input) {
    HVector v = v0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        Quaternion c = hermitian_pairing(b, v);
        for (size_t i = 0; i < v.size(); ++i) v[i] -= b[i] * c;
      }
    double n = vec_norm(v);
    if (n <= drop_tol * scale_max) continue;
    double inv = 1.0 / n;
    for (auto& q : v) q = scale(q, inv);
    basis.push_back(std::move(v));
  }
  return basis;
}

ProjectiveSubspace span_points(int ambient, const std::vector<HVector>& lifts, double tol) {
  for (const auto& v : lifts)
    if (int(v.size()) != ambient)
      throw DimensionMismatch("span: lift length does not match ambient " +
                              std::to_string(ambient));
  ProjectiveSubspace s;
  s.ambient = ambient;
  for (auto& b : orthonormalize(lifts, tol)) s.basis.push_back(canonicalize_vector(std::move(b)));
  return s;
}

ProjectiveSubspace transform_subspace(const HMatrix& t, const ProjectiveSubspace& s) {
  std::vector<HVector> imgs;
  imgs.reserve(s.basis.size());
  for (const auto& b : s.basis) imgs.push_back(apply(t, b));
  return span_points(t.rows(), imgs);
}

double point_to_subspace_dist(const ProjectiveSubspace& s, const ProjectivePoint& p) {
  if (s.ambient != p.ambient())
    throw DimensionMismatch("point/subspace ambient mismatch");
  if (s.empty()) return 1.0;
  HVector v = p.v;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : s.basis) {
      Quaternion c = hermitian_pairing(b, v);
      for (size_t i = 0; i < v.size(); ++i) v[i] -= b[i] * c;
    }
  return std::min(1.0, vec_norm(v) / vec_norm(p.v));
}

bool contains(const ProjectiveSubspace& s, const ProjectivePoint& p, double tol) {
  return point_to_subspace_dist(s, p) <= tol;
}

double subspace_dist(const ProjectiveSubspace& a, const ProjectiveSubspace& b) {
  if (a.ambient != b.ambient)
    throw DimensionMismatch("subspace ambient mismatch: " + std::to_string(a.ambient) + " vs " +
                            std::to_string(b.ambient));
  if (a.dim_proj() != b.dim_proj())
    throw DimensionMismatch("subspace dimension mismatch: " + std::to_string(a.dim_proj()) +
                            " vs " + std::to_string(b.dim_proj()));
  if (a.empty()) return 0.0;
  // Embed the full spans: the embedding of the stacked columns carries both
  // phi(b) and tau(phi(b)) for each basis vector, doubling the dimension.
  ComplexMatrix qa = complex_embedding_rect(from_columns(a.ambient, a.basis));
  ComplexMatrix qb = complex_embedding_rect(from_columns(b.ambient, b.basis));
  // Orthonormal complex bases of the embedded spans.
  Eigen::HouseholderQR<ComplexMatrix> qra(qa), qrb(qb);
  ComplexMatrix ua = qra.householderQ() * ComplexMatrix::Identity(qa.rows(), qa.cols());
  ComplexMatrix ub = qrb.householderQ() * ComplexMatrix::Identity(qb.rows(), qb.cols());
  // sin of the largest principal angle as || (I - ua ua*) ub ||_2; direct
  // residual form, no sqrt(1 - cos^2) cancellation near zero.
  ComplexMatrix residual = ub - ua * (ua.adjoint() * ub);
  Eigen::JacobiSVD<ComplexMatrix> svd(residual);
  return std::min(1.0, svd.singularValues()(0));
}

}  // namespace quatdyn
