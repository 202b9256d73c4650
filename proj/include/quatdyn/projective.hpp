#pragma once

#include <vector>

#include "hmatrix.hpp"

namespace quatdyn {

/// Point of quaternionic projective space: a nonzero lift in H^{ambient},
/// stored canonically (unit Euclidean length, first nonzero coordinate made
/// real and positive by right scaling).
struct ProjectivePoint {
  HVector v;
  int ambient() const { return int(v.size()); }
};

ProjectivePoint make_point(HVector lift);  // throws ZeroInput

/// Right-Hermitian pairing <x,y> = sum_i conj(x_i) y_i.
Quaternion hermitian_pairing(const HVector& x, const HVector& y);

/// Euclidean length sqrt(<v,v>).
double vec_norm(const HVector& v);

/// Right-scale so the first coordinate with |v_i| > 1e-12 * max|v_j| is real
/// positive, then normalize to unit length.  Orthonormality of a family is
/// preserved (the scaling factors are unit quaternions).
HVector canonicalize_vector(HVector v);  // throws ZeroInput

/// Chordal metric d(x, y) = sqrt(1 - |<x,y>|^2 / (|x|^2 |y|^2)) with the
/// right-Hermitian pairing <x,y> = sum conj(x_i) y_i.  Scale-free in both
/// arguments and invariant under quaternionic unitaries.
double point_dist(const ProjectivePoint& x, const ProjectivePoint& y);

/// Projective subspace of H P^{ambient-1}: an orthonormal canonical basis of
/// the linear span of its lifts.  Projective dimension is basis size - 1;
/// the empty subspace (dimension -1) is allowed.
struct ProjectiveSubspace {
  int ambient = 0;
  std::vector<HVector> basis;
  int dim_proj() const { return int(basis.size()) - 1; }
  bool empty() const { return basis.empty(); }
};

/// Span of coordinate axes e_{i} for 0-based indices.
ProjectiveSubspace coordinate_subspace(int ambient, const std::vector<int>& indices);

/// Minimal subspace containing all given points, by column-rank reduction
/// (modified Gram-Schmidt over H with drop tolerance `tol` relative to the
/// largest input norm).
ProjectiveSubspace span_points(int ambient, const std::vector<HVector>& lifts, double tol = 1e-10);

/// Apply an invertible matrix to every basis vector and re-span.
ProjectiveSubspace transform_subspace(const HMatrix& t, const ProjectiveSubspace& s);

/// True iff the projection residual of p onto the span is below tol (in the
/// embedded space this is the distance from the line of p to the subspace).
bool contains(const ProjectiveSubspace& s, const ProjectivePoint& p, double tol = 1e-8);

double point_to_subspace_dist(const ProjectiveSubspace& s, const ProjectivePoint& p);

/// Sine of the largest principal angle between the complex embeddings; a
/// metric on each Grassmannian of fixed dimension.  Throws DimensionMismatch
/// unless ambient spaces and projective dimensions agree.
double subspace_dist(const ProjectiveSubspace& a, const ProjectiveSubspace& b);

}  // namespace quatdyn
