#pragma once

#include <Eigen/Dense>

#include "hmatrix.hpp"

namespace quatdyn {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Complex embedding Phi of a square quaternionic matrix A = A1 + A2 j:
///
///   Phi(A) = [  A1        A2      ]
///            [ -conj(A2)  conj(A1)]  in M(2n, C).
///
/// Phi is an injective ring homomorphism; its image is exactly the set of
/// complex matrices M with J^{-1} M J = conj(M) for J = [[0, I], [-I, 0]].
ComplexMatrix complex_embedding(const HMatrix& a);  // throws NonSquare

/// Same layout for rectangular matrices (used for column-space work where the
/// homomorphism property is not needed).
ComplexMatrix complex_embedding_rect(const HMatrix& a);

/// Vector embedding phi(v) = [v1; -conj(v2)] for v = v1 + v2 j, chosen so
/// that Phi(A) phi(v) = phi(A v) and phi(v q) = phi(v) q for complex q.
ComplexVector phi_vec(const HVector& v);

/// Inverse of phi_vec.
HVector pullback_vec(const ComplexVector& u);

/// Antilinear structure map tau([u1; u2]) = [-conj(u2); conj(u1)].
/// tau(phi(v)) = -phi(v j), so a complex subspace is the phi-image of a
/// quaternionic (right) subspace iff it is tau-invariant.
ComplexVector tau(const ComplexVector& u);

/// Read a 2n x 2n complex matrix in embedding layout back to H^{n x n}.
HMatrix pullback_mat(const ComplexMatrix& m);

/// phi-embed a list of quaternionic columns as complex columns.
ComplexMatrix phi_columns(int ambient, const std::vector<HVector>& cols);

}  // namespace quatdyn
