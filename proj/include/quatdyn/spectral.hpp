#pragma once

#include <complex>
#include <vector>

#include "hmatrix.hpp"
#include "tolerances.hpp"

namespace quatdyn {

/// Similarity class of right eigenvalues: canonical complex representative
/// (imaginary part >= 0) plus quaternionic algebraic multiplicity.
struct EigenClass {
  std::complex<double> rep;
  int multiplicity = 0;
};

struct JordanBlock {
  std::complex<double> rep;
  int size = 0;
};

/// Jordan normal form data: S * A * S^{-1} = direct sum of the blocks, with
/// blocks sorted by (|rep| ascending, size ascending, Im rep ascending).
struct JordanData {
  std::vector<JordanBlock> blocks;
  HMatrix S;
};

/// Right-eigenvalue classes of a square quaternionic matrix, computed from
/// the spectrum of the complex embedding: eigenvalues of Phi(A) are closed
/// under conjugation; representatives keep Im >= 0; the complex multiplicity
/// is halved when the representative is real (embedded structure doubles).
/// Classes are sorted by (|rep|, Im rep) ascending.
std::vector<EigenClass> right_eigenvalue_classes(const HMatrix& a, const Tolerances& tol = {});

/// Sizes (ascending) of the Jordan blocks attached to the given eigenvalue
/// class, from the rank staircase r_t = rank((Phi(A) - rep I)^t): the number
/// of blocks of size >= t is r_{t-1} - r_t, halved for real rep.
/// Throws UnknownEigenvalue if rep is not a computed class representative.
std::vector<int> block_sizes(const HMatrix& a, std::complex<double> rep,
                             const Tolerances& tol = {});

/// Full Jordan decomposition over H.  Throws IllConditioned when a rank or
/// clustering decision is ambiguous at tolerance or the reconstruction
/// residual exceeds tol.reconstruct.
JordanData jordan_decomposition(const HMatrix& a, const Tolerances& tol = {});

/// True iff every Jordan block has size 1, equivalently
/// rank(Phi(A) - rep I) = rank((Phi(A) - rep I)^2) for every class rep.
bool is_semisimple(const HMatrix& a, const Tolerances& tol = {});

/// Rebuild the block-diagonal Jordan matrix from block data.
HMatrix jordan_matrix(const std::vector<JordanBlock>& blocks);

}  // namespace quatdyn
