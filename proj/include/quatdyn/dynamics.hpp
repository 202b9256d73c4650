#pragma once

#include <vector>

#include "projective.hpp"
#include "spectral.hpp"
#include "tolerances.hpp"

namespace quatdyn {

/// Dynamical type of an invertible quaternionic projective transformation:
///   Elliptic       semisimple, all eigenvalue classes of unit modulus
///   Parabolic      non-semisimple, all classes of unit modulus
///   Loxodromic     semisimple, some class off the unit circle
///   Loxoparabolic  non-semisimple, some class off the unit circle
enum class DynamicalType { Elliptic, Parabolic, Loxodromic, Loxoparabolic };

const char* to_string(DynamicalType t);

enum class Direction { Forward, Backward };

/// Asymptotic growth rate contributed by a Jordan block under iteration:
/// |lambda|^m * m^degree, compared lexicographically in
/// (log_modulus, poly_degree).
struct GrowthOrder {
  double log_modulus = 0.0;
  int poly_degree = 0;
};

bool growth_less(const GrowthOrder& a, const GrowthOrder& b, double tol);

/// Limit of normalized powers as a projective endomorphism: a matrix of rank
/// < ambient together with its kernel and image subspaces (projective
/// dimensions add up to ambient - 2).
struct PseudoProjectiveMap {
  HMatrix matrix;
  ProjectiveSubspace kernel;
  ProjectiveSubspace image;
};

DynamicalType classify(const JordanData& j, double unit_tol = 1e-8);

/// Build the pseudo-projective data of a nonzero, non-invertible-or-not
/// matrix: kernel and image at the given relative rank tolerance.
PseudoProjectiveMap pseudo_from_matrix(const HMatrix& m, double rank_rel = 1e-9);

/// gamma^m rescaled by its largest entry norm after every multiplication.
/// Negative m uses the inverse.  Throws PowerOverflow if rescaling hits an
/// exact zero or non-finite matrix.
HMatrix normalized_power(const HMatrix& gamma, long m, double rank_rel = 1e-9);

/// Dominant growth order among the blocks in the given direction
/// (backward negates log-moduli; polynomial degrees are unchanged).
GrowthOrder dominant_growth(const JordanData& j, Direction dir, double tol = 1e-8);

GrowthOrder forward_growth(const JordanData& j, double tol = 1e-8);

/// 0-based indices of the blocks achieving the dominant growth.
std::vector<int> max_growth_blocks(const JordanData& j, Direction dir, double tol = 1e-8);

/// Kernel of the limit of normalized powers, in Jordan coordinates: the span
/// of all Jordan basis vectors except the last vector of every block that
/// achieves the dominant growth in the given direction.  (The limit of
/// J(lambda, k)^{+-m}, suitably rescaled, concentrates in the top-right
/// corner of each dominant block, so exactly those final basis vectors carry
/// the surviving image.)
ProjectiveSubspace limit_kernel(const JordanData& j, Direction dir, double tol = 1e-8);

/// Shared combinatorial core for limit_kernel: kept 0-based indices given
/// (block size, is-dominant) flags.
std::vector<int> limit_kernel_indices(const std::vector<int>& sizes,
                                      const std::vector<bool>& dominant);

}  // namespace quatdyn
