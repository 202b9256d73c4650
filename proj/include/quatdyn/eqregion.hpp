#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quatdyn/dynamics.hpp"
#include "quatdyn/hmatrix.hpp"
#include "quatdyn/projective.hpp"
#include "quatdyn/spectral.hpp"
#include "quatdyn/tolerances.hpp"

namespace quatdyn {

/// Equicontinuity region of the cyclic group generated by one transformation,
/// described through its complement: the projective subspaces that must be
/// removed from projective space.  An empty complement means the whole space
/// is an equicontinuity region.
struct EqRegionReport {
  DynamicalType type = DynamicalType::Elliptic;
  /// Complement subspaces in the original coordinates.
  std::vector<ProjectiveSubspace> complement;
  /// The same subspaces in Jordan coordinates (axis-aligned spans).
  std::vector<ProjectiveSubspace> complement_jordan;
  /// The Jordan decomposition the analysis was based on.
  JordanData jordan;
  /// Human-readable notes naming the rule that produced each subspace.
  std::vector<std::string> notes;
};

/// Kernel of the single pseudo-projective limit of a parabolic map, in Jordan
/// coordinates.  Throws WrongType unless the blocks describe a parabolic map.
ProjectiveSubspace eq_region_parabolic(const JordanData& j, double tol = 1e-8);

/// Forward and backward limit kernels of a map with growth separation
/// (loxodromic or loxoparabolic), in Jordan coordinates.
/// Throws WrongType for elliptic or parabolic input.
std::pair<ProjectiveSubspace, ProjectiveSubspace> eq_region_two_sided(const JordanData& j,
                                                                      double tol = 1e-8);

/// Full analysis of one transformation: Jordan decomposition, dynamical type,
/// and the complement of the equicontinuity region in both coordinate systems.
EqRegionReport eq_region(const HMatrix& gamma, const Tolerances& tol = {});

/// Assemble the report from an existing decomposition (shared by the general
/// pipeline and the assume-jordan fast path).
EqRegionReport eq_region_from_jordan(const JordanData& j, const Tolerances& tol = {});

}  // namespace quatdyn
