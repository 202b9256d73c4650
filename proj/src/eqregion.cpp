#include "quatdyn/eqregion.hpp"

namespace quatdyn {

ProjectiveSubspace eq_region_parabolic(const JordanData& j, double tol) {
  if (classify(j, tol) != DynamicalType::Parabolic)
    throw WrongType("single-kernel rule applies only to parabolic maps");
  // Unit moduli: forward and backward growth agree, so the two limit kernels
  // coincide and one subspace carries the whole complement.
  return limit_kernel(j, Direction::Forward, tol);
}

std::pair<ProjectiveSubspace, ProjectiveSubspace> eq_region_two_sided(const JordanData& j,
                                                                      double tol) {
  DynamicalType t = classify(j, tol);
  if (t != DynamicalType::Loxodromic && t != DynamicalType::Loxoparabolic)
    throw WrongType("two-kernel rule requires distinct forward and backward growth");
  return {limit_kernel(j, Direction::Forward, tol), limit_kernel(j, Direction::Backward, tol)};
}

static std::string index_list(const ProjectiveSubspace& s) {
  // Axis-aligned subspaces produced by limit_kernel have canonical unit-vector
  // bases; recover the coordinate indices for the note text.
  std::string out;
  for (const auto& v : s.basis) {
    for (int i = 0; i < int(v.size()); ++i) {
      if (norm(v[size_t(i)]) > 0.5) {
        if (!out.empty()) out += ",";
        out += std::to_string(i + 1);
        break;
      }
    }
  }
  return out.empty() ? "none" : out;
}

EqRegionReport eq_region_from_jordan(const JordanData& j, const Tolerances& tol) {
  EqRegionReport rep;
  rep.jordan = j;
  rep.type = classify(j, tol.unit);
  int ambient = 0;
  for (const auto& b : j.blocks) ambient += b.size;

  HMatrix s_inv = inverse(j.S, tol.rank_rel);
  auto add = [&](const ProjectiveSubspace& jordan_sub, const std::string& rule) {
    rep.complement_jordan.push_back(jordan_sub);
    rep.complement.push_back(transform_subspace(s_inv, jordan_sub));
    rep.notes.push_back(rule + " spans Jordan coordinates {" + index_list(jordan_sub) + "}");
  };

  switch (rep.type) {
    case DynamicalType::Elliptic:
      rep.notes.push_back(
          "all blocks trivial with unit moduli: powers stay bounded and the whole projective "
          "space is an equicontinuity region");
      break;
    case DynamicalType::Parabolic:
      add(eq_region_parabolic(j, tol.unit),
          "shared forward/backward kernel (all Jordan directions except the final vector of "
          "every largest block)");
      break;
    case DynamicalType::Loxodromic:
    case DynamicalType::Loxoparabolic: {
      auto two = eq_region_two_sided(j, tol.unit);
      add(two.first,
          "forward kernel (all Jordan directions except the final vector of every block of "
          "maximal forward growth)");
      add(two.second,
          "backward kernel (all Jordan directions except the final vector of every block of "
          "maximal backward growth)");
      break;
    }
  }
  (void)ambient;
  return rep;
}

EqRegionReport eq_region(const HMatrix& gamma, const Tolerances& tol) {
  JordanData j = jordan_decomposition(gamma, tol);
  return eq_region_from_jordan(j, tol);
}

}  // namespace quatdyn
