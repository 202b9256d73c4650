#include <doctest.h>

#include "quatdyn/eqregion.hpp"
#include "quatdyn/jordan_form.hpp"
#include "support.hpp"

using namespace quatdyn;
using testsupport::Q;
using testsupport::TestRng;

namespace {

JordanData jd(std::vector<JordanBlock> blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.size;
  return JordanData{std::move(blocks), HMatrix::identity(n)};
}

}  // namespace

TEST_CASE("elliptic maps are equicontinuous everywhere") {
  EqRegionReport rep = eq_region(diagonal(HVector{Quaternion::unit_i(), Quaternion::unit_j()}));
  CHECK(rep.type == DynamicalType::Elliptic);
  CHECK(rep.complement.empty());
  CHECK(rep.complement_jordan.empty());
  REQUIRE(rep.notes.size() == 1);
  CHECK(rep.notes[0].find("bounded") != std::string::npos);
}

TEST_CASE("parabolic single block removes the chain below its top") {
  EqRegionReport rep = eq_region(testsupport::jordan_of({{{1, 0}, 2}}));
  CHECK(rep.type == DynamicalType::Parabolic);
  REQUIRE(rep.complement.size() == 1);
  REQUIRE(rep.complement_jordan.size() == 1);
  CHECK(testsupport::same_subspace(rep.complement_jordan[0], coordinate_subspace(2, {0})));
  CHECK(testsupport::same_subspace(rep.complement[0], coordinate_subspace(2, {0})));
  REQUIRE(rep.notes.size() == 1);
  CHECK(rep.notes[0].find("Jordan coordinates {1}") != std::string::npos);
}

TEST_CASE("parabolic mixed shapes drop the last vector of maximal blocks only") {
  // J(1,3) + J(i,2): the 3-chain dominates, so only its last vector is cut.
  // Canonical sorting puts the shorter block first, so the 3-chain occupies
  // Jordan coordinates {2,3,4} and the cut falls on index 4.
  EqRegionReport rep = eq_region(testsupport::jordan_of({{{1, 0}, 3}, {{0, 1}, 2}}));
  CHECK(rep.type == DynamicalType::Parabolic);
  REQUIRE(rep.complement_jordan.size() == 1);
  CHECK(testsupport::same_subspace(rep.complement_jordan[0],
                                   coordinate_subspace(5, {0, 1, 2, 3})));
  // In the input coordinates the cut is the last vector of the leading chain.
  CHECK(testsupport::same_subspace(rep.complement[0], coordinate_subspace(5, {0, 1, 3, 4})));

  // Equal chains: both are maximal, both lose their last vector.
  EqRegionReport rep2 = eq_region(testsupport::jordan_of({{{1, 0}, 2}, {{0, 1}, 2}}));
  REQUIRE(rep2.complement_jordan.size() == 1);
  CHECK(testsupport::same_subspace(rep2.complement_jordan[0], coordinate_subspace(4, {0, 2})));
}

TEST_CASE("loxodromic maps lose forward and backward attractor complements") {
  EqRegionReport rep = eq_region(diagonal(HVector{Q(1), Q(1), Q(3)}));
  CHECK(rep.type == DynamicalType::Loxodromic);
  REQUIRE(rep.complement.size() == 2);
  // Forward: everything but the top of the dominant block(s).
  CHECK(testsupport::same_subspace(rep.complement_jordan[0], coordinate_subspace(3, {0, 1})));
  // Backward: the unit-modulus pair dominates; both lose their vector.
  CHECK(testsupport::same_subspace(rep.complement_jordan[1], coordinate_subspace(3, {2})));
  REQUIRE(rep.notes.size() == 2);
  CHECK(rep.notes[0].find("forward") != std::string::npos);
  CHECK(rep.notes[1].find("backward") != std::string::npos);
}

TEST_CASE("loxoparabolic kernels mix chain depth and modulus") {
  // J(1,2) + [2]: forward dominated by modulus 2, backward by the unit chain.
  EqRegionReport rep =
      eq_region(direct_sum<double>({jordan_block(Q(1), 2), jordan_block(Q(2), 1)}));
  CHECK(rep.type == DynamicalType::Loxoparabolic);
  REQUIRE(rep.complement_jordan.size() == 2);
  CHECK(testsupport::same_subspace(rep.complement_jordan[0], coordinate_subspace(3, {0, 1})));
  CHECK(testsupport::same_subspace(rep.complement_jordan[1], coordinate_subspace(3, {0, 2})));
}

TEST_CASE("wrong-type guards on the specialized entry points") {
  JordanData elliptic = jd({{{0, 1}, 1}});
  JordanData parabolic = jd({{{1, 0}, 2}});
  JordanData loxodromic = jd({{{0.5, 0}, 1}, {{2, 0}, 1}});
  CHECK_THROWS_AS(eq_region_parabolic(elliptic), WrongType);
  CHECK_THROWS_AS(eq_region_parabolic(loxodromic), WrongType);
  CHECK_THROWS_AS(eq_region_two_sided(parabolic), WrongType);
  CHECK_THROWS_AS(eq_region_two_sided(elliptic), WrongType);
  CHECK(eq_region_parabolic(parabolic).dim_proj() == 0);
  auto [fwd, bwd] = eq_region_two_sided(loxodromic);
  CHECK(testsupport::same_subspace(fwd, coordinate_subspace(2, {0})));
  CHECK(testsupport::same_subspace(bwd, coordinate_subspace(2, {1})));
}

TEST_CASE("reports transport the complement to the original coordinates") {
  TestRng rng(701);
  HMatrix jmat = direct_sum<double>({jordan_block(Quaternion::unit_i(), 2), jordan_block(Q(2), 1)});
  HMatrix t = rng.conjugator(3);
  HMatrix g = t * (jmat * inverse(t));
  EqRegionReport rep = eq_region(g);
  CHECK(rep.type == DynamicalType::Loxoparabolic);
  REQUIRE(rep.complement.size() == 2);
  // Jordan coordinates of the conjugate are the same axis-aligned spans.
  CHECK(testsupport::same_subspace(rep.complement_jordan[0], coordinate_subspace(3, {0, 1})));
  CHECK(testsupport::same_subspace(rep.complement_jordan[1], coordinate_subspace(3, {0, 2})));
  // Original coordinates: the transported spans, tested equivariantly.
  EqRegionReport base = eq_region(jmat);
  for (size_t s = 0; s < 2; ++s)
    CHECK(subspace_dist(rep.complement[s], transform_subspace(t, base.complement[s])) <= 1e-6);
}

TEST_CASE("powers of a map share its equicontinuity complement") {
  HMatrix g = direct_sum<double>({jordan_block(Quaternion::unit_i(), 2), jordan_block(Q(2), 1)});
  EqRegionReport base = eq_region(g);
  HMatrix p = g;
  for (int k = 2; k <= 3; ++k) {
    p = p * g;
    EqRegionReport rep = eq_region(p);
    CHECK(rep.type == base.type);
    REQUIRE(rep.complement.size() == base.complement.size());
    for (size_t s = 0; s < rep.complement.size(); ++s)
      CHECK(subspace_dist(rep.complement[s], base.complement[s]) <= 1e-7);
  }
}

TEST_CASE("report notes name the producing rule") {
  EqRegionReport two = eq_region(diagonal(HVector{Q(0.5), Q(2)}));
  REQUIRE(two.notes.size() == 2);
  CHECK(two.notes[0].find("maximal forward growth") != std::string::npos);
  EqRegionReport par = eq_region(testsupport::jordan_of({{{1, 0}, 2}}));
  REQUIRE(par.notes.size() == 1);
  CHECK(par.notes[0].find("shared forward/backward kernel") != std::string::npos);
}

TEST_CASE("assume-jordan fast path agrees with the general pipeline") {
  HMatrix jmat = direct_sum<double>({jordan_block(Q(2), 1), jordan_block(Quaternion::unit_i(), 2)});
  EqRegionReport general = eq_region(jmat);
  EqRegionReport structural = eq_region_from_jordan(jordan_data_from_structure(jmat, 1e-10), {});
  CHECK(general.type == structural.type);
  REQUIRE(general.complement.size() == structural.complement.size());
  for (size_t s = 0; s < general.complement.size(); ++s)
    CHECK(subspace_dist(general.complement[s], structural.complement[s]) <= 1e-8);
}
