#pragma once

#include <string>

#include <json.hpp>

#include "quatdyn/eqregion.hpp"
#include "quatdyn/hmatrix.hpp"
#include "quatdyn/oracle.hpp"
#include "quatdyn/projective.hpp"
#include "quatdyn/spectral.hpp"

namespace quatdyn {

using Json = nlohmann::json;

/// JSON shapes:
///   quaternion          [a0, a1, a2, a3]
///   matrix              {"n": N, "entries": [[q, ...], ...]}  (row-major)
///   Jordan block        {"re": x, "im": y, "size": k}
///   Jordan data         {"blocks": [...], "S": matrix}
///   projective subspace {"ambient": N, "basis": [[q, ...], ...]}
/// Keys serialize in sorted order and numbers round-trip exactly, so
/// dump(parse(dump(x))) == dump(x).

void to_json(Json& j, const Quaternion& q);
void from_json(const Json& j, Quaternion& q);

void to_json(Json& j, const HMatrix& m);
void from_json(const Json& j, HMatrix& m);

void to_json(Json& j, const JordanBlock& b);
void from_json(const Json& j, JordanBlock& b);

void to_json(Json& j, const JordanData& d);
void from_json(const Json& j, JordanData& d);

void to_json(Json& j, const ProjectiveSubspace& s);
void from_json(const Json& j, ProjectiveSubspace& s);

void to_json(Json& j, const EqRegionReport& r);

void to_json(Json& j, const VerificationCheck& c);
void to_json(Json& j, const VerificationSummary& s);

/// Validate and convert {"n", "entries"}; throws Error with a readable
/// message on any shape problem.
HMatrix read_matrix_json(const Json& j);

/// Parse a JSON file and read a matrix from it; throws Error on both parse
/// and validation failures.
HMatrix read_matrix_file(const std::string& path);

/// Compact dump with sorted keys (the canonical text form used everywhere).
std::string canonical_dump(const Json& j);

}  // namespace quatdyn
