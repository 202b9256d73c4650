#include "quatdyn/io.hpp"

#include <fstream>

#include "quatdyn/dynamics.hpp"

namespace quatdyn {

void to_json(Json& j, const Quaternion& q) { j = Json::array({q.w, q.x, q.y, q.z}); }

void from_json(const Json& j, Quaternion& q) {
  if (!j.is_array() || j.size() != 4)
    throw Error("a quaternion must be an array of four numbers");
  for (const auto& c : j)
    if (!c.is_number()) throw Error("a quaternion must be an array of four numbers");
  q = Quaternion{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

void to_json(Json& j, const HMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    rows.push_back(std::move(row));
  }
  j = Json{{"n", m.rows()}, {"entries", std::move(rows)}};
}

void from_json(const Json& j, HMatrix& m) { m = read_matrix_json(j); }

void to_json(Json& j, const JordanBlock& b) {
  j = Json{{"re", b.rep.real()}, {"im", b.rep.imag()}, {"size", b.size}};
}

void from_json(const Json& j, JordanBlock& b) {
  b.rep = std::complex<double>(j.at("re").get<double>(), j.at("im").get<double>());
  b.size = j.at("size").get<int>();
}

void to_json(Json& j, const JordanData& d) {
  j = Json{{"blocks", d.blocks}, {"S", d.S}};
}

void from_json(const Json& j, JordanData& d) {
  d.blocks = j.at("blocks").get<std::vector<JordanBlock>>();
  d.S = read_matrix_json(j.at("S"));
}

void to_json(Json& j, const ProjectiveSubspace& s) {
  j = Json{{"ambient", s.ambient}, {"basis", s.basis}};
}

void from_json(const Json& j, ProjectiveSubspace& s) {
  s.ambient = j.at("ambient").get<int>();
  s.basis = j.at("basis").get<std::vector<HVector>>();
  for (const auto& b : s.basis)
    if (int(b.size()) != s.ambient)
      throw Error("subspace basis vector length does not match ambient dimension");
}

void to_json(Json& j, const EqRegionReport& r) {
  j = Json{{"type", to_string(r.type)},
           {"complement", r.complement},
           {"complement_jordan", r.complement_jordan},
           {"jordan", r.jordan},
           {"notes", r.notes}};
}

void to_json(Json& j, const VerificationCheck& c) {
  j = Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

void to_json(Json& j, const VerificationSummary& s) {
  j = Json{{"checks", s.checks}, {"all_passed", s.all_passed()}};
}

HMatrix read_matrix_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw Error("a matrix must be an object with keys \"n\" and \"entries\"");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw Error("\"n\" must be a positive integer");
  int n = j["n"].get<int>();
  const Json& entries = j["entries"];
  if (!entries.is_array() || int(entries.size()) != n)
    throw Error("\"entries\" must be an array of " + std::to_string(n) + " rows");
  HMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = entries[size_t(i)];
    if (!row.is_array() || int(row.size()) != n)
      throw Error("row " + std::to_string(i + 1) + " must have " + std::to_string(n) +
                  " entries");
    for (int c = 0; c < n; ++c) m(i, c) = row[size_t(c)].get<Quaternion>();
  }
  return m;
}

HMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
  return read_matrix_json(j);
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace quatdyn
