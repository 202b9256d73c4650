#pragma once

// Shared test helpers: terse constructors, deterministic random generators,
// and reference implementations that are independent of the code under test.

#include <complex>
#include <random>
#include <vector>

#include "quatdyn/hmatrix.hpp"
#include "quatdyn/jordan_form.hpp"
#include "quatdyn/projective.hpp"

namespace testsupport {

using quatdyn::HMatrix;
using quatdyn::HVector;
using quatdyn::Quaternion;

inline Quaternion Q(double w = 0, double x = 0, double y = 0, double z = 0) {
  return Quaternion{w, x, y, z};
}

inline Quaternion QI() { return Quaternion::unit_i(); }
inline Quaternion QJ() { return Quaternion::unit_j(); }
inline Quaternion QK() { return Quaternion::unit_k(); }

/// Reference Hamilton product through the 4x4 real left-multiplication table,
/// written out independently of the production operator*.
inline Quaternion ref_mul(const Quaternion& a, const Quaternion& b) {
  const double l[4][4] = {{a.w, -a.x, -a.y, -a.z},
                          {a.x, a.w, -a.z, a.y},
                          {a.y, a.z, a.w, -a.x},
                          {a.z, -a.y, a.x, a.w}};
  const double v[4] = {b.w, b.x, b.y, b.z};
  double r[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += l[i][j] * v[j];
  return Quaternion{r[0], r[1], r[2], r[3]};
}

/// Deterministic generator for quaternionic test data.
struct TestRng {
  std::mt19937_64 gen;

  explicit TestRng(std::uint64_t seed) : gen(seed) {}

  double real(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }

  Quaternion quaternion(double scale = 1.0) {
    return Quaternion{scale * real(), scale * real(), scale * real(), scale * real()};
  }

  Quaternion unit_quaternion() {
    std::normal_distribution<double> g(0.0, 1.0);
    while (true) {
      Quaternion q{g(gen), g(gen), g(gen), g(gen)};
      double n = quatdyn::norm(q);
      if (n > 1e-3) return quatdyn::scale(q, 1.0 / n);
    }
  }

  HVector vector(int n, double scale = 1.0) {
    HVector v(static_cast<size_t>(n));
    for (auto& q : v) q = quaternion(scale);
    return v;
  }

  HMatrix matrix(int n, double scale = 1.0) {
    HMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = quaternion(scale);
    return m;
  }

  /// Invertible matrix with Frobenius condition estimate below max_cond.
  HMatrix conjugator(int n, double max_cond = 30.0) {
    while (true) {
      HMatrix t = HMatrix::identity(n);
      HMatrix r = matrix(n, 0.5);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(i, j) = t(i, j) + r(i, j);
      try {
        HMatrix ti = quatdyn::inverse(t);
        if (quatdyn::frobenius_norm(t) * quatdyn::frobenius_norm(ti) <= max_cond) return t;
      } catch (const quatdyn::SingularMatrix&) {
      }
    }
  }
};

inline bool same_subspace(const quatdyn::ProjectiveSubspace& a,
                          const quatdyn::ProjectiveSubspace& b, double tol = 1e-8) {
  if (a.ambient != b.ambient || a.basis.size() != b.basis.size()) return false;
  if (a.basis.empty()) return true;
  return quatdyn::subspace_dist(a, b) <= tol;
}

/// J(lambda, size) blocks assembled into one matrix, lambda given as complex.
inline HMatrix jordan_of(const std::vector<std::pair<std::complex<double>, int>>& shape) {
  std::vector<HMatrix> blocks;
  for (const auto& [lam, size] : shape)
    blocks.push_back(quatdyn::jordan_block(quatdyn::from_complex(lam), size));
  return quatdyn::direct_sum(blocks);
}

}  // namespace testsupport
