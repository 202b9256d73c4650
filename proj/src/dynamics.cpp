#include "quatdyn/dynamics.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "quatdyn/embedding.hpp"

namespace quatdyn {

const char* to_string(DynamicalType t) {
  switch (t) {
    case DynamicalType::Elliptic: return "elliptic";
    case DynamicalType::Parabolic: return "parabolic";
    case DynamicalType::Loxodromic: return "loxodromic";
    case DynamicalType::Loxoparabolic: return "loxoparabolic";
  }
  return "?";
}

bool growth_less(const GrowthOrder& a, const GrowthOrder& b, double tol) {
  if (std::abs(a.log_modulus - b.log_modulus) > tol) return a.log_modulus < b.log_modulus;
  return a.poly_degree < b.poly_degree;
}

DynamicalType classify(const JordanData& j, double unit_tol) {
  bool semisimple = true;
  bool unit = true;
  for (const auto& b : j.blocks) {
    if (b.size > 1) semisimple = false;
    if (std::abs(std::abs(b.rep) - 1.0) > unit_tol) unit = false;
  }
  if (semisimple) return unit ? DynamicalType::Elliptic : DynamicalType::Loxodromic;
  return unit ? DynamicalType::Parabolic : DynamicalType::Loxoparabolic;
}

PseudoProjectiveMap pseudo_from_matrix(const HMatrix& m, double rank_rel) {
  if (!m.square()) throw NonSquare("pseudo-projective data requires a square matrix");
  const int n = m.rows();
  max_entry(m);  // throws ZeroInput on the zero matrix
  ComplexMatrix phi = complex_embedding(m);
  Eigen::JacobiSVD<ComplexMatrix> svd(phi, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = rank_rel * 2.0 * n * sv(0);
  int rank_c = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank_c;

  PseudoProjectiveMap out;
  out.matrix = m;
  // Kernel: pull the small right-singular directions back to H (the null
  // space of Phi is tau-invariant, so greedy pullback yields half as many
  // quaternionic directions).
  std::vector<HVector> null_pulls;
  for (int i = rank_c; i < sv.size(); ++i) null_pulls.push_back(pullback_vec(svd.matrixV().col(i)));
  out.kernel = span_points(n, null_pulls);
  // Image: the quaternionic column space.
  std::vector<HVector> cols;
  for (int jcol = 0; jcol < n; ++jcol) cols.push_back(column(m, jcol));
  out.image = span_points(n, cols, rank_rel * 2.0 * n);
  return out;
}

HMatrix normalized_power(const HMatrix& gamma, long m, double rank_rel) {
  if (!gamma.square()) throw NonSquare("normalized power requires a square matrix");
  const int n = gamma.rows();
  HMatrix base = m >= 0 ? gamma : inverse(gamma, rank_rel);
  long steps = m >= 0 ? m : -m;
  HMatrix acc = HMatrix::identity(n);
  auto renorm = [&](HMatrix& h) {
    double mx = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mx = std::max(mx, norm(h(i, j)));
    if (mx == 0.0 || !std::isfinite(mx))
      throw PowerOverflow("normalized power degenerated (max entry " + std::to_string(mx) + ")");
    double inv = 1.0 / mx;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h(i, j) = scale(h(i, j), inv);
  };
  for (long s = 0; s < steps; ++s) {
    acc = acc * base;
    renorm(acc);
  }
  if (steps == 0) renorm(acc);
  return acc;
}

static double block_log_modulus(const JordanBlock& b) { return std::log(std::abs(b.rep)); }

GrowthOrder dominant_growth(const JordanData& j, Direction dir, double tol) {
  if (j.blocks.empty()) throw Error("growth order of an empty block list");
  GrowthOrder best;
  bool first = true;
  for (const auto& b : j.blocks) {
    double lm = block_log_modulus(b);
    GrowthOrder g{dir == Direction::Forward ? lm : -lm, b.size - 1};
    if (first || growth_less(best, g, tol)) {
      best = g;
      first = false;
    }
  }
  return best;
}

GrowthOrder forward_growth(const JordanData& j, double tol) {
  return dominant_growth(j, Direction::Forward, tol);
}

std::vector<int> max_growth_blocks(const JordanData& j, Direction dir, double tol) {
  GrowthOrder top = dominant_growth(j, dir, tol);
  std::vector<int> out;
  for (size_t b = 0; b < j.blocks.size(); ++b) {
    double lm = block_log_modulus(j.blocks[b]);
    GrowthOrder g{dir == Direction::Forward ? lm : -lm, j.blocks[b].size - 1};
    if (!growth_less(g, top, tol)) out.push_back(int(b));
  }
  return out;
}

std::vector<int> limit_kernel_indices(const std::vector<int>& sizes,
                                      const std::vector<bool>& dominant) {
  std::vector<int> kept;
  int off = 0;
  for (size_t b = 0; b < sizes.size(); ++b) {
    for (int r = 0; r < sizes[b]; ++r) {
      bool last = (r == sizes[b] - 1);
      if (!(last && dominant[b])) kept.push_back(off + r);
    }
    off += sizes[b];
  }
  return kept;
}

ProjectiveSubspace limit_kernel(const JordanData& j, Direction dir, double tol) {
  std::vector<int> dom = max_growth_blocks(j, dir, tol);
  std::vector<int> sizes;
  std::vector<bool> dominant(j.blocks.size(), false);
  for (const auto& b : j.blocks) sizes.push_back(b.size);
  for (int b : dom) dominant[size_t(b)] = true;
  int ambient = 0;
  for (int s : sizes) ambient += s;
  return coordinate_subspace(ambient, limit_kernel_indices(sizes, dominant));
}

}  // namespace quatdyn
