#include "quatdyn/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "quatdyn/embedding.hpp"
#include "quatdyn/jordan_form.hpp"

namespace quatdyn {

namespace {

using Complex = std::complex<double>;

constexpr double kOrderEps = 1e-10;  // tie tolerance for sorting keys

/// Merge radius for a candidate cluster: a defective class of block size s
/// smears its computed eigenvalues by roughly machine_eps^(1/s), so the
/// radius grows with the candidate size (capped by the quaternionic ambient
/// dimension, the largest possible block).
double cluster_radius(double center_mod, int size, int ambient_q, const Tolerances& tol) {
  int s = std::max(1, std::min(size, ambient_q));
  double smear = std::pow(tol.cluster_floor, 1.0 / double(s));
  return (1.0 + center_mod) * std::max(tol.spectral, smear);
}

struct Cluster {
  Complex sum{};
  int size = 0;
  Complex center() const { return sum / double(size); }
};

std::vector<Cluster> agglomerate(const std::vector<Complex>& eigs, int ambient_q,
                                 const Tolerances& tol) {
  std::vector<Cluster> cl;
  cl.reserve(eigs.size());
  for (Complex e : eigs) cl.push_back({e, 1});
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < cl.size() && !merged; ++i)
      for (size_t j = i + 1; j < cl.size() && !merged; ++j) {
        Complex ci = cl[i].center(), cj = cl[j].center();
        int s = cl[i].size + cl[j].size;
        double r = cluster_radius(0.5 * (std::abs(ci) + std::abs(cj)), s, ambient_q, tol);
        if (std::abs(ci - cj) <= r) {
          cl[i].sum += cl[j].sum;
          cl[i].size += cl[j].size;
          cl.erase(cl.begin() + long(j));
          merged = true;
        }
      }
  }
  return cl;
}

struct ClassInfo {
  Complex rep;      // canonical representative, Im >= 0
  int m_phi = 0;    // complex dimension of its generalized eigenspace in Phi(A)
  bool real = false;
  int mult() const { return real ? m_phi / 2 : m_phi; }
  int max_block() const { return mult(); }
};

/// Full SVD guarded against the exactly-zero matrix, whose V factor the
/// solver leaves uninitialized: the kernel of 0 is everything, so V = I.
void guarded_full_svd(const ComplexMatrix& m, Eigen::VectorXd& sv, ComplexMatrix& v) {
  const auto n2 = m.rows();
  if (m.norm() < 1e-250) {
    sv = Eigen::VectorXd::Zero(n2);
    v = ComplexMatrix::Identity(n2, n2);
    return;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  sv = svd.singularValues();
  v = svd.matrixV();
}

/// Normalized power N^p (Frobenius-rescaled each step; rescaling by positive
/// reals does not move singular-value ratios or singular subspaces).
ComplexMatrix normalized_cpower(const ComplexMatrix& n, int p) {
  // Rescale only at healthy magnitudes: complex division by a denormal-range
  // scalar squares it into underflow and poisons the matrix with NaN.
  auto renorm = [](ComplexMatrix& m) {
    double nrm = m.norm();
    if (nrm > 1e-150) m /= nrm;
  };
  ComplexMatrix t = n;
  renorm(t);
  for (int i = 1; i < p; ++i) {
    t = t * n;
    renorm(t);
  }
  return t;
}

/// One trace-refinement pass: project onto the class generalized eigenspace
/// (the m_phi smallest singular directions of (Phi - rep)^max_block) and take
/// the mean eigenvalue of the restriction.  Cures the eigenvalue smear of
/// defective classes, which the raw solver output cannot avoid.
void refine_reps(const ComplexMatrix& phi, std::vector<ClassInfo>& classes) {
  const int n2 = int(phi.rows());
  for (auto& c : classes) {
    int p = std::max(1, c.max_block());
    ComplexMatrix n = phi - c.rep * ComplexMatrix::Identity(n2, n2);
    ComplexMatrix t = normalized_cpower(n, p);
    Eigen::VectorXd sv;
    ComplexMatrix vfull;
    guarded_full_svd(t, sv, vfull);
    ComplexMatrix v = vfull.rightCols(c.m_phi);
    Complex mean = (v.adjoint() * phi * v).trace() / double(c.m_phi);
    c.rep = c.real ? Complex(mean.real(), 0.0) : Complex(mean.real(), std::abs(mean.imag()));
  }
}

std::vector<ClassInfo> analyze_classes(const ComplexMatrix& phi, int ambient_q,
                                       const Tolerances& tol) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(phi, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw IllConditioned("eigenvalue iteration failed to converge");
  std::vector<Complex> eigs(es.eigenvalues().data(), es.eigenvalues().data() + phi.rows());
  std::vector<Cluster> clusters = agglomerate(eigs, ambient_q, tol);

  std::vector<ClassInfo> classes;
  std::vector<bool> used(clusters.size(), false);
  for (size_t i = 0; i < clusters.size(); ++i) {
    if (used[i]) continue;
    Complex c = clusters[i].center();
    double r = cluster_radius(std::abs(c), clusters[i].size, ambient_q, tol);
    if (std::abs(c.imag()) <= r) {
      if (clusters[i].size % 2 != 0)
        throw IllConditioned("real eigenvalue cluster of odd size " +
                             std::to_string(clusters[i].size));
      classes.push_back({Complex(c.real(), 0.0), clusters[i].size, true});
      used[i] = true;
      continue;
    }
    // Non-real: locate the conjugate cluster (the embedded spectrum is
    // conjugation-closed, so it must exist with the same size).
    size_t partner = clusters.size();
    for (size_t j = 0; j < clusters.size(); ++j) {
      if (j == i || used[j]) continue;
      if (std::abs(clusters[j].center() - std::conj(c)) <= r) {
        partner = j;
        break;
      }
    }
    if (partner == clusters.size() || clusters[partner].size != clusters[i].size)
      throw IllConditioned("eigenvalue cluster near " + std::to_string(c.real()) + "+" +
                           std::to_string(c.imag()) + "i lacks a matching conjugate cluster");
    used[i] = used[partner] = true;
    Complex rep = c.imag() > 0.0 ? c : std::conj(c);
    classes.push_back({rep, clusters[i].size, false});
  }

  int total = 0;
  for (const auto& c : classes) total += c.m_phi * (c.real ? 1 : 2);
  if (total != int(phi.rows()))
    throw IllConditioned("eigenvalue class multiplicities do not account for the spectrum");

  refine_reps(phi, classes);
  refine_reps(phi, classes);

  std::sort(classes.begin(), classes.end(), [](const ClassInfo& a, const ClassInfo& b) {
    double ma = std::abs(a.rep), mb = std::abs(b.rep);
    if (std::abs(ma - mb) > kOrderEps * (1.0 + std::max(ma, mb))) return ma < mb;
    return a.rep.imag() < b.rep.imag();
  });
  return classes;
}

struct Staircase {
  std::vector<int> d;                 // d[t-1] = complex deficiency of N^t
  std::vector<ComplexMatrix> kernels; // kernels[t-1] = orthonormal null basis of N^t
};

/// Deficiency staircase of N = Phi(A) - rep I restricted to one class.  The
/// admissible deficiency at each power is confined to a window forced by
/// Jordan theory (strict growth until saturation at m_phi, non-increasing
/// increments, even values for real classes); within the window the cut is
/// placed at the largest singular-value gap and an ambiguous gap raises
/// IllConditioned.
Staircase class_staircase(const ComplexMatrix& phi, const ClassInfo& cls, int ambient_q,
                          const Tolerances& tol) {
  const int n2 = int(phi.rows());
  ComplexMatrix n = phi - cls.rep * ComplexMatrix::Identity(n2, n2);
  const int step = cls.real ? 2 : 1;
  Staircase st;
  ComplexMatrix nt = ComplexMatrix::Identity(n2, n2);
  int d_prev = 0, drop_prev = cls.m_phi;
  for (int t = 1; t <= std::max(1, cls.max_block()); ++t) {
    nt = nt * n;
    double nt_norm = nt.norm();
    if (nt_norm > 1e-150) nt /= nt_norm;
    Eigen::VectorXd sv;
    ComplexMatrix v;
    guarded_full_svd(nt, sv, v);
    int lo = d_prev + step;
    int hi = std::min(cls.m_phi, d_prev + drop_prev);
    if (lo > hi)
      throw IllConditioned("rank staircase inconsistent for class at power " + std::to_string(t));
    int d_t = lo;
    if (lo < hi) {
      // Clamp both sides of a candidate gap to a floor relative to the top
      // singular value: a tail of near-zero values must not win the cut just
      // because one of them underflows to exactly zero.
      double smax = sv.size() > 0 ? sv(0) : 0.0;
      double sv_floor = std::max(1e-300, 1e-14 * smax);
      double best_gap = -1.0;
      for (int d = lo; d <= hi; d += step) {
        int rank = n2 - d;
        double kept = rank >= 1 ? sv(rank - 1) : std::max(1.0, smax);
        double dropped = rank < n2 ? sv(rank) : 0.0;
        double gap = std::max(kept, sv_floor) / std::max(dropped, sv_floor);
        if (gap > best_gap) {
          best_gap = gap;
          d_t = d;
        }
      }
      if (best_gap < tol.gap_ambiguity) {
        int rank = n2 - d_t;
        throw IllConditioned("ambiguous rank gap in staircase power " + std::to_string(t),
                             rank < n2 ? sv(rank) / sv(0) : 0.0, sv(rank - 1) / sv(0));
      }
    }
    st.d.push_back(d_t);
    st.kernels.push_back(v.rightCols(d_t));
    drop_prev = d_t - d_prev;
    d_prev = d_t;
    if (d_t == cls.m_phi) break;
  }
  if (d_prev != cls.m_phi)
    throw IllConditioned("rank staircase failed to saturate the class multiplicity");
  return st;
}

/// Quaternionic block counts: q[t-1] = number of blocks of size >= t.
std::vector<int> quaternionic_block_counts(const Staircase& st, const ClassInfo& cls) {
  std::vector<int> q;
  int prev = 0;
  for (int d : st.d) {
    int complex_blocks = d - prev;
    q.push_back(cls.real ? complex_blocks / 2 : complex_blocks);
    prev = d;
  }
  return q;
}

std::vector<int> sizes_from_counts(const std::vector<int>& q) {
  std::vector<int> sizes;
  for (size_t t = 0; t < q.size(); ++t) {
    int exact = q[t] - (t + 1 < q.size() ? q[t + 1] : 0);
    for (int i = 0; i < exact; ++i) sizes.push_back(int(t) + 1);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

struct Chain {
  Complex rep;
  std::vector<HVector> vectors;        // bottom (eigenvector) .. top
  std::vector<ComplexVector> complex_; // same, embedded
  int height() const { return int(vectors.size()); }
};

ComplexVector residual_against(const ComplexMatrix& q, const ComplexVector& u) {
  if (q.cols() == 0) return u;
  return u - q * (q.adjoint() * u);
}

void append_orthonormal(ComplexMatrix& q, const ComplexVector& u) {
  ComplexVector r = residual_against(q, u);
  double n = r.norm();
  if (n < 1e-12) return;  // already inside the span
  q.conservativeResize(u.size(), q.cols() + 1);
  q.col(q.cols() - 1) = r / n;
}

/// Jordan chains of one class via the kernel staircase: new chain tops at
/// height t are chosen in ker(N^t) with maximal residual against
/// ker(N^{t-1}) and the height-t vectors of taller chains, then multiplied
/// down by N.  For real classes spans are tracked together with their tau
/// images so that picked tops pull back to H-independent chains.
std::vector<Chain> class_chains(const ComplexMatrix& phi, const ClassInfo& cls,
                                const Staircase& st, const std::vector<int>& q_counts) {
  const int n2 = int(phi.rows());
  ComplexMatrix n = phi - cls.rep * ComplexMatrix::Identity(n2, n2);
  const int t_max = int(st.d.size());
  std::vector<Chain> chains;
  for (int t = t_max; t >= 1; --t) {
    int need = q_counts[t - 1] - (t < t_max ? q_counts[t] : 0);
    if (need == 0) continue;
    ComplexMatrix avoid(n2, 0);
    if (t >= 2) avoid = st.kernels[t - 2];
    ComplexMatrix q = avoid;
    for (const auto& ch : chains) {
      append_orthonormal(q, ch.complex_[t - 1]);
      if (cls.real) append_orthonormal(q, tau(ch.complex_[t - 1]));
    }
    const ComplexMatrix& cand = st.kernels[t - 1];
    for (int c = 0; c < need; ++c) {
      int best = -1;
      double best_res = 0.0;
      for (int j = 0; j < cand.cols(); ++j) {
        double r = residual_against(q, cand.col(j)).norm();
        if (r > best_res) {
          best_res = r;
          best = j;
        }
      }
      if (best < 0 || best_res < 1e-6)
        throw IllConditioned("could not separate a Jordan chain top at height " +
                             std::to_string(t));
      ComplexVector top = residual_against(q, cand.col(best));
      top.normalize();
      Chain ch;
      ch.rep = cls.rep;
      ch.complex_.resize(t);
      ch.complex_[t - 1] = top;
      for (int s = t - 1; s >= 1; --s) ch.complex_[s - 1] = n * ch.complex_[s];
      double bottom = ch.complex_[0].norm();
      if (bottom < 1e-280)
        throw IllConditioned("degenerate Jordan chain (vanishing eigenvector)");
      for (auto& w : ch.complex_) w /= bottom;
      for (const auto& w : ch.complex_) ch.vectors.push_back(pullback_vec(w));
      append_orthonormal(q, ch.complex_[t - 1]);
      if (cls.real) append_orthonormal(q, tau(ch.complex_[t - 1]));
      chains.push_back(std::move(ch));
    }
  }
  return chains;
}

bool block_before(const JordanBlock& x, const JordanBlock& y) {
  double ma = std::abs(x.rep), mb = std::abs(y.rep);
  if (std::abs(ma - mb) > kOrderEps * (1.0 + std::max(ma, mb))) return ma < mb;
  if (x.size != y.size) return x.size < y.size;
  if (std::abs(x.rep.imag() - y.rep.imag()) > kOrderEps) return x.rep.imag() < y.rep.imag();
  return false;
}

}  // namespace

HMatrix jordan_matrix(const std::vector<JordanBlock>& blocks) {
  std::vector<HMatrix> mats;
  mats.reserve(blocks.size());
  for (const auto& b : blocks) mats.push_back(jordan_block(from_complex(b.rep), b.size));
  return direct_sum(mats);
}

std::vector<EigenClass> right_eigenvalue_classes(const HMatrix& a, const Tolerances& tol) {
  ComplexMatrix phi = complex_embedding(a);
  std::vector<EigenClass> out;
  for (const auto& c : analyze_classes(phi, a.rows(), tol)) out.push_back({c.rep, c.mult()});
  return out;
}

std::vector<int> block_sizes(const HMatrix& a, std::complex<double> rep, const Tolerances& tol) {
  ComplexMatrix phi = complex_embedding(a);
  auto classes = analyze_classes(phi, a.rows(), tol);
  for (const auto& c : classes) {
    double r = cluster_radius(std::abs(c.rep), c.m_phi, a.rows(), tol);
    if (std::abs(rep - c.rep) <= r) {
      Staircase st = class_staircase(phi, c, a.rows(), tol);
      return sizes_from_counts(quaternionic_block_counts(st, c));
    }
  }
  throw UnknownEigenvalue("no eigenvalue class near the requested representative");
}

bool is_semisimple(const HMatrix& a, const Tolerances& tol) {
  ComplexMatrix phi = complex_embedding(a);
  for (const auto& c : analyze_classes(phi, a.rows(), tol)) {
    Staircase st = class_staircase(phi, c, a.rows(), tol);
    if (int(st.d.size()) != 1) return false;
  }
  return true;
}

JordanData jordan_decomposition(const HMatrix& a, const Tolerances& tol) {
  if (!a.square()) throw NonSquare("jordan decomposition requires a square matrix");
  const int n = a.rows();
  ComplexMatrix phi = complex_embedding(a);
  auto classes = analyze_classes(phi, n, tol);

  struct Entry {
    JordanBlock block;
    std::vector<HVector> chain;
  };
  std::vector<Entry> entries;
  for (const auto& c : classes) {
    Staircase st = class_staircase(phi, c, n, tol);
    auto q_counts = quaternionic_block_counts(st, c);
    for (auto& ch : class_chains(phi, c, st, q_counts))
      entries.push_back({{c.rep, ch.height()}, std::move(ch.vectors)});
  }

  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& x, const Entry& y) { return block_before(x.block, y.block); });

  int total = 0;
  for (const auto& e : entries) total += e.block.size;
  if (total != n) throw IllConditioned("Jordan blocks do not fill the ambient dimension");

  std::vector<HVector> cols;
  std::vector<JordanBlock> blocks;
  for (const auto& e : entries) {
    blocks.push_back(e.block);
    for (const auto& v : e.chain) cols.push_back(v);
  }
  HMatrix s_cols = from_columns(n, cols);
  HMatrix s;
  try {
    s = inverse(s_cols, tol.rank_rel);
  } catch (const SingularMatrix&) {
    throw IllConditioned("Jordan basis is numerically dependent");
  }

  HMatrix recon = s * (a * s_cols);
  HMatrix jm = jordan_matrix(blocks);
  double resid = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) resid = std::max(resid, norm(recon(i, j) - jm(i, j)));
  if (resid > tol.reconstruct)
    throw IllConditioned("Jordan reconstruction residual " + std::to_string(resid) +
                         " exceeds gate " + std::to_string(tol.reconstruct));
  return {std::move(blocks), std::move(s)};
}

}  // namespace quatdyn
