#include "quatdyn/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "quatdyn/embedding.hpp"

namespace quatdyn {

const char* to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::Equicontinuous: return "equicontinuous";
    case ProbeVerdict::NotEquicontinuous: return "not_equicontinuous";
    case ProbeVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

HVector scale_vec(const HVector& v, double s) {
  HVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = scale(v[i], s);
  return r;
}

HVector add_vec(const HVector& a, const HVector& b) {
  HVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

HVector unit_normal_to(const HVector& p, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const size_t n = p.size();
  for (int attempt = 0; attempt < 64; ++attempt) {
    HVector w(n);
    for (size_t i = 0; i < n; ++i) w[i] = Quaternion{g(rng), g(rng), g(rng), g(rng)};
    Quaternion ip = hermitian_pairing(p, w);
    for (size_t i = 0; i < n; ++i) w[i] = w[i] - p[i] * ip;  // p is unit length
    double nw = vec_norm(w);
    if (nw > 1e-8) return scale_vec(w, 1.0 / nw);
  }
  throw Error("could not draw a direction orthogonal to the probe point");
}

double orbit_sup_separation(const HMatrix& fwd, const HMatrix& bwd, const HVector& p0,
                            const HVector& q0, long max_power, double bail_above) {
  double sup = 0.0;
  for (int dir = 0; dir < 2; ++dir) {
    const HMatrix& step = dir == 0 ? fwd : bwd;
    HVector xp = p0, xq = q0;
    for (long m = 1; m <= max_power; ++m) {
      xp = quatdyn::apply(step, xp);
      xq = quatdyn::apply(step, xq);
      double np = vec_norm(xp), nq = vec_norm(xq);
      if (np == 0.0 || nq == 0.0 || !std::isfinite(np) || !std::isfinite(nq))
        throw PowerOverflow("probe orbit degenerated at power " + std::to_string(m));
      xp = scale_vec(xp, 1.0 / np);
      xq = scale_vec(xq, 1.0 / nq);
      double d = point_dist(ProjectivePoint{xp}, ProjectivePoint{xq});
      sup = std::max(sup, d);
      if (sup > bail_above) return sup;
    }
  }
  return sup;
}

}  // namespace

namespace {

/// Phase candidates: the quaternion units plus eigenvalue phases of the
/// complex embedding (computed directly from the input, independently of any
/// Jordan analysis).
std::vector<Quaternion> candidate_phases(const HMatrix& gamma) {
  std::vector<Quaternion> phases = {Quaternion{1, 0, 0, 0}, Quaternion{0, 1, 0, 0},
                                    Quaternion{0, 0, 1, 0}, Quaternion{0, 0, 0, 1}};
  Eigen::ComplexEigenSolver<ComplexMatrix> es(complex_embedding(gamma),
                                              /*computeEigenvectors=*/false);
  if (es.info() == Eigen::Success) {
    for (int t = 0; t < es.eigenvalues().size() && int(phases.size()) < 16; ++t) {
      std::complex<double> ev = es.eigenvalues()(t);
      if (std::abs(ev) < 1e-12) continue;
      std::complex<double> ph = ev / std::abs(ev);
      Quaternion cand{ph.real(), ph.imag(), 0, 0};
      bool fresh = true;
      for (const auto& q : phases)
        if (norm(q - cand) < 1e-3) fresh = false;
      if (fresh) phases.push_back(cand);
    }
  }
  return phases;
}

/// Unit directions orthogonal to `base`: projections of the coordinate axes
/// and hint vectors, rotated through the candidate phases.
std::vector<HVector> structured_directions(const HMatrix& gamma, const HVector& base,
                                           const std::vector<HVector>& hints) {
  const size_t n = base.size();
  std::vector<HVector> seeds;
  for (size_t t = 0; t < n; ++t) {
    HVector e(n);
    e[t] = Quaternion{1, 0, 0, 0};
    seeds.push_back(std::move(e));
  }
  for (const auto& h : hints)
    if (h.size() == n) seeds.push_back(h);

  std::vector<Quaternion> phases = candidate_phases(gamma);
  std::vector<HVector> dirs;
  for (const auto& s : seeds) {
    Quaternion ip = hermitian_pairing(base, s);
    HVector w(n);
    for (size_t i = 0; i < n; ++i) w[i] = s[i] - base[i] * ip;
    double nw = vec_norm(w);
    if (nw < 1e-6) continue;
    w = scale_vec(w, 1.0 / nw);
    for (const auto& ph : phases) {
      HVector rotated(n);
      for (size_t i = 0; i < n; ++i) rotated[i] = w[i] * ph;
      dirs.push_back(std::move(rotated));
    }
  }
  return dirs;
}

}  // namespace

ProbeResult equicontinuity_probe(const HMatrix& gamma, const ProjectivePoint& p,
                                 const ProbeConfig& cfg, const std::vector<HVector>& hints) {
  if (!gamma.square() || gamma.rows() != p.ambient())
    throw DimensionMismatch("probe point does not match the matrix dimension");
  HVector base = canonicalize_vector(p.v);
  HMatrix bwd = inverse(gamma);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<HVector> structured = structured_directions(gamma, base, hints);

  ProbeResult result;
  for (double eps : cfg.eps_ladder) {
    double st = eps;
    double ct = std::sqrt(std::max(0.0, 1.0 - st * st));
    double sup = 0.0;
    for (const auto& w : structured) {
      HVector q = add_vec(scale_vec(base, ct), scale_vec(w, st));
      sup = std::max(sup, orbit_sup_separation(gamma, bwd, base, q, cfg.max_power, 0.98));
      if (sup > 0.98) break;
    }
    for (int s = 0; s < cfg.samples_per_point && sup <= 0.98; ++s) {
      HVector w = unit_normal_to(base, rng);
      double u = s == 0 ? 1.0 : 1.0 - uni(rng);  // (0, 1]; first sample is exactly eps
      double su = eps * u;
      double cu = std::sqrt(std::max(0.0, 1.0 - su * su));
      HVector q = add_vec(scale_vec(base, cu), scale_vec(w, su));
      sup = std::max(sup, orbit_sup_separation(gamma, bwd, base, q, cfg.max_power, 0.98));
    }
    result.rungs.push_back(RungResult{eps, sup});
  }

  bool separated_everywhere = true;
  bool linear_everywhere = true;
  for (const auto& r : result.rungs) {
    if (r.sup_separation <= cfg.separation_threshold) separated_everywhere = false;
    if (r.sup_separation > cfg.linear_slack * r.eps) linear_everywhere = false;
  }
  if (result.rungs.empty())
    result.verdict = ProbeVerdict::Inconclusive;
  else if (separated_everywhere)
    result.verdict = ProbeVerdict::NotEquicontinuous;
  else if (linear_everywhere)
    result.verdict = ProbeVerdict::Equicontinuous;
  else
    result.verdict = ProbeVerdict::Inconclusive;
  return result;
}

namespace {

std::vector<long> power_ladder(long max_power, int rungs) {
  std::vector<long> ms;
  long m = max_power;
  for (int r = 0; r < rungs && m >= 1; ++r) {
    ms.push_back(m);
    m /= 2;
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return ms;
}

}  // namespace

ProjectiveSubspace crushed_subspace(const HMatrix& gamma, Direction dir, const ProbeConfig& cfg) {
  if (!gamma.square()) throw NonSquare("crushed subspace requires a square matrix");
  const int n = gamma.rows();
  const int cn = 2 * n;
  std::vector<long> ms = power_ladder(cfg.crush_max_power, cfg.ladder_rungs);
  const int R = int(ms.size());
  if (R < 3)
    throw UnstableEstimate("power ladder too short to window singular value decay", {});

  std::vector<Eigen::VectorXd> sv(R);
  std::vector<ComplexMatrix> v(R);
  for (int r = 0; r < R; ++r) {
    HMatrix pw = normalized_power(gamma, dir == Direction::Forward ? ms[r] : -ms[r]);
    Eigen::JacobiSVD<ComplexMatrix> svd(complex_embedding(pw), Eigen::ComputeFullV);
    sv[r] = svd.singularValues();
    v[r] = svd.matrixV();
  }

  // Vanishing dimension per 3-rung window; it must stabilize and be even.
  std::vector<int> dims;
  bool tail_consistent = true;
  for (int end = 2; end < R; ++end) {
    std::vector<bool> vanish(cn, false);
    for (int i = 0; i < cn; ++i) {
      double a = sv[end - 2](i), b = sv[end - 1](i), c = sv[end](i);
      bool floor_hit = c < cfg.svd_floor;
      bool decayed = c <= b && b <= a && c > 0.0 && a / std::max(c, 1e-300) >= cfg.decay_factor &&
                     c < cfg.decay_cap;
      vanish[size_t(i)] = floor_hit || decayed;
    }
    int trailing = 0;
    while (trailing < cn && vanish[size_t(cn - 1 - trailing)]) ++trailing;
    int total = int(std::count(vanish.begin(), vanish.end(), true));
    if (total != trailing) tail_consistent = false;
    dims.push_back(total);
  }
  int d = dims.back();
  if (!tail_consistent || dims.size() < 2 || dims[dims.size() - 2] != d || d % 2 != 0 || d >= cn)
    throw UnstableEstimate("vanishing singular-value count did not stabilize", dims);
  if (d == 0) return ProjectiveSubspace{n, {}};

  // Sharpen the vanishing-direction projector by Neville extrapolation in
  // x = 1/m; projectors are phase-free, so the tableau entries vary smoothly
  // along the ladder.
  int levels = std::min(cfg.extrapolation_levels, R);
  std::vector<double> xs(levels);
  std::vector<ComplexMatrix> tableau(levels);
  for (int l = 0; l < levels; ++l) {
    int r = R - levels + l;
    xs[size_t(l)] = 1.0 / double(ms[r]);
    ComplexMatrix vv = v[r].rightCols(d);
    tableau[size_t(l)] = vv * vv.adjoint();
  }
  for (int k = 1; k < levels; ++k)
    for (int i = 0; i + k < levels; ++i)
      tableau[size_t(i)] = (xs[size_t(i + k)] * tableau[size_t(i)] -
                            xs[size_t(i)] * tableau[size_t(i + 1)]) /
                           (xs[size_t(i + k)] - xs[size_t(i)]);
  ComplexMatrix proj = 0.5 * (tableau[0] + tableau[0].adjoint().eval());

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(proj);
  if (eig.info() != Eigen::Success)
    throw UnstableEstimate("projector eigendecomposition failed", dims);
  std::vector<HVector> pulls;
  for (int i = cn - d; i < cn; ++i) pulls.push_back(pullback_vec(eig.eigenvectors().col(i)));
  ProjectiveSubspace out = span_points(n, pulls, 1e-3);
  if (int(out.basis.size()) != d / 2)
    throw UnstableEstimate("pulled-back dimension disagrees with the vanishing count", dims);
  return out;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

void add_check(VerificationSummary& s, const std::string& name, bool ok,
               const std::string& detail) {
  s.checks.push_back(VerificationCheck{name, ok, detail});
}

/// 0-based coordinates spanned by an axis-aligned subspace.
std::vector<bool> kept_coordinates(const ProjectiveSubspace& s) {
  std::vector<bool> kept(size_t(s.ambient), false);
  for (const auto& b : s.basis) {
    int best = 0;
    double mx = -1.0;
    for (int i = 0; i < int(b.size()); ++i)
      if (norm(b[size_t(i)]) > mx) {
        mx = norm(b[size_t(i)]);
        best = i;
      }
    kept[size_t(best)] = true;
  }
  return kept;
}

}  // namespace

VerificationSummary verify_region(const HMatrix& gamma, const EqRegionReport& report,
                                  const ProbeConfig& cfg, const Tolerances& tol,
                                  bool with_probes, double oracle_tol) {
  VerificationSummary out;
  const int n = gamma.rows();

  // Conjugation residual of the reported decomposition.
  try {
    HMatrix s_inv = inverse(report.jordan.S, tol.rank_rel);
    HMatrix recon = report.jordan.S * (gamma * s_inv);
    HMatrix diff = recon - jordan_matrix(report.jordan.blocks);
    double res = 0.0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) res = std::max(res, norm(diff(r, c)));
    add_check(out, "jordan-reconstruction", res <= tol.reconstruct, "residual " + fmt(res));
  } catch (const Error& e) {
    add_check(out, "jordan-reconstruction", false, e.what());
  }

  DynamicalType t = classify(report.jordan, tol.unit);
  add_check(out, "type-consistent", t == report.type,
            std::string(to_string(t)) + " vs reported " + to_string(report.type));

  size_t want = report.type == DynamicalType::Elliptic    ? 0
                : report.type == DynamicalType::Parabolic ? 1
                                                          : 2;
  add_check(out, "complement-count",
            report.complement.size() == want && report.complement_jordan.size() == want,
            std::to_string(report.complement.size()) + " of " + std::to_string(want));

  // Crushed-subspace oracle in the input coordinates.
  auto crush_check = [&](const char* name, Direction dir, const ProjectiveSubspace* expected) {
    try {
      ProjectiveSubspace got = crushed_subspace(gamma, dir, cfg);
      if (expected == nullptr) {
        add_check(out, name, got.empty(),
                  got.empty() ? "no crushed directions" : "unexpected crushed directions");
      } else if (got.basis.size() != expected->basis.size()) {
        add_check(out, name, false,
                  "dimension " + std::to_string(int(got.basis.size()) - 1) + " vs " +
                      std::to_string(expected->dim_proj()));
      } else {
        double dist = got.empty() ? 0.0 : subspace_dist(got, *expected);
        add_check(out, name, dist <= oracle_tol, "distance " + fmt(dist));
      }
    } catch (const Error& e) {
      add_check(out, name, false, e.what());
    }
  };
  switch (report.type) {
    case DynamicalType::Elliptic:
      crush_check("crushed-forward-empty", Direction::Forward, nullptr);
      crush_check("crushed-backward-empty", Direction::Backward, nullptr);
      break;
    case DynamicalType::Parabolic:
      crush_check("crushed-forward-match", Direction::Forward, &report.complement[0]);
      crush_check("crushed-backward-match", Direction::Backward, &report.complement[0]);
      break;
    default:
      if (report.complement.size() == 2) {
        crush_check("crushed-forward-match", Direction::Forward, &report.complement[0]);
        crush_check("crushed-backward-match", Direction::Backward, &report.complement[1]);
      }
      break;
  }

  if (with_probes) {
    try {
      HMatrix s_inv = inverse(report.jordan.S, tol.rank_rel);
      // Chain successors make good probe hints: orbits near a chain vector
      // separate along the next vector of its chain.
      std::vector<HVector> hints;
      int start = 0;
      for (const auto& blk : report.jordan.blocks) {
        for (int kk = 1; kk < blk.size; ++kk) {
          HVector e(static_cast<size_t>(n));
          e[size_t(start + kk)] = Quaternion{1, 0, 0, 0};
          hints.push_back(quatdyn::apply(s_inv, e));
        }
        start += blk.size;
      }
      for (size_t i = 0; i < report.complement.size(); ++i) {
        ProjectivePoint p{canonicalize_vector(report.complement[i].basis.at(0))};
        ProbeResult pr = equicontinuity_probe(gamma, p, cfg, hints);
        add_check(out, "probe-complement-" + std::to_string(i),
                  pr.verdict == ProbeVerdict::NotEquicontinuous, to_string(pr.verdict));
      }
      // Interior point: one Jordan coordinate outside each complement.
      HVector x(static_cast<size_t>(n));
      if (report.complement_jordan.empty()) {
        x[0] = Quaternion{1, 0, 0, 0};
      } else {
        for (const auto& sub : report.complement_jordan) {
          std::vector<bool> kept = kept_coordinates(sub);
          for (int i = 0; i < n; ++i)
            if (!kept[size_t(i)]) {
              x[size_t(i)] = Quaternion{1, 0, 0, 0};
              break;
            }
        }
      }
      ProjectivePoint interior{canonicalize_vector(quatdyn::apply(s_inv, x))};
      ProbeResult pr = equicontinuity_probe(gamma, interior, cfg, hints);
      add_check(out, "probe-interior", pr.verdict == ProbeVerdict::Equicontinuous,
                to_string(pr.verdict));
    } catch (const Error& e) {
      add_check(out, "probe-interior", false, e.what());
    }
  }
  return out;
}

}  // namespace quatdyn
