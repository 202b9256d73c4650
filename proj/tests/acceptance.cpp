// Acceptance suite for the classification + equicontinuity-region pipeline.
// Each check prints exactly one PASS/FAIL line; the exit code is the number
// of failed checks.  Tolerances are pinned here, next to the checks that use
// them.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "quatdyn/embedding.hpp"
#include "quatdyn/eqregion.hpp"
#include "quatdyn/exact.hpp"
#include "quatdyn/jordan_form.hpp"
#include "quatdyn/oracle.hpp"
#include "support.hpp"

using namespace quatdyn;
using testsupport::Q;

namespace {

// Agreement between a reported subspace and its combinatorial expectation.
constexpr double kSubspaceMatchTol = 1e-8;
// Agreement between power-iteration oracles and reported subspaces.
constexpr double kOracleTol = 1e-6;
// Transport agreement for conjugated inputs (condition number <= 100).
constexpr double kTransportTol = 1e-5;
// Relative agreement of raw matrix powers with closed-form powers.
constexpr double kPowerRelTol = 1e-9;

// Orbit horizon tuned to the probe ladder: separating an eps-perturbation of
// a chain kernel point takes about 1/eps steps, and the crushed-subspace
// ladder keeps sharpening past that.
ProbeConfig long_probe() {
  ProbeConfig cfg;
  cfg.max_power = 4000;
  cfg.eps_ladder = {3e-2, 1e-3};
  cfg.crush_max_power = 1600;
  return cfg;
}

struct CheckResult {
  bool pass = true;
  std::string detail;
};

void note(CheckResult& r, const std::string& msg) {
  r.pass = false;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += msg;
}

ProjectivePoint axis_point(int n, int i) {
  HVector v(static_cast<size_t>(n));
  v[static_cast<size_t>(i)] = Q(1);
  return make_point(v);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Random elliptic diagonal lifts: empty complement, probes equicontinuous.

CheckResult check_elliptic_random() {
  CheckResult r;
  testsupport::TestRng rng(1001);
  int probes_ok = 0, probes_total = 0;
  for (int it = 0; it < 20; ++it) {
    int n = 2 + it % 5;
    HVector d(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) d[static_cast<size_t>(t)] = rng.unit_quaternion();
    HMatrix g = diagonal(d);
    EqRegionReport rep = eq_region(g);
    if (rep.type != DynamicalType::Elliptic) {
      note(r, "draw " + std::to_string(it) + " not elliptic");
      continue;
    }
    if (!rep.complement.empty() || !rep.complement_jordan.empty())
      note(r, "draw " + std::to_string(it) + " has a nonempty complement");
    for (int p = 0; p < 5; ++p) {
      ++probes_total;
      ProbeResult pr = equicontinuity_probe(g, make_point(rng.vector(n, 1.0)));
      if (pr.verdict == ProbeVerdict::Equicontinuous) ++probes_ok;
    }
  }
  if (probes_ok != probes_total)
    note(r, std::to_string(probes_total - probes_ok) + " of " + std::to_string(probes_total) +
               " probes not equicontinuous");
  if (r.pass) r.detail = "20 lifts, " + std::to_string(probes_ok) + "/100 probes equicontinuous";
  return r;
}

// ---------------------------------------------------------------------------
// 2. Single unit Jordan block: exact certification of the complement,
//    crushed-subspace oracle, and probe verdicts on both sides of it.

CheckResult check_single_block() {
  CheckResult r;
  double worst_crush = 0.0;
  for (int k = 2; k <= 6; ++k) {
    std::vector<int> kern;
    for (int t = 0; t + 1 < k; ++t) kern.push_back(t);
    for (int li = 0; li < 2; ++li) {
      std::string tag = "k=" + std::to_string(k) + (li == 0 ? " lam=1" : " lam=i");
      // Exact backend: the limit kernel is {e_1 .. e_{k-1}} in both
      // directions, certified in rational arithmetic.
      QuatQ lam = li == 0 ? quat_q(1) : QuatQ::unit_i();
      auto blocks = read_exact_jordan(jordan_block(lam, k));
      if (classify_exact(blocks) != DynamicalType::Parabolic) note(r, tag + " exact type");
      if (exact_limit_kernel(blocks, Direction::Forward) != kern ||
          exact_limit_kernel(blocks, Direction::Backward) != kern)
        note(r, tag + " exact kernel indices");
      if (!exact_same_span(exact_coordinate_columns(k, kern),
                           exact_coordinate_columns(k, exact_limit_kernel(blocks, Direction::Forward))))
        note(r, tag + " exact span");

      // Floating pipeline: the reported complement is that span exactly.
      Quaternion dl = li == 0 ? Q(1) : Quaternion::unit_i();
      HMatrix g = jordan_block(dl, k);
      EqRegionReport rep = eq_region(g);
      ProjectiveSubspace expected = coordinate_subspace(k, kern);
      if (rep.type != DynamicalType::Parabolic || rep.complement.size() != 1)
        note(r, tag + " report shape");
      else if (subspace_dist(rep.complement_jordan[0], expected) != 0.0 ||
               subspace_dist(rep.complement[0], expected) != 0.0)
        note(r, tag + " complement not exact");

      ProbeConfig cfg = long_probe();
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        double d = subspace_dist(crushed_subspace(g, dir, cfg), expected);
        worst_crush = std::max(worst_crush, d);
        if (d >= kOracleTol) note(r, tag + " crushed oracle " + fmt(d));
      }
      if (equicontinuity_probe(g, axis_point(k, 0), cfg).verdict !=
          ProbeVerdict::NotEquicontinuous)
        note(r, tag + " kernel point not separated");
      if (equicontinuity_probe(g, axis_point(k, k - 1), cfg).verdict !=
          ProbeVerdict::Equicontinuous)
        note(r, tag + " interior point not equicontinuous");
    }
  }
  if (r.pass) r.detail = "10 blocks certified, worst crushed dist " + fmt(worst_crush);
  return r;
}

// ---------------------------------------------------------------------------
// 3. Every defective block-size partition of dimensions 2..6, two phase
//    patterns each: the complement drops the last vector of each largest
//    block, and the crushed-subspace oracle agrees.

void partitions_into(int remaining, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_into(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

CheckResult check_parabolic_shapes() {
  CheckResult r;
  std::vector<std::vector<int>> shapes;
  for (int total = 2; total <= 6; ++total) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    partitions_into(total, total, cur, all);
    for (auto& s : all)
      if (s[0] >= 2) shapes.push_back(s);  // parts are non-increasing
  }
  if (shapes.size() != 23) {
    note(r, "expected 23 defective partitions, got " + std::to_string(shapes.size()));
    return r;
  }

  const double angles[3] = {0.0, 0.25, 0.618};
  double worst_match = 0.0, worst_crush = 0.0;
  int runs = 0;
  for (const auto& shape : shapes) {
    for (int pat = 0; pat < 2; ++pat) {
      std::vector<HMatrix> blocks;
      for (size_t t = 0; t < shape.size(); ++t) {
        double a = 2.0 * std::acos(-1.0) * angles[(t + size_t(pat)) % 3];
        blocks.push_back(jordan_block(Quaternion(std::cos(a), std::sin(a), 0, 0), shape[t]));
      }
      HMatrix g = direct_sum<double>(blocks);
      int n = g.rows();
      int smax = *std::max_element(shape.begin(), shape.end());
      std::vector<int> kern;
      int off = 0;
      for (int sz : shape) {
        for (int t = 0; t < sz; ++t)
          if (!(sz == smax && t == sz - 1)) kern.push_back(off + t);
        off += sz;
      }
      std::string tag = "shape";
      for (int sz : shape) tag += " " + std::to_string(sz);
      tag += " pat " + std::to_string(pat);

      EqRegionReport rep = eq_region(g);
      if (rep.type != DynamicalType::Parabolic || rep.complement.size() != 1) {
        note(r, tag + " report shape");
        continue;
      }
      ProjectiveSubspace expected = coordinate_subspace(n, kern);
      double dm = subspace_dist(rep.complement[0], expected);
      double dc = subspace_dist(crushed_subspace(g, Direction::Forward, long_probe()), expected);
      worst_match = std::max(worst_match, dm);
      worst_crush = std::max(worst_crush, dc);
      if (dm > kSubspaceMatchTol) note(r, tag + " complement " + fmt(dm));
      if (dc >= kOracleTol) note(r, tag + " crushed " + fmt(dc));
      ++runs;
    }
  }
  if (r.pass)
    r.detail = std::to_string(runs) + " runs, worst complement " + fmt(worst_match) +
               ", worst crushed " + fmt(worst_crush);
  return r;
}

// ---------------------------------------------------------------------------
// 4. Loxodromic diagonals with 2-3 modulus groups: two complements following
//    the growth rule, cross-checked against kernels of normalized powers.

CheckResult check_loxodromic_diagonals() {
  CheckResult r;
  testsupport::TestRng rng(4004);
  std::vector<std::vector<double>> sweeps = {
      {2, 1},
      {0.5, 2},
      {2, 1, 1},
      {2, 2, 0.5},
      {1, 0.5, 2, 1},
      {0.5, 0.5, 1, 2},
      {0.5, 0.5, 1, 2, 2},
      {1, 1, 1, 0.5, 0.5},
      {2, 1, 0.5, 1, 2, 0.5},
      {0.5, 2, 2, 2, 0.5, 1},
  };
  double worst_match = 0.0, worst_pseudo = 0.0;
  for (const auto& ms : sweeps) {
    int n = int(ms.size());
    HVector d(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t)
      d[static_cast<size_t>(t)] = scale(rng.unit_quaternion(), ms[size_t(t)]);
    HMatrix g = diagonal(d);
    std::string tag = "moduli";
    for (double m : ms) tag += " " + std::to_string(m);

    double mx = *std::max_element(ms.begin(), ms.end());
    double mn = *std::min_element(ms.begin(), ms.end());
    std::vector<int> fwd, bwd;
    for (int t = 0; t < n; ++t) {
      if (ms[size_t(t)] < mx) fwd.push_back(t);
      if (ms[size_t(t)] > mn) bwd.push_back(t);
    }

    EqRegionReport rep = eq_region(g);
    if (rep.type != DynamicalType::Loxodromic || rep.complement.size() != 2) {
      note(r, tag + " report shape");
      continue;
    }
    double d1 = subspace_dist(rep.complement[0], coordinate_subspace(n, fwd));
    double d2 = subspace_dist(rep.complement[1], coordinate_subspace(n, bwd));
    double p1 = subspace_dist(pseudo_from_matrix(normalized_power(g, 80)).kernel,
                              rep.complement[0]);
    double p2 = subspace_dist(pseudo_from_matrix(normalized_power(g, -80)).kernel,
                              rep.complement[1]);
    worst_match = std::max({worst_match, d1, d2});
    worst_pseudo = std::max({worst_pseudo, p1, p2});
    if (d1 > kSubspaceMatchTol || d2 > kSubspaceMatchTol)
      note(r, tag + " complements " + fmt(std::max(d1, d2)));
    if (p1 >= kOracleTol || p2 >= kOracleTol)
      note(r, tag + " pseudo kernels " + fmt(std::max(p1, p2)));
  }
  if (r.pass)
    r.detail = std::to_string(sweeps.size()) + " sweeps, worst complement " + fmt(worst_match) +
               ", worst pseudo kernel " + fmt(worst_pseudo);
  return r;
}

// ---------------------------------------------------------------------------
// 5. Loxoparabolic pairs: both one-sided complements agree with the
//    crushed-subspace oracle.

CheckResult check_loxoparabolic() {
  CheckResult r;
  std::vector<std::pair<int, int>> sizes = {{1, 2}, {2, 2}, {2, 3}};
  double worst = 0.0;
  int runs = 0;
  for (auto [k1, k2] : sizes) {
    for (double l1 : {0.5, 1.0}) {
      HMatrix g = direct_sum<double>(
          {jordan_block(Quaternion(l1), k1), jordan_block(Quaternion(2.0), k2)});
      std::string tag = "sizes (" + std::to_string(k1) + "," + std::to_string(k2) +
                        ") lam1=" + (l1 == 0.5 ? "1/2" : "1");
      EqRegionReport rep = eq_region(g);
      if (rep.type != DynamicalType::Loxoparabolic || rep.complement.size() != 2) {
        note(r, tag + " report shape");
        continue;
      }
      ProbeConfig cfg = long_probe();
      double df = subspace_dist(crushed_subspace(g, Direction::Forward, cfg), rep.complement[0]);
      double db = subspace_dist(crushed_subspace(g, Direction::Backward, cfg), rep.complement[1]);
      worst = std::max({worst, df, db});
      if (df >= kOracleTol) note(r, tag + " forward " + fmt(df));
      if (db >= kOracleTol) note(r, tag + " backward " + fmt(db));
      ++runs;
    }
  }
  if (r.pass) r.detail = std::to_string(runs) + " runs, worst crushed dist " + fmt(worst);
  return r;
}

// ---------------------------------------------------------------------------
// 6. Conjugation equivariance: complements transport through random changes
//    of basis (condition <= 100) and the classification is unchanged.

CheckResult check_conjugation() {
  CheckResult r;
  testsupport::TestRng rng(6006);
  std::vector<HMatrix> bases;
  bases.push_back(jordan_block(Quaternion(1.0), 3));
  bases.push_back(direct_sum<double>(
      {jordan_block(Quaternion::unit_i(), 2), jordan_block(Quaternion(2.0), 1)}));
  bases.push_back(diagonal(HVector{Q(2), Q(0.5), Quaternion::unit_i()}));
  bases.push_back(direct_sum<double>(
      {jordan_block(Quaternion(0.5), 1), jordan_block(Quaternion(2.0), 2)}));
  bases.push_back(diagonal(HVector{Quaternion::unit_i(), Quaternion::unit_j()}));
  double worst = 0.0;
  for (int it = 0; it < 50; ++it) {
    const HMatrix& base = bases[size_t(it) % bases.size()];
    EqRegionReport ref = eq_region(base);
    HMatrix t = rng.conjugator(base.rows(), 100.0);
    HMatrix g = t * base * inverse(t);
    EqRegionReport rep = eq_region(g);
    std::string tag = "draw " + std::to_string(it);
    if (rep.type != ref.type) {
      note(r, tag + " type changed");
      continue;
    }
    if (rep.complement.size() != ref.complement.size()) {
      note(r, tag + " complement count");
      continue;
    }
    for (size_t s = 0; s < ref.complement.size(); ++s) {
      double d = subspace_dist(rep.complement[s], transform_subspace(t, ref.complement[s]));
      worst = std::max(worst, d);
      if (d > kTransportTol) note(r, tag + " transport " + fmt(d));
    }
  }
  if (r.pass) r.detail = "50 conjugations, worst transport dist " + fmt(worst);
  return r;
}

// ---------------------------------------------------------------------------
// 7. Algebraic identities on random data, 10^4 cases per family.

CheckResult check_algebra() {
  CheckResult r;
  testsupport::TestRng rng(7007);
  const int cases = 10000;

  int hom_fail = 0;
  for (int it = 0; it < cases; ++it) {
    int n = 1 + it % 4;
    HMatrix a = rng.matrix(n, 1.0), b = rng.matrix(n, 1.0);
    ComplexMatrix diff = complex_embedding(a * b) - complex_embedding(a) * complex_embedding(b);
    if (diff.cwiseAbs().maxCoeff() > 1e-10) ++hom_fail;
  }
  if (hom_fail) note(r, std::to_string(hom_fail) + " embedding homomorphism failures");

  int det_fail = 0;
  for (int it = 0; it < cases; ++it) {
    int n = 1 + it % 3;
    HMatrix a = rng.matrix(n, 1.0), b = rng.matrix(n, 1.0);
    double da = study_determinant(a), db = study_determinant(b);
    double dab = study_determinant(a * b);
    if (da < -1e-12 || db < -1e-12) ++det_fail;
    if (std::abs(dab - da * db) > 1e-8 * std::max(1.0, std::abs(da * db))) ++det_fail;
  }
  if (det_fail) note(r, std::to_string(det_fail) + " determinant failures");

  int norm_fail = 0;
  for (int it = 0; it < cases; ++it) {
    Quaternion p = rng.quaternion(2.0), q = rng.quaternion(2.0);
    if (std::abs(norm(p * q) - norm(p) * norm(q)) > 1e-12 * std::max(1.0, norm(p) * norm(q)))
      ++norm_fail;
  }
  if (norm_fail) note(r, std::to_string(norm_fail) + " norm multiplicativity failures");

  int metric_fail = 0;
  for (int it = 0; it < cases; ++it) {
    int n = 2 + it % 4;
    ProjectivePoint x = make_point(rng.vector(n, 1.0));
    ProjectivePoint y = make_point(rng.vector(n, 1.0));
    ProjectivePoint z = make_point(rng.vector(n, 1.0));
    double dxy = point_dist(x, y), dyx = point_dist(y, x);
    if (point_dist(x, x) > 1e-12) ++metric_fail;
    if (std::abs(dxy - dyx) > 1e-12) ++metric_fail;
    if (point_dist(x, z) > dxy + point_dist(y, z) + 1e-12) ++metric_fail;
    ProjectivePoint xs = make_point([&] {
      HVector v = x.v;
      Quaternion u = rng.unit_quaternion();
      for (auto& c : v) c = c * u;
      return v;
    }());
    if (point_dist(x, xs) > 1e-12) ++metric_fail;
  }
  if (metric_fail) note(r, std::to_string(metric_fail) + " metric failures");

  if (r.pass) r.detail = "4 x 10000 cases, zero failures";
  return r;
}

// ---------------------------------------------------------------------------
// 8. Raw powers of Jordan blocks match the binomial closed forms in both
//    directions.

HMatrix closed_form_power(std::complex<double> lam, int k, int m, bool inverse_power) {
  HMatrix p(k, k);
  for (int rr = 0; rr < k; ++rr)
    for (int c = rr; c < k; ++c) {
      int d = c - rr;
      if (!inverse_power && d > m) continue;
      // binom(m, d) forward; (-1)^d binom(m + d - 1, d) for the inverse.
      double binom = 1.0;
      for (int t = 1; t <= d; ++t)
        binom *= (inverse_power ? double(m + t - 1) : double(m - t + 1)) / t;
      if (inverse_power && d % 2 == 1) binom = -binom;
      std::complex<double> val =
          binom * std::pow(lam, inverse_power ? -m - d : m - d);
      p(rr, c) = from_complex(val);
    }
  return p;
}

CheckResult check_power_formulas() {
  CheckResult r;
  const double ang = 2.0 * std::acos(-1.0) * 0.3;
  std::vector<std::complex<double>> lams = {{1.0, 0.0},
                                            {std::cos(ang), std::sin(ang)},
                                            {2.0, 0.0}};
  double worst = 0.0;
  for (const auto& lam : lams) {
    for (int k = 2; k <= 5; ++k) {
      HMatrix j = jordan_block(from_complex(lam), k);
      HMatrix jinv = inverse(j);
      HMatrix fwd = HMatrix::identity(k), bwd = HMatrix::identity(k);
      for (int m = 1; m <= 30; ++m) {
        fwd = fwd * j;
        bwd = bwd * jinv;
        for (int side = 0; side < 2; ++side) {
          const HMatrix& raw = side == 0 ? fwd : bwd;
          HMatrix closed = closed_form_power(lam, k, m, side == 1);
          double scale_ref = 1.0;
          for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) scale_ref = std::max(scale_ref, norm(closed(a, b)));
          double diff = 0.0;
          for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) diff = std::max(diff, norm(raw(a, b) - closed(a, b)));
          double rel = diff / scale_ref;
          worst = std::max(worst, rel);
          if (rel > kPowerRelTol)
            note(r, "lam (" + fmt(lam.real()) + "," + fmt(lam.imag()) + ") k=" +
                       std::to_string(k) + " m=" + std::to_string(m) +
                       (side ? " inverse" : "") + " rel " + fmt(rel));
        }
      }
    }
  }
  if (r.pass) r.detail = "3 values x 4 sizes x 30 powers x 2 directions, worst rel " + fmt(worst);
  return r;
}

}  // namespace

int main() {
  struct Named {
    const char* name;
    CheckResult (*fn)();
  };
  const Named checks[] = {
      {"elliptic random lifts", check_elliptic_random},
      {"single unit Jordan blocks", check_single_block},
      {"parabolic shape sweep", check_parabolic_shapes},
      {"loxodromic diagonal sweep", check_loxodromic_diagonals},
      {"loxoparabolic pairs", check_loxoparabolic},
      {"conjugation equivariance", check_conjugation},
      {"algebraic identities", check_algebra},
      {"power formulas", check_power_formulas},
  };
  int failed = 0;
  int idx = 0;
  for (const auto& c : checks) {
    ++idx;
    CheckResult res;
    try {
      res = c.fn();
    } catch (const std::exception& ex) {
      res.pass = false;
      res.detail = std::string("exception: ") + ex.what();
    }
    if (!res.pass) ++failed;
    std::printf("%s  %d/8  %s: %s\n", res.pass ? "PASS" : "FAIL", idx, c.name,
                res.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
