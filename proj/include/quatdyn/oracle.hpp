#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quatdyn/dynamics.hpp"
#include "quatdyn/eqregion.hpp"
#include "quatdyn/hmatrix.hpp"
#include "quatdyn/projective.hpp"

namespace quatdyn {

/// Knobs for the power-iteration oracle.  The defaults keep runs cheap; the
/// probe ladder and horizon must be chosen together, since separating an
/// eps-perturbation of a kernel point of a depth-2 chain takes on the order
/// of 1/eps steps.
struct ProbeConfig {
  /// Orbit horizon: powers m = 1..max_power in both directions.
  long max_power = 200;
  /// Perturbation sizes tried per probe point, largest first.
  std::vector<double> eps_ladder{1e-2, 1e-4, 1e-6};
  /// Orbits that stay this far apart at every rung are called separated.
  double separation_threshold = 0.1;
  /// Random perturbations drawn per (point, rung).
  int samples_per_point = 8;
  /// A rung passes the equicontinuity test when sup-separation <= slack * eps.
  double linear_slack = 10.0;
  /// RNG seed for perturbation sampling (deterministic for equal seeds).
  std::uint64_t seed = 12345;

  /// Crushed-subspace estimation: geometric rung ladder ending at this power.
  long crush_max_power = 200;
  int ladder_rungs = 6;
  /// A singular value below this floor counts as vanished outright.
  double svd_floor = 1e-9;
  /// Otherwise it must decay monotonically across a 3-rung window by at
  /// least this total factor ...
  double decay_factor = 3.0;
  /// ... and end below this cap.
  double decay_cap = 0.25;
  /// Rungs used for the projector extrapolation to infinite power.
  int extrapolation_levels = 4;
};

enum class ProbeVerdict { Equicontinuous, NotEquicontinuous, Inconclusive };

const char* to_string(ProbeVerdict v);

/// Largest observed orbit separation for one rung of the ladder.
struct RungResult {
  double eps = 0.0;
  double sup_separation = 0.0;
};

struct ProbeResult {
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;
  std::vector<RungResult> rungs;
};

/// Measure sup_{|m| <= max_power} dist(gamma^m p, gamma^m q) over
/// perturbations q at distance <= eps from p, for each eps in the ladder.
///   - separated at every rung (sup > separation_threshold)  -> NotEquicontinuous
///   - sup <= linear_slack * eps at every rung                -> Equicontinuous
///   - anything else                                          -> Inconclusive
/// Perturbation directions mix random draws with structured candidates:
/// coordinate axes and the caller's hint vectors, each phase-rotated by
/// 1, i, j, k and by the eigenvalue phases of the complex embedding.  The
/// structured set matters: near a fixed point of a unit-modulus chain, orbits
/// only separate when the perturbation phase aligns with the eigenvalue
/// phase, a set random sampling essentially never hits.  A found separation
/// is a sound witness no matter how its direction was chosen.
ProbeResult equicontinuity_probe(const HMatrix& gamma, const ProjectivePoint& p,
                                 const ProbeConfig& cfg = {},
                                 const std::vector<HVector>& hints = {});

/// Estimate the kernel of the limit of normalized powers of gamma by singular
/// value decay along a geometric power ladder, then sharpen the subspace by
/// Richardson/Neville extrapolation of the vanishing-direction projectors in
/// 1/m.  Returns the subspace in the input coordinates; empty when no
/// direction is crushed.  Throws UnstableEstimate when the vanishing
/// dimension does not stabilize across the last two windows, and
/// PowerOverflow when powers degenerate.
ProjectiveSubspace crushed_subspace(const HMatrix& gamma, Direction dir,
                                    const ProbeConfig& cfg = {});

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationSummary {
  std::vector<VerificationCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Cross-check a report against oracles that do not reuse its Jordan data:
/// conjugation residual, type consistency, crushed-subspace agreement in the
/// original coordinates, and (optionally) probe verdicts at complement and
/// interior points.
VerificationSummary verify_region(const HMatrix& gamma, const EqRegionReport& report,
                                  const ProbeConfig& cfg = {}, const Tolerances& tol = {},
                                  bool with_probes = true, double oracle_tol = 1e-6);

}  // namespace quatdyn
