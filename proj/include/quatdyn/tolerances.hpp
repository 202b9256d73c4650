#pragma once

namespace quatdyn {

/// Numerical policy knobs, pinned in one place.  Defaults are calibrated for
/// well-structured inputs of ambient dimension <= 6 with eigenvalue-class
/// separations of order 0.1 or larger.
struct Tolerances {
  /// Base eigenvalue clustering tolerance (relative to 1 + |lambda|).
  double spectral = 1e-8;
  /// Relative rank cutoff scale; the effective cutoff for a matrix is
  /// rank_rel * max(rows, cols) * sigma_max.
  double rank_rel = 1e-9;
  /// Unit-modulus test: | |lambda| - 1 | <= unit, and growth-rate grouping of
  /// log-moduli uses the same absolute width.
  double unit = 1e-8;
  /// Subspace equality threshold used by the acceptance checks.
  double subspace = 1e-8;
  /// Gate on || S A S^{-1} - J ||_max after a Jordan decomposition.
  double reconstruct = 1e-6;
  /// Allowance for the eigenvalue smear of a defective class: a cluster of s
  /// computed eigenvalues may spread about as far as cluster_floor^(1/s), so
  /// the merge radius for a candidate cluster of size s is
  /// (1 + |center|) * max(spectral, cluster_floor^(1/min(s, ambient))).
  double cluster_floor = 1e-9;
  /// Minimum ratio between consecutive singular values for a rank cut to be
  /// considered unambiguous; below it the decomposition reports IllConditioned.
  double gap_ambiguity = 10.0;
};

}  // namespace quatdyn
