#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace quatdyn {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not line up (matrix product, subspace comparison, ...).
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Operation requires a square matrix.
struct NonSquare : Error {
  using Error::Error;
};

/// Inverse of a zero quaternion or division by a zero scalar.
struct DivisionByZero : Error {
  using Error::Error;
};

/// Operation undefined on an all-zero matrix or vector.
struct ZeroInput : Error {
  using Error::Error;
};

/// Matrix is not invertible at the working tolerance.
struct SingularMatrix : Error {
  using Error::Error;
};

/// Requested eigenvalue is not in the spectrum at the working tolerance.
struct UnknownEigenvalue : Error {
  using Error::Error;
};

/// Operation applied to a transformation of the wrong dynamical type.
struct WrongType : Error {
  using Error::Error;
};

/// Repeated rescaling of a matrix power degenerated to zero or non-finite entries.
struct PowerOverflow : Error {
  using Error::Error;
};

/// A rank or clustering decision had no clear numerical gap.  Carries the two
/// singular values (relative to the largest) that bracket the ambiguous cut.
struct IllConditioned : Error {
  double gap_low = 0.0;
  double gap_high = 0.0;
  IllConditioned(const std::string& msg, double lo, double hi)
      : Error(msg + " [gap " + std::to_string(lo) + " .. " + std::to_string(hi) + "]"),
        gap_low(lo),
        gap_high(hi) {}
  explicit IllConditioned(const std::string& msg) : Error(msg) {}
};

/// The power-ladder kernel estimate did not stabilize; carries the estimated
/// dimension at each ladder rung that had enough history to decide.
struct UnstableEstimate : Error {
  std::vector<int> dim_sequence;
  UnstableEstimate(const std::string& msg, std::vector<int> dims)
      : Error(msg), dim_sequence(std::move(dims)) {}
};

}  // namespace quatdyn
