#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

#include "errors.hpp"

namespace quatdyn {

/// Quaternion w + x i + y j + z k over a scalar field S.
///
/// S is double for the floating backend or an exact rational type for the
/// exact backend.  All ring operations are scalar-generic; operations that
/// need square roots (norm, canonical_rep) are provided for double only.
template <class S>
struct Quat {
  S w{}, x{}, y{}, z{};

  constexpr Quat() = default;
  constexpr Quat(S a0, S a1, S a2, S a3)
      : w(std::move(a0)), x(std::move(a1)), y(std::move(a2)), z(std::move(a3)) {}
  // Intentionally implicit so scalars promote in mixed expressions.
  constexpr Quat(S a0) : w(std::move(a0)) {}

  static constexpr Quat unit_i() { return Quat(S(0), S(1), S(0), S(0)); }
  static constexpr Quat unit_j() { return Quat(S(0), S(0), S(1), S(0)); }
  static constexpr Quat unit_k() { return Quat(S(0), S(0), S(0), S(1)); }

  friend Quat operator+(const Quat& a, const Quat& b) {
    return Quat(a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z);
  }
  friend Quat operator-(const Quat& a, const Quat& b) {
    return Quat(a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z);
  }
  friend Quat operator-(const Quat& a) { return Quat(-a.w, -a.x, -a.y, -a.z); }

  /// Hamilton product (non-commutative).
  friend Quat operator*(const Quat& a, const Quat& b) {
    return Quat(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w);
  }

  Quat& operator+=(const Quat& b) { return *this = *this + b; }
  Quat& operator-=(const Quat& b) { return *this = *this - b; }
  Quat& operator*=(const Quat& b) { return *this = *this * b; }

  friend bool operator==(const Quat& a, const Quat& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }
};

template <class S>
Quat<S> conj(const Quat<S>& q) {
  return Quat<S>(q.w, -q.x, -q.y, -q.z);
}

/// Squared Euclidean norm; exact when S is exact.
template <class S>
S norm_sq(const Quat<S>& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quat<double>& q) { return std::sqrt(norm_sq(q)); }

template <class S>
bool is_zero(const Quat<S>& q) {
  return q.w == S(0) && q.x == S(0) && q.y == S(0) && q.z == S(0);
}

/// Multiplicative inverse conj(q)/|q|^2; throws DivisionByZero on zero input.
template <class S>
Quat<S> inverse(const Quat<S>& q) {
  S n = norm_sq(q);
  if (n == S(0)) throw DivisionByZero("inverse of zero quaternion");
  Quat<S> c = conj(q);
  return Quat<S>(c.w / n, c.x / n, c.y / n, c.z / n);
}

/// Scale by an ordinary scalar (scalars are central, so side does not matter).
template <class S>
Quat<S> scale(const Quat<S>& q, const S& s) {
  return Quat<S>(q.w * s, q.x * s, q.y * s, q.z * s);
}

using Quaternion = Quat<double>;

/// Complex pair (a, b) with q = a + b j, used by the complex embedding.
inline std::pair<std::complex<double>, std::complex<double>> complex_parts(const Quaternion& q) {
  return {std::complex<double>(q.w, q.x), std::complex<double>(q.y, q.z)};
}

inline Quaternion from_complex_parts(std::complex<double> a, std::complex<double> b) {
  return Quaternion(a.real(), a.imag(), b.real(), b.imag());
}

inline Quaternion from_complex(std::complex<double> a) {
  return Quaternion(a.real(), a.imag(), 0.0, 0.0);
}

/// Canonical representative of the similarity class of q: the unique complex
/// number Re(q) + |Im part(q)| i with nonnegative imaginary part.  Two
/// quaternions are similar (q' = u^{-1} q u for some unit u) iff their
/// canonical representatives coincide.
inline std::complex<double> canonical_rep(const Quaternion& q) {
  return {q.w, std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z)};
}

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
  return norm(a - b) <= tol;
}

}  // namespace quatdyn
