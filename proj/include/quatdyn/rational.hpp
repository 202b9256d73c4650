#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "quaternion.hpp"

namespace quatdyn {

/// Exact rational scalar for the exact backend.
using Rational = boost::multiprecision::cpp_rational;

using QuatQ = Quat<Rational>;

inline QuatQ quat_q(long w, long x = 0, long y = 0, long z = 0) {
  return QuatQ(Rational(w), Rational(x), Rational(y), Rational(z));
}

inline Rational rational(long num, long den = 1) { return Rational(num) / Rational(den); }

/// Nearest double value (for reporting only; exact paths never round-trip
/// through this).
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Quaternion to_double(const QuatQ& q) {
  return Quaternion(to_double(q.w), to_double(q.x), to_double(q.y), to_double(q.z));
}

}  // namespace quatdyn
