#pragma once

#include <gmpxx.h>

#include <string>

#include "chern/errors.hpp"

namespace chern {

// Exact rational scalar for all fan-side linear algebra. No floating point
// exists anywhere in the fan or intersection code.
using Rat = mpq_class;

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// gmpxx has no long long constructor; long is 64-bit on every platform we
// target (static_assert keeps that honest).
inline Rat rat_of(long long v) {
  static_assert(sizeof(long) == sizeof(long long));
  return Rat(static_cast<long>(v));
}

inline long long rat_to_ll(const Rat& q) {
  if (!is_integral(q)) fail(ErrorCode::Overflow, "expected integer, got " + q.get_str());
  if (!q.get_num().fits_slong_p())
    fail(ErrorCode::Overflow, "integer out of range: " + q.get_str());
  return q.get_num().get_si();
}

// Overflow-checked 64-bit helpers for the lattice-invariant integer paths.
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer addition overflow");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer multiplication overflow");
  return r;
}

// C(a, b) with the convention C(a, b) = 0 for b > a or b < 0; a must be >= 0.
long long binomial(long long a, long long b);

}  // namespace chern
