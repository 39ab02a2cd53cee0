#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace k3acm {

using Int = std::int64_t;

/// Malformed input: wrong dimensions, violated preconditions, unparsable files.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A consistency check inside the library failed. Always a bug or a lattice
/// that slipped past validation.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// All lattice arithmetic goes through these; wraparound is never silent.
namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

/// Largest t >= 0 with t*t <= n.
inline Int isqrt(Int n) {
  if (n < 0) throw InternalError("isqrt of negative value");
  auto t = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (t > 0 && mul(t, t) > n) --t;
  while (mul(t + 1, t + 1) <= n) ++t;
  return t;
}

}  // namespace checked

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

}  // namespace k3acm
