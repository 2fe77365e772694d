#ifndef MDC_CHECKED_HPP
#define MDC_CHECKED_HPP

#include <cstdint>
#include <string>

#include "mdc/errors.hpp"

namespace mdc {

// All enumerative counts are exact. They are carried in 128-bit integers and
// every arithmetic step is overflow-checked; an overflow throws rather than
// wrapping, so a silent corruption of a count is impossible.
using wide = __int128;

inline wide checked_add(wide a, wide b) {
  wide r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline wide checked_sub(wide a, wide b) {
  wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline wide checked_mul(wide a, wide b) {
  wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

/// Binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n.
wide binomial(long long n, long long k);

/// base^exp for exp >= 0, overflow-checked.
wide checked_pow(wide base, long long exp);

std::string to_string(wide v);

}  // namespace mdc

#endif  // MDC_CHECKED_HPP
