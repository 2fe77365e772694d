#include "mdc/checked.hpp"

#include <algorithm>

namespace mdc {

wide binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (n < 0) throw ParameterError("binomial: negative n");
  k = std::min(k, n - k);
  wide r = 1;
  for (long long i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step, so this stays exact.
    r = checked_mul(r, n - k + i);
    r /= i;
  }
  return r;
}

wide checked_pow(wide base, long long exp) {
  if (exp < 0) throw ParameterError("checked_pow: negative exponent");
  wide r = 1;
  while (exp > 0) {
    if (exp & 1) r = checked_mul(r, base);
    exp >>= 1;
    if (exp > 0) base = checked_mul(base, base);
  }
  return r;
}

std::string to_string(wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Avoid overflow on the most negative value by peeling digits as-is.
  std::string digits;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    if (d < 0) d = -d;
    digits.push_back(static_cast<char>('0' + d));
    v /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace mdc
