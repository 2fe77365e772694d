#ifndef MDC_RATIONAL_HPP
#define MDC_RATIONAL_HPP

#include <string>

#include "mdc/checked.hpp"

namespace mdc {

/// Exact ratio of 128-bit integers, always stored reduced with a positive
/// denominator. Bound values are never evaluated in floating point; callers
/// that want an approximation ask for one explicitly.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(wide value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(wide num, wide den);

  wide num() const { return num_; }
  wide den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  wide floor() const;
  wide ceil() const;
  bool is_integer() const { return den_ == 1; }

  /// "num/den", or just "num" when the value is an integer.
  std::string str() const;
  double approx() const;

 private:
  void normalize();
  wide num_;
  wide den_;
};

wide gcd_wide(wide a, wide b);

}  // namespace mdc

#endif  // MDC_RATIONAL_HPP
