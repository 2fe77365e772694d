#include "mdc/rational.hpp"

namespace mdc {

wide gcd_wide(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational::Rational(wide num, wide den) : num_(num), den_(den) {
  if (den_ == 0) throw ParameterError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = checked_sub(0, num_);
    den_ = checked_sub(0, den_);
  }
  wide g = gcd_wide(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                  checked_mul(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                  checked_mul(den_, o.den_));
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw ParameterError("rational division by zero");
  return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

bool Rational::operator<(const Rational& o) const {
  // Denominators are positive, so cross-multiplication preserves order.
  return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

wide Rational::floor() const {
  wide q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

wide Rational::ceil() const {
  wide q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

double Rational::approx() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

}  // namespace mdc
