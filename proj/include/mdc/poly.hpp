#ifndef MDC_POLY_HPP
#define MDC_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "mdc/gf.hpp"

namespace mdc {

/// Polynomial over F_s, coefficients stored constant term first with no
/// trailing zeros. The zero polynomial has an empty coefficient vector and
/// reports the distinguished degree marker kZeroDegree (minus infinity).
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Poly(const Field& field) : field_(field) {}
  Poly(const Field& field, std::vector<int64_t> coeffs);

  const Field& field() const { return field_; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  int64_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
  }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }

  int64_t eval(int64_t x) const;
  bool has_root_in_field() const;
  /// Trial-division irreducibility test; intended for desk-scale degrees.
  bool is_irreducible() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& o) const;
  Poly operator%(const Poly& o) const { return divmod(o).second; }

  bool operator==(const Poly& o) const {
    return field_.same_field(o.field_) && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Comma-separated coefficients, constant term first, e.g. "1,0,1".
  std::string str() const;
  static Poly parse(const Field& field, const std::string& text);

 private:
  void check_same(const Poly& o) const {
    if (!field_.same_field(o.field_)) throw ParameterError("polynomial field mismatch");
  }
  Field field_;
  std::vector<int64_t> coeffs_;
};

Poly poly_gcd(Poly a, Poly b);

/// The lexicographically smallest (by coefficient vector, constant term
/// first) monic irreducible polynomial of the given degree over F_s.
/// Degree 1 is rejected: every monic linear polynomial has a root, so no
/// valid modulus of degree 1 exists.
Poly select_modulus(const Field& field, int degree);

}  // namespace mdc

#endif  // MDC_POLY_HPP
