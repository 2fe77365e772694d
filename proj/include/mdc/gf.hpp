#ifndef MDC_GF_HPP
#define MDC_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mdc/errors.hpp"

namespace mdc {

/// The finite field F_s, s = p^k a prime power with s <= 2^16.
///
/// Elements are plain integers in [0, order()): the base-p encoding of the
/// coefficient vector of the residue, digit i holding the coefficient of X^i.
/// For k = 1 this is just the integer value mod p. All operations are exact;
/// a Field is immutable after construction and safe to share across threads.
class Field {
 public:
  /// Prime field F_p.
  explicit Field(int64_t p);
  /// Extension field F_{p^k} with the lexicographically smallest (by
  /// coefficient vector, constant term first) monic irreducible modulus.
  Field(int64_t p, int k);
  /// Extension field with a user-supplied monic irreducible modulus of
  /// degree k over F_p, constant term first (length k + 1).
  Field(int64_t p, int k, std::vector<int64_t> modulus);

  /// Factors s = p^k and builds the field with an auto-selected modulus.
  static Field of_order(int64_t s);
  /// Parses the textual form `p^k [mod=c0,c1,...]`, or a plain prime-power
  /// order such as `4`.
  static Field parse(const std::string& text);

  int64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  int64_t order() const { return order_; }
  /// Modulus polynomial over F_p, constant term first, length k + 1.
  /// For k = 1 this is the placeholder X, i.e. {0, 1}.
  const std::vector<int64_t>& modulus() const { return modulus_; }
  std::string text() const;

  bool same_field(const Field& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

  int64_t zero() const { return 0; }
  int64_t one() const { return 1; }
  int64_t add(int64_t a, int64_t b) const;
  int64_t sub(int64_t a, int64_t b) const;
  int64_t neg(int64_t a) const;
  int64_t mul(int64_t a, int64_t b) const;
  int64_t inv(int64_t a) const;
  int64_t pow(int64_t a, long long e) const;
  /// Embeds an integer via reduction mod p (image of Z in F_s).
  int64_t from_int(long long v) const;

  std::vector<int64_t> coeffs(int64_t a) const;
  int64_t from_coeffs(const std::vector<int64_t>& c) const;

  void check_element(int64_t a) const;

 private:
  void init_extension();

  int64_t p_;
  int k_;
  std::vector<int64_t> modulus_;
  int64_t order_;
  // X^{k+j} mod modulus for j = 0..k-2, used to fold products back down.
  std::vector<std::vector<int64_t>> fold_;
};

/// An element of F_s carrying its field. The field must outlive the element.
class FieldElement {
 public:
  FieldElement(const Field& field, int64_t value) : field_(&field), value_(value) {
    field.check_element(value);
  }

  const Field& field() const { return *field_; }
  int64_t value() const { return value_; }
  std::vector<int64_t> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const {
    return FieldElement(*field_, field_->add(value_, same(o).value_));
  }
  FieldElement operator-(const FieldElement& o) const {
    return FieldElement(*field_, field_->sub(value_, same(o).value_));
  }
  FieldElement operator*(const FieldElement& o) const {
    return FieldElement(*field_, field_->mul(value_, same(o).value_));
  }
  FieldElement operator-() const { return FieldElement(*field_, field_->neg(value_)); }
  FieldElement inverse() const { return FieldElement(*field_, field_->inv(value_)); }
  FieldElement pow(long long e) const { return FieldElement(*field_, field_->pow(value_, e)); }

  bool operator==(const FieldElement& o) const {
    return field_->same_field(*o.field_) && value_ == o.value_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  const FieldElement& same(const FieldElement& o) const {
    if (!field_->same_field(*o.field_)) throw ParameterError("field spec mismatch");
    return o;
  }
  const Field* field_;
  int64_t value_;
};

bool is_prime(int64_t p);

}  // namespace mdc

#endif  // MDC_GF_HPP
