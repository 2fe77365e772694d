#ifndef MDC_RING_HPP
#define MDC_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "mdc/checked.hpp"
#include "mdc/poly.hpp"

namespace mdc {

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

/// An element of R_f = F_s[X]/(f): a coefficient vector of length deg(f),
/// already reduced modulo f.
class RingElement {
 public:
  RingElement(RingPtr ring, std::vector<int64_t> coeffs);

  const RingPtr& ring() const { return ring_; }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_unit() const;
  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement inverse() const;
  RingElement pow(long long e) const;
  RingElement scaled(int64_t field_scalar) const;

  bool operator==(const RingElement& o) const;
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  std::string str() const;  // comma-separated coefficients, constant first

 private:
  RingPtr ring_;
  std::vector<int64_t> coeffs_;
};

/// The quotient ring R_f = F_s[X]/(f) for a rootless modulus f of degree at
/// least 2. Rootlessness makes every ξ - a a unit, which is what the symbol
/// maps built on top of this ring need. A degree-1 modulus always has a root
/// and is rejected as unsupported.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  static RingPtr make(const Field& field, Poly modulus);

  const Field& field() const { return field_; }
  const Poly& modulus() const { return modulus_; }
  int degree() const { return deg_; }
  bool modulus_irreducible() const { return irreducible_; }
  bool same_ring(const QuotientRing& o) const {
    return field_.same_field(o.field_) && modulus_ == o.modulus_;
  }

  RingElement zero() const;
  RingElement one() const;
  /// The image ξ of X modulo f.
  RingElement xi() const;
  /// ξ - a for a field element a.
  RingElement xi_minus(int64_t a) const;
  RingElement from_field_scalar(int64_t a) const;
  RingElement element(std::vector<int64_t> coeffs) const;

  /// |R_f*|, exact. Closed form s^deg - 1 for irreducible f, exhaustive unit
  /// count (guarded) for rootless reducible f.
  wide unit_count() const;

 private:
  QuotientRing(const Field& field, Poly modulus);

  friend class RingElement;
  std::vector<int64_t> reduce_product(const std::vector<int64_t>& a,
                                      const std::vector<int64_t>& b) const;

  Field field_;
  Poly modulus_;
  int deg_;
  bool irreducible_;
  // X^{deg+j} mod f for j = 0..deg-2.
  std::vector<std::vector<int64_t>> fold_;
};

enum class Variant { projective, affine };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);

/// A member of the syndrome group: a unit of R_f (affine) or the canonical
/// representative of a class in R_f*/F_s* (projective). The projective
/// canonical form is the scalar multiple whose highest-index nonzero
/// coefficient is 1, so equal classes compare equal as vectors.
class GroupElement {
 public:
  Variant variant() const { return variant_; }
  const RingElement& rep() const { return rep_; }
  const std::vector<int64_t>& coeffs() const { return rep_.coeffs(); }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(long long e) const;

  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const;  // lexicographic on coefficients

  /// Fixed-width byte serialization of the coefficient vector, usable as an
  /// exact portable hash key.
  std::string key() const;
  std::string str() const { return rep_.str(); }

  static GroupElement identity(const RingPtr& ring, Variant v);

  friend GroupElement canonicalize(const RingElement& g, Variant v);

 private:
  GroupElement(Variant v, RingElement rep) : variant_(v), rep_(std::move(rep)) {}
  Variant variant_;
  RingElement rep_;
};

/// Maps a unit to its group representative; throws NonInvertibleError on a
/// non-unit. Idempotent, and constant on F_s*-orbits in projective mode.
GroupElement canonicalize(const RingElement& g, Variant v);

/// |R_f*| (affine) or |R_f*| / (s-1) (projective), exact.
wide group_order(const QuotientRing& ring, Variant v);

/// Every group element, canonical and sorted lexicographically by
/// coefficient vector. Guarded desk-scale enumeration.
std::vector<GroupElement> all_group_elements(const RingPtr& ring, Variant v);

}  // namespace mdc

#endif  // MDC_RING_HPP
