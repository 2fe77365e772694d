#include "mdc/ring.hpp"

#include <algorithm>
#include <map>

namespace mdc {

namespace {
constexpr wide kUnitEnumerationGuard = 10'000'000;

Poly lift(const QuotientRing& ring, const std::vector<int64_t>& coeffs) {
  return Poly(ring.field(), coeffs);
}
}  // namespace

// ---------------------------------------------------------------------------
// QuotientRing

QuotientRing::QuotientRing(const Field& field, Poly modulus)
    : field_(field), modulus_(std::move(modulus)) {
  if (!field_.same_field(modulus_.field())) throw ParameterError("modulus field mismatch");
  deg_ = modulus_.degree();
  if (deg_ < 1) throw ParameterError("ring modulus must have positive degree");
  if (deg_ == 1)
    throw ParameterError(
        "unsupported parameters: a degree-1 modulus always has a root in F_s");
  if (modulus_.has_root_in_field())
    throw ParameterError("ring modulus has a root in F_s; a rootless modulus is required");
  irreducible_ = modulus_.is_irreducible();
  // Fold table: X^{deg+j} mod f.
  fold_.resize(deg_ - 1);
  std::vector<int64_t> x_deg(deg_ + 1, 0);
  x_deg[deg_] = 1;
  Poly cur = Poly(field_, std::move(x_deg)) % modulus_;
  for (int j = 0; j < deg_ - 1; ++j) {
    std::vector<int64_t> row(deg_, 0);
    for (int i = 0; i <= cur.degree(); ++i) row[i] = cur.coeff(i);
    fold_[j] = row;
    std::vector<int64_t> shifted(cur.degree() + 2, 0);
    for (int i = 0; i <= cur.degree(); ++i) shifted[i + 1] = cur.coeff(i);
    cur = Poly(field_, std::move(shifted)) % modulus_;
  }
}

RingPtr QuotientRing::make(const Field& field, Poly modulus) {
  return RingPtr(new QuotientRing(field, std::move(modulus)));
}

RingElement QuotientRing::element(std::vector<int64_t> coeffs) const {
  return RingElement(shared_from_this(), std::move(coeffs));
}

RingElement QuotientRing::zero() const { return element(std::vector<int64_t>(deg_, 0)); }

RingElement QuotientRing::one() const {
  std::vector<int64_t> c(deg_, 0);
  c[0] = 1;
  return element(std::move(c));
}

RingElement QuotientRing::xi() const {
  std::vector<int64_t> c(deg_, 0);
  c[1] = 1;
  return element(std::move(c));
}

RingElement QuotientRing::xi_minus(int64_t a) const {
  std::vector<int64_t> c(deg_, 0);
  c[0] = field_.neg(a);
  c[1] = 1;
  return element(std::move(c));
}

RingElement QuotientRing::from_field_scalar(int64_t a) const {
  field_.check_element(a);
  std::vector<int64_t> c(deg_, 0);
  c[0] = a;
  return element(std::move(c));
}

std::vector<int64_t> QuotientRing::reduce_product(const std::vector<int64_t>& a,
                                                  const std::vector<int64_t>& b) const {
  std::vector<int64_t> prod(2 * deg_ - 1, 0);
  for (int i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < deg_; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] = field_.add(prod[i + j], field_.mul(a[i], b[j]));
    }
  }
  std::vector<int64_t> red(prod.begin(), prod.begin() + deg_);
  for (int j = 0; j < deg_ - 1; ++j) {
    int64_t c = prod[deg_ + j];
    if (c == 0) continue;
    for (int i = 0; i < deg_; ++i) red[i] = field_.add(red[i], field_.mul(c, fold_[j][i]));
  }
  return red;
}

wide QuotientRing::unit_count() const {
  int64_t s = field_.order();
  if (irreducible_) return checked_sub(checked_pow(s, deg_), 1);
  wide total = checked_pow(s, deg_);
  if (total > kUnitEnumerationGuard)
    throw GuardError("unit enumeration guard exceeded for reducible modulus");
  wide units = 0;
  std::vector<int64_t> coeffs(deg_, 0);
  for (wide idx = 0; idx < total; ++idx) {
    wide v = idx;
    for (int i = 0; i < deg_; ++i) {
      coeffs[i] = static_cast<int64_t>(v % s);
      v /= s;
    }
    Poly g(field_, coeffs);
    if (!g.is_zero() && poly_gcd(g, modulus_).degree() == 0) units = checked_add(units, 1);
  }
  return units;
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(RingPtr ring, std::vector<int64_t> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (!ring_) throw ParameterError("ring element without a ring");
  if (static_cast<int>(coeffs_.size()) != ring_->degree())
    throw ParameterError("ring element coefficient vector has wrong length");
  for (int64_t c : coeffs_) ring_->field().check_element(c);
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t c) { return c == 0; });
}

bool RingElement::is_unit() const {
  if (is_zero()) return false;
  if (ring_->modulus_irreducible()) return true;
  return poly_gcd(lift(*ring_, coeffs_), ring_->modulus()).degree() == 0;
}

RingElement RingElement::operator+(const RingElement& o) const {
  if (!ring_->same_ring(*o.ring_)) throw ParameterError("ring mismatch");
  std::vector<int64_t> r(coeffs_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = ring_->field().add(coeffs_[i], o.coeffs_[i]);
  return RingElement(ring_, std::move(r));
}

RingElement RingElement::operator-(const RingElement& o) const {
  if (!ring_->same_ring(*o.ring_)) throw ParameterError("ring mismatch");
  std::vector<int64_t> r(coeffs_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = ring_->field().sub(coeffs_[i], o.coeffs_[i]);
  return RingElement(ring_, std::move(r));
}

RingElement RingElement::operator*(const RingElement& o) const {
  if (!ring_->same_ring(*o.ring_)) throw ParameterError("ring mismatch");
  return RingElement(ring_, ring_->reduce_product(coeffs_, o.coeffs_));
}

RingElement RingElement::inverse() const {
  // Extended Euclid over F_s[X] on (lift, f).
  const Field& fld = ring_->field();
  Poly r0 = ring_->modulus();
  Poly r1 = lift(*ring_, coeffs_);
  Poly t0(fld);
  Poly t1(fld, std::vector<int64_t>{1});
  while (!r1.is_zero()) {
    auto [q, rem] = r0.divmod(r1);
    Poly tnext = t0 - q * t1;
    t0 = t1;
    t1 = std::move(tnext);
    r0 = r1;
    r1 = std::move(rem);
  }
  if (r0.degree() != 0)
    throw NonInvertibleError("ring element is not a unit (gcd with modulus is nonconstant)");
  Poly result = t0 * Poly(fld, std::vector<int64_t>{fld.inv(r0.coeff(0))});
  std::vector<int64_t> c(ring_->degree(), 0);
  for (int i = 0; i <= result.degree(); ++i) c[i] = result.coeff(i);
  return RingElement(ring_, std::move(c));
}

RingElement RingElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  RingElement acc = ring_->one();
  RingElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

RingElement RingElement::scaled(int64_t field_scalar) const {
  const Field& fld = ring_->field();
  std::vector<int64_t> r(coeffs_.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = fld.mul(coeffs_[i], field_scalar);
  return RingElement(ring_, std::move(r));
}

bool RingElement::operator==(const RingElement& o) const {
  return ring_->same_ring(*o.ring_) && coeffs_ == o.coeffs_;
}

std::string RingElement::str() const {
  std::string s;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs_[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// GroupElement

std::string variant_name(Variant v) { return v == Variant::projective ? "projective" : "affine"; }

Variant parse_variant(const std::string& name) {
  if (name == "projective") return Variant::projective;
  if (name == "affine") return Variant::affine;
  throw ParameterError("unknown variant '" + name + "' (expected projective or affine)");
}

GroupElement canonicalize(const RingElement& g, Variant v) {
  if (!g.is_unit()) throw NonInvertibleError("cannot canonicalize a non-unit");
  if (v == Variant::affine) return GroupElement(v, g);
  const auto& c = g.coeffs();
  int top = static_cast<int>(c.size()) - 1;
  while (top >= 0 && c[top] == 0) --top;
  int64_t lead = c[top];
  if (lead == 1) return GroupElement(v, g);
  return GroupElement(v, g.scaled(g.ring()->field().inv(lead)));
}

GroupElement GroupElement::identity(const RingPtr& ring, Variant v) {
  return canonicalize(ring->one(), v);
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (variant_ != o.variant_) throw ParameterError("group variant mismatch");
  return canonicalize(rep_ * o.rep_, variant_);
}

GroupElement GroupElement::inverse() const { return canonicalize(rep_.inverse(), variant_); }

GroupElement GroupElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  GroupElement acc = identity(rep_.ring(), variant_);
  GroupElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

bool GroupElement::operator==(const GroupElement& o) const {
  return variant_ == o.variant_ && rep_ == o.rep_;
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (variant_ != o.variant_) throw ParameterError("group variant mismatch");
  return coeffs() < o.coeffs();
}

std::string GroupElement::key() const {
  const auto& c = coeffs();
  std::string k;
  k.reserve(4 * c.size());
  for (int64_t v : c) {
    for (int b = 0; b < 4; ++b) {
      k.push_back(static_cast<char>(v & 0xff));
      v >>= 8;
    }
  }
  return k;
}

// ---------------------------------------------------------------------------

wide group_order(const QuotientRing& ring, Variant v) {
  wide units = ring.unit_count();
  if (v == Variant::affine) return units;
  int64_t scalars = ring.field().order() - 1;
  if (units % scalars != 0) throw Error("unit group size not divisible by |F_s*|");
  return units / scalars;
}

std::vector<GroupElement> all_group_elements(const RingPtr& ring, Variant v) {
  int64_t s = ring->field().order();
  wide total = checked_pow(s, ring->degree());
  if (total > kUnitEnumerationGuard) throw GuardError("group enumeration guard exceeded");
  std::map<std::vector<int64_t>, GroupElement> seen;
  std::vector<int64_t> coeffs(ring->degree(), 0);
  for (wide idx = 1; idx < total; ++idx) {
    wide rest = idx;
    for (int i = 0; i < ring->degree(); ++i) {
      coeffs[i] = static_cast<int64_t>(rest % s);
      rest /= s;
    }
    RingElement g = ring->element(coeffs);
    if (!g.is_unit()) continue;
    GroupElement canon = canonicalize(g, v);
    seen.emplace(canon.coeffs(), canon);
  }
  std::vector<GroupElement> out;
  out.reserve(seen.size());
  for (auto& [unused, g] : seen) out.push_back(g);
  return out;
}

}  // namespace mdc
