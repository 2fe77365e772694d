#include "mdc/poly.hpp"

#include <sstream>

namespace mdc {

Poly::Poly(const Field& field, std::vector<int64_t> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (int64_t c : coeffs_) field_.check_element(c);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int64_t Poly::eval(int64_t x) const {
  int64_t r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = field_.add(field_.mul(r, x), *it);
  return r;
}

bool Poly::has_root_in_field() const {
  for (int64_t a = 0; a < field_.order(); ++a)
    if (eval(a) == 0) return true;
  return false;
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  std::vector<int64_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  check_same(o);
  std::vector<int64_t> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<int64_t> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] = field_.add(r[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
  }
  return Poly(field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
  check_same(o);
  if (o.is_zero()) throw ParameterError("polynomial division by zero");
  std::vector<int64_t> rem = coeffs_;
  std::vector<int64_t> quo;
  int64_t lead_inv = field_.inv(o.coeffs_.back());
  while (rem.size() >= o.coeffs_.size() && !rem.empty()) {
    int64_t c = field_.mul(rem.back(), lead_inv);
    size_t shift = rem.size() - o.coeffs_.size();
    if (quo.size() < shift + 1) quo.resize(shift + 1, 0);
    quo[shift] = c;
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
      rem[shift + i] = field_.sub(rem[shift + i], field_.mul(c, o.coeffs_[i]));
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return {Poly(field_, std::move(quo)), Poly(field_, std::move(rem))};
}

bool Poly::is_irreducible() const {
  int deg = degree();
  if (deg < 1) return false;
  if (has_root_in_field()) return false;
  if (deg <= 3) return true;
  int64_t s = field_.order();
  for (int d = 2; d <= deg / 2; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= s;
    for (int64_t idx = 0; idx < count; ++idx) {
      std::vector<int64_t> g(d + 1, 0);
      int64_t v = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = v % s;
        v /= s;
      }
      g[d] = 1;
      if ((*this % Poly(field_, std::move(g))).is_zero()) return false;
    }
  }
  return true;
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs_[i]);
  }
  return s;
}

Poly Poly::parse(const Field& field, const std::string& text) {
  std::vector<int64_t> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      c.push_back(std::stoll(tok));
    } catch (const std::logic_error&) {
      throw ParameterError("cannot parse polynomial coefficient '" + tok + "'");
    }
  }
  return Poly(field, std::move(c));
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = b;
    b = std::move(r);
  }
  return a;
}

Poly select_modulus(const Field& field, int degree) {
  if (degree < 1) throw ParameterError("modulus degree must be positive");
  if (degree == 1)
    throw ParameterError(
        "unsupported parameters: every monic linear polynomial has a root in F_s, "
        "so no rootless modulus of degree 1 exists");
  int64_t s = field.order();
  std::vector<int64_t> cur(degree, 0);
  while (true) {
    std::vector<int64_t> cand(cur);
    cand.push_back(1);
    Poly f(field, std::move(cand));
    if (f.is_irreducible()) return f;
    int i = degree - 1;
    while (i >= 0 && cur[i] == s - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  throw ParameterError("no irreducible modulus of the requested degree exists");
}

}  // namespace mdc
