#include "mdc/gf.hpp"

#include <algorithm>
#include <sstream>

#include "mdc/checked.hpp"

namespace mdc {
namespace {

constexpr int64_t kMaxOrder = 1 << 16;

// Polynomial helpers over F_p. Vectors hold coefficients constant term
// first; trailing zeros are trimmed so deg(v) = v.size() - 1 and the zero
// polynomial is the empty vector.
using PVec = std::vector<int64_t>;

void trim(PVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int64_t mod_inv_prime(int64_t a, int64_t p) {
  // Extended Euclid on integers.
  int64_t t = 0, t1 = 1, r = p, r1 = a % p;
  while (r1 != 0) {
    int64_t q = r / r1;
    int64_t tmp = t - q * t1;
    t = t1;
    t1 = tmp;
    tmp = r - q * r1;
    r = r1;
    r1 = tmp;
  }
  if (r != 1) throw NonInvertibleError("element not invertible mod p");
  return ((t % p) + p) % p;
}

PVec pmul(const PVec& a, const PVec& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Remainder of a modulo b (b nonzero). Returns the remainder only.
PVec pmod(PVec a, const PVec& b, int64_t p) {
  int64_t lead_inv = mod_inv_prime(b.back(), p);
  while (a.size() >= b.size()) {
    int64_t c = (a.back() * lead_inv) % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    }
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

int64_t peval(const PVec& v, int64_t x, int64_t p) {
  int64_t r = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) r = (r * x + *it) % p;
  return r;
}

PVec index_to_poly(int64_t idx, int64_t p) {
  PVec v;
  while (idx > 0) {
    v.push_back(idx % p);
    idx /= p;
  }
  return v;
}

bool irreducible_over_prime(const PVec& f, int64_t p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int64_t a = 0; a < p; ++a)
    if (peval(f, a, p) == 0) return false;
  if (deg <= 3) return true;  // no roots and no factor of degree <= deg/2 <= 1
  // Trial division by every monic polynomial of degree 2..deg/2.
  for (int d = 2; d <= deg / 2; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t idx = 0; idx < count; ++idx) {
      PVec g = index_to_poly(idx, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (pmod(f, g, p).empty()) return false;
    }
  }
  return true;
}

PVec smallest_irreducible(int64_t p, int k) {
  // Walk coefficient vectors (c_0,...,c_{k-1}) in lexicographic order,
  // constant term first, and return the first monic irreducible hit.
  std::vector<int64_t> cur(k, 0);
  while (true) {
    PVec cand(cur);
    cand.push_back(1);
    if (irreducible_over_prime(cand, p)) return cand;
    int i = k - 1;
    while (i >= 0 && cur[i] == p - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  throw ParameterError("no irreducible polynomial found");  // unreachable for k >= 1
}

}  // namespace

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field::Field(int64_t p) : p_(p), k_(1), modulus_{0, 1}, order_(p) {
  if (!is_prime(p)) throw ParameterError("field characteristic must be prime");
  if (order_ > kMaxOrder) throw ParameterError("field order exceeds 2^16");
}

Field::Field(int64_t p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw ParameterError("field characteristic must be prime");
  if (k < 1) throw ParameterError("extension degree must be positive");
  wide ord = checked_pow(p, k);
  if (ord > kMaxOrder) throw ParameterError("field order exceeds 2^16");
  order_ = static_cast<int64_t>(ord);
  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = smallest_irreducible(p, k);
    init_extension();
  }
}

Field::Field(int64_t p, int k, std::vector<int64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw ParameterError("field characteristic must be prime");
  if (k < 2) throw ParameterError("explicit modulus requires extension degree >= 2");
  wide ord = checked_pow(p, k);
  if (ord > kMaxOrder) throw ParameterError("field order exceeds 2^16");
  order_ = static_cast<int64_t>(ord);
  if (static_cast<int>(modulus_.size()) != k + 1)
    throw ParameterError("modulus must have degree k (k+1 coefficients)");
  for (int64_t c : modulus_)
    if (c < 0 || c >= p) throw ParameterError("modulus coefficient out of range");
  if (modulus_.back() != 1) throw ParameterError("modulus must be monic");
  for (int64_t a = 0; a < p; ++a)
    if (peval(modulus_, a, p) == 0)
      throw ParameterError("modulus has a root in F_p");
  if (!irreducible_over_prime(modulus_, p))
    throw ParameterError("modulus is not irreducible over F_p");
  init_extension();
}

void Field::init_extension() {
  // X^{k+j} mod modulus, built incrementally from X^k = -(low part).
  fold_.assign(k_ - 1, PVec(k_, 0));
  PVec cur(k_, 0);
  for (int i = 0; i < k_; ++i) cur[i] = (p_ - modulus_[i]) % p_;
  fold_[0] = cur;
  for (int j = 1; j < k_ - 1; ++j) {
    PVec next(k_, 0);
    // next = X * cur mod modulus
    for (int i = k_ - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    int64_t top = cur[k_ - 1];
    if (top != 0)
      for (int i = 0; i < k_; ++i) next[i] = (next[i] + top * fold_[0][i]) % p_;
    fold_[j] = next;
    cur = next;
  }
}

Field Field::of_order(int64_t s) {
  if (s < 2) throw ParameterError("field order must be at least 2");
  int64_t p = 2;
  while (p * p <= s && s % p != 0) ++p;
  if (p * p > s) p = s;  // s itself is prime
  int k = 0;
  int64_t rest = s;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw ParameterError("field order " + std::to_string(s) + " is not a prime power");
  return k == 1 ? Field(p) : Field(p, k);
}

Field Field::parse(const std::string& text) {
  std::string base = text;
  std::string mod_part;
  auto pos = text.find("mod=");
  if (pos != std::string::npos) {
    base = text.substr(0, pos);
    mod_part = text.substr(pos + 4);
  }
  // strip spaces
  base.erase(std::remove(base.begin(), base.end(), ' '), base.end());
  int64_t p = 0;
  int k = 1;
  auto caret = base.find('^');
  try {
    if (caret == std::string::npos) {
      int64_t s = std::stoll(base);
      if (mod_part.empty()) return of_order(s);
      Field auto_field = of_order(s);
      p = auto_field.characteristic();
      k = auto_field.degree();
    } else {
      p = std::stoll(base.substr(0, caret));
      k = std::stoi(base.substr(caret + 1));
    }
  } catch (const std::logic_error&) {
    throw ParameterError("cannot parse field spec '" + text + "'");
  }
  if (mod_part.empty()) return k == 1 ? Field(p) : Field(p, k);
  std::vector<int64_t> mod;
  std::stringstream ss(mod_part);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      mod.push_back(std::stoll(tok));
    } catch (const std::logic_error&) {
      throw ParameterError("cannot parse modulus coefficient '" + tok + "'");
    }
  }
  return Field(p, k, std::move(mod));
}

std::string Field::text() const {
  if (k_ == 1) return std::to_string(p_);
  std::string s = std::to_string(p_) + "^" + std::to_string(k_) + " mod=";
  for (int i = 0; i <= k_; ++i) {
    if (i) s += ",";
    s += std::to_string(modulus_[i]);
  }
  return s;
}

void Field::check_element(int64_t a) const {
  if (a < 0 || a >= order_) throw ParameterError("field element out of range");
}

int64_t Field::add(int64_t a, int64_t b) const {
  check_element(a);
  check_element(b);
  if (k_ == 1) return (a + b) % p_;
  int64_t r = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    int64_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += ((da + db) % p_) * scale;
    scale *= p_;
  }
  return r;
}

int64_t Field::sub(int64_t a, int64_t b) const { return add(a, neg(b)); }

int64_t Field::neg(int64_t a) const {
  check_element(a);
  if (k_ == 1) return (p_ - a) % p_;
  int64_t r = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    int64_t d = a % p_;
    a /= p_;
    r += ((p_ - d) % p_) * scale;
    scale *= p_;
  }
  return r;
}

int64_t Field::mul(int64_t a, int64_t b) const {
  check_element(a);
  check_element(b);
  if (k_ == 1) return (a * b) % p_;
  std::vector<int64_t> ca = coeffs(a), cb = coeffs(b);
  std::vector<int64_t> prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  }
  std::vector<int64_t> red(prod.begin(), prod.begin() + k_);
  for (int j = 0; j < k_ - 1; ++j) {
    int64_t c = prod[k_ + j];
    if (c == 0) continue;
    for (int i = 0; i < k_; ++i) red[i] = (red[i] + c * fold_[j][i]) % p_;
  }
  return from_coeffs(red);
}

int64_t Field::inv(int64_t a) const {
  check_element(a);
  if (a == 0) throw NonInvertibleError("zero is not invertible");
  if (k_ == 1) return mod_inv_prime(a, p_);
  // Extended Euclid over F_p[X] on (lift(a), modulus).
  PVec r0 = modulus_, r1 = coeffs(a);
  trim(r1);
  PVec t0 = {}, t1 = {1};
  while (!r1.empty()) {
    // Divide r0 by r1: quotient q, remainder r0 - q*r1.
    PVec q;
    PVec rem = r0;
    int64_t lead_inv = mod_inv_prime(r1.back(), p_);
    while (rem.size() >= r1.size() && !rem.empty()) {
      int64_t c = (rem.back() * lead_inv) % p_;
      size_t shift = rem.size() - r1.size();
      if (q.size() < shift + 1) q.resize(shift + 1, 0);
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i)
        rem[shift + i] = ((rem[shift + i] - c * r1[i]) % p_ + p_) % p_;
      trim(rem);
    }
    PVec qt1 = pmul(q, t1, p_);
    PVec tnext(std::max(t0.size(), qt1.size()), 0);
    for (size_t i = 0; i < tnext.size(); ++i) {
      int64_t x = i < t0.size() ? t0[i] : 0;
      int64_t y = i < qt1.size() ? qt1[i] : 0;
      tnext[i] = ((x - y) % p_ + p_) % p_;
    }
    trim(tnext);
    t0 = t1;
    t1 = tnext;
    r0 = r1;
    r1 = rem;
  }
  // r0 = gcd, a constant (modulus irreducible and a != 0).
  if (r0.size() != 1) throw NonInvertibleError("element not invertible");
  int64_t scale = mod_inv_prime(r0[0], p_);
  PVec res(k_, 0);
  for (size_t i = 0; i < t0.size(); ++i) res[i] = (t0[i] * scale) % p_;
  return from_coeffs(res);
}

int64_t Field::pow(int64_t a, long long e) const {
  check_element(a);
  if (e < 0) return pow(inv(a), -e);
  int64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e > 0) a = mul(a, a);
  }
  return r;
}

int64_t Field::from_int(long long v) const {
  int64_t r = static_cast<int64_t>(((v % p_) + p_) % p_);
  return r;
}

std::vector<int64_t> Field::coeffs(int64_t a) const {
  check_element(a);
  std::vector<int64_t> c(k_, 0);
  for (int i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

int64_t Field::from_coeffs(const std::vector<int64_t>& c) const {
  if (static_cast<int>(c.size()) != k_) throw ParameterError("coefficient vector has wrong length");
  int64_t r = 0, scale = 1;
  for (int i = 0; i < k_; ++i) {
    if (c[i] < 0 || c[i] >= p_) throw ParameterError("coefficient out of range");
    r += c[i] * scale;
    scale *= p_;
  }
  return r;
}

}  // namespace mdc
