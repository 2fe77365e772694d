#ifndef MDC_MULTISET_HPP
#define MDC_MULTISET_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mdc/checked.hpp"

namespace mdc {

/// A multiset over a q-symbol alphabet, stored as its multiplicity vector.
class Multiset {
 public:
  explicit Multiset(std::vector<int64_t> counts);
  static Multiset zeros(int64_t q) { return Multiset(std::vector<int64_t>(q, 0)); }

  int64_t q() const { return static_cast<int64_t>(counts_.size()); }
  int64_t n() const { return n_; }
  int64_t operator[](int64_t i) const { return counts_[i]; }
  const std::vector<int64_t>& counts() const { return counts_; }

  /// Multiset union S ⊎ T (componentwise sum).
  Multiset uplus(const Multiset& o) const;
  /// Componentwise difference; requires contains(o).
  Multiset minus(const Multiset& o) const;
  /// True when o fits inside this multiset componentwise.
  bool contains(const Multiset& o) const;
  int64_t intersection_size(const Multiset& o) const;

  bool operator==(const Multiset& o) const { return counts_ == o.counts_; }
  bool operator!=(const Multiset& o) const { return !(*this == o); }
  bool operator<(const Multiset& o) const { return counts_ < o.counts_; }

  /// "[c0,c1,...]" multiplicity-vector form.
  std::string str() const;
  /// "a,b,c" symbol-list form; the symbol at inf_index prints as "inf".
  std::string str_symbols(int64_t inf_index = -1) const;

 private:
  void check_same_shape(const Multiset& o) const;
  std::vector<int64_t> counts_;
  int64_t n_;
};

/// |S_{n,q}| = C(n+q-1, q-1).
wide simplex_size(int64_t n, int64_t q);

/// Visits every multiset of cardinality n over q symbols in lexicographic
/// multiplicity-vector order.
void for_each_multiset(int64_t n, int64_t q, const std::function<void(const Multiset&)>& fn);

/// All of S_{n,q} in lexicographic order, guarded by max_size.
std::vector<Multiset> all_multisets(int64_t n, int64_t q, wide max_size);

/// Parses either a symbol list ("0,1,1", with "inf" allowed when
/// inf_index >= 0) or a multiplicity vector ("[1,2,0,0]") over q symbols.
Multiset parse_multiset(const std::string& text, int64_t q, int64_t inf_index = -1);

}  // namespace mdc

#endif  // MDC_MULTISET_HPP
