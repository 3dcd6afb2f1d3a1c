#pragma once

#include <compare>
#include <map>

#include "skein/caps.hpp"
#include "skein/errors.hpp"
#include "skein/laurent.hpp"
#include "skein/loop_monomial.hpp"
#include "skein/permutation.hpp"

namespace skein {

// Element of H_{1,n}(q) in Sigma_n normal form: a Z[q^{±1}]-combination of
// basis elements (loop monomial) * T_w. Canonical: no zero coefficients, so
// equality of elements is structural equality.
class AlgebraElement {
 public:
  struct Key {
    LoopMonomial loops;
    Permutation perm;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using Terms = std::map<Key, LaurentPoly>;

  explicit AlgebraElement(int n) : n_(n) {
    if (n < 1) throw IndexOutOfRange("strand count must be >= 1");
  }

  static AlgebraElement zero(int n) { return AlgebraElement(n); }

  static AlgebraElement one(int n) {
    AlgebraElement e(n);
    e.add_term(LoopMonomial{}, Permutation::identity(n), LaurentPoly(1));
    return e;
  }

  static AlgebraElement monomial(int n, LoopMonomial loops, Permutation perm,
                                 LaurentPoly c = LaurentPoly(1)) {
    AlgebraElement e(n);
    e.add_term(std::move(loops), std::move(perm), std::move(c));
    return e;
  }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(LoopMonomial loops, Permutation perm, LaurentPoly c) {
    if (c.is_zero()) return;
    if (perm.n() != n_) throw StrandMismatch("term permutation has wrong strand count");
    if (loops.max_index() > n_ - 1)
      throw IndexOutOfRange("loop index exceeds strand count");
    Key key{std::move(loops), std::move(perm)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (terms_.size() >= caps::term_cap())
        throw TermCapExceeded("element exceeds the term cap");
      terms_.emplace(std::move(key), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    if (o.n_ != n_) throw StrandMismatch("adding elements on different strand counts");
    for (const auto& [k, c] : o.terms_) add_term(k.loops, k.perm, c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }

  AlgebraElement& operator-=(const AlgebraElement& o) {
    if (o.n_ != n_) throw StrandMismatch("subtracting elements on different strand counts");
    for (const auto& [k, c] : o.terms_) add_term(k.loops, k.perm, -c);
    return *this;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }

  AlgebraElement scaled(const LaurentPoly& c) const {
    AlgebraElement out(n_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.add_term(k.loops, k.perm, v * c);
    return out;
  }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  int n_;
  Terms terms_;
};

}  // namespace skein
