#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skein/errors.hpp"

namespace skein {

using Int = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Exponent keys. A key identifies a monomial in the ring's variables; it must
// be totally ordered, additive under term products, and know whether its
// monomial is invertible.
// ---------------------------------------------------------------------------

// Monomial q^e in ZZ[q^{±1}].
struct QKey {
  int q = 0;
  friend auto operator<=>(const QKey&, const QKey&) = default;
  QKey operator+(const QKey& o) const { return {q + o.q}; }
  QKey operator-() const { return {-q}; }
  bool invertible() const { return true; }
};

// Monomial q^a z^b in ZZ[q^{±1}, z^{±1}].
struct QZKey {
  int q = 0;
  int z = 0;
  friend auto operator<=>(const QZKey&, const QZKey&) = default;
  QZKey operator+(const QZKey& o) const { return {q + o.q, z + o.z}; }
  QZKey operator-() const { return {-q, -z}; }
  bool invertible() const { return true; }
};

// Multiset of s_k subscripts, stored as sorted (k, multiplicity) pairs.
struct SMultiset {
  std::vector<std::pair<int, int>> items;  // multiplicity >= 1, keys strictly increasing

  friend auto operator<=>(const SMultiset&, const SMultiset&) = default;

  bool empty() const { return items.empty(); }

  SMultiset operator+(const SMultiset& o) const {
    SMultiset out = *this;
    for (const auto& [k, m] : o.items) out.add(k, m);
    return out;
  }

  void add(int k, int mult = 1) {
    for (auto it = items.begin(); it != items.end(); ++it) {
      if (it->first == k) {
        it->second += mult;
        return;
      }
      if (it->first > k) {
        items.insert(it, {k, mult});
        return;
      }
    }
    items.push_back({k, mult});
  }

  std::vector<int> flatten() const {
    std::vector<int> out;
    for (const auto& [k, m] : items)
      for (int i = 0; i < m; ++i) out.push_back(k);
    return out;
  }
};

// Monomial q^a z^b L^c * prod s_k in the trace ring. L stands for the formal
// square root of lambda; the s_k are not invertible.
struct TraceKey {
  int q = 0;
  int z = 0;
  int L = 0;
  SMultiset s;
  friend auto operator<=>(const TraceKey&, const TraceKey&) = default;
  TraceKey operator+(const TraceKey& o) const {
    return {q + o.q, z + o.z, L + o.L, s + o.s};
  }
  TraceKey operator-() const {
    if (!s.empty()) throw NotAUnit("cannot invert a monomial containing s_k");
    return {-q, -z, -L, {}};
  }
  bool invertible() const { return s.empty(); }
};

// ---------------------------------------------------------------------------
// Sparse exact polynomial over the integers, canonical by construction:
// no stored zero coefficients, equality is structural equality.
// ---------------------------------------------------------------------------
template <class Key>
class SparsePoly {
 public:
  using Terms = std::map<Key, Int>;

  SparsePoly() = default;
  /*implicit*/ SparsePoly(int c) { add_term(Key{}, Int(c)); }
  /*implicit*/ SparsePoly(Int c) { add_term(Key{}, std::move(c)); }

  static SparsePoly monomial(Key k, Int c = 1) {
    SparsePoly p;
    p.add_term(std::move(k), std::move(c));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{} &&
           terms_.begin()->second == 1;
  }

  // True iff the polynomial is plus or minus a single invertible monomial.
  bool is_unit() const {
    if (terms_.size() != 1) return false;
    const auto& [k, c] = *terms_.begin();
    return (c == 1 || c == -1) && k.invertible();
  }

  void add_term(Key k, Int c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly operator-() const {
    SparsePoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly pow(unsigned e) const {
    SparsePoly out = SparsePoly(1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  // Exact quotient by a unit (+-monomial).
  SparsePoly div_unit(const SparsePoly& u) const {
    if (!u.is_unit()) throw NotAUnit("divisor is not a unit");
    const auto& [uk, uc] = *u.terms_.begin();
    SparsePoly out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k + (-uk), uc == 1 ? c : -c);
    return out;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  Terms terms_;
};

using LaurentPoly = SparsePoly<QKey>;  // ZZ[q^{±1}]
using CoeffPoly = SparsePoly<QZKey>;   // ZZ[q^{±1}, z^{±1}]
using TraceValue = SparsePoly<TraceKey>;

// Convenience factories.
inline LaurentPoly lp_q(int e, Int c = 1) { return LaurentPoly::monomial({e}, std::move(c)); }
inline CoeffPoly cp_q(int e, Int c = 1) { return CoeffPoly::monomial({e, 0}, std::move(c)); }
inline CoeffPoly cp_z(int e, Int c = 1) { return CoeffPoly::monomial({0, e}, std::move(c)); }

inline CoeffPoly to_coeff(const LaurentPoly& p) {
  CoeffPoly out;
  for (const auto& [k, c] : p.terms()) out.add_term({k.q, 0}, c);
  return out;
}

inline TraceValue to_trace(const CoeffPoly& p) {
  TraceValue out;
  for (const auto& [k, c] : p.terms()) out.add_term({k.q, k.z, 0, {}}, c);
  return out;
}

// True if no term involves z (so the polynomial lives in ZZ[q^{±1}]).
inline bool z_free(const CoeffPoly& p) {
  for (const auto& [k, c] : p.terms())
    if (k.z != 0) return false;
  return true;
}

inline LaurentPoly to_laurent(const CoeffPoly& p) {
  LaurentPoly out;
  for (const auto& [k, c] : p.terms()) {
    if (k.z != 0) throw Error("polynomial involves z, cannot lower to ZZ[q^{±1}]");
    out.add_term({k.q}, c);
  }
  return out;
}

// Human-readable rendering, mostly for diagnostics and reports.
namespace detail {
inline void append_monomial(std::ostringstream& os, const std::string& var, int e) {
  if (e == 0) return;
  os << var;
  if (e != 1) os << "^" << e;
}
}  // namespace detail

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    Int a = c;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    if (a < 0) a = -a;
    first = false;
    if (a != 1 || k.q == 0) os << a.str();
    if (a != 1 && k.q != 0) os << "*";
    detail::append_monomial(os, "q", k.q);
  }
  return os.str();
}

inline std::string to_string(const CoeffPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    Int a = c;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    if (a < 0) a = -a;
    first = false;
    bool wrote = false;
    if (a != 1 || (k.q == 0 && k.z == 0)) {
      os << a.str();
      wrote = true;
    }
    if (k.q != 0) {
      if (wrote) os << "*";
      detail::append_monomial(os, "q", k.q);
      wrote = true;
    }
    if (k.z != 0) {
      if (wrote) os << "*";
      detail::append_monomial(os, "z", k.z);
    }
  }
  return os.str();
}

inline std::string to_string(const TraceValue& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    Int a = c;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    if (a < 0) a = -a;
    first = false;
    bool wrote = false;
    bool bare = k.q == 0 && k.z == 0 && k.L == 0 && k.s.empty();
    if (a != 1 || bare) {
      os << a.str();
      wrote = true;
    }
    auto emit = [&](const std::string& var, int e) {
      if (e == 0) return;
      if (wrote) os << "*";
      detail::append_monomial(os, var, e);
      wrote = true;
    };
    emit("q", k.q);
    emit("z", k.z);
    emit("L", k.L);
    for (const auto& [idx, mult] : k.s.items) {
      if (wrote) os << "*";
      os << "s[" << idx << "]";
      if (mult != 1) os << "^" << mult;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace skein
