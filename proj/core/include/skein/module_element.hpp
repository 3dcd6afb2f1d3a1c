#pragma once

#include <map>

#include "skein/laurent.hpp"
#include "skein/loop_monomial.hpp"

namespace skein {

// Element of the skein module span: a Z[q^{±1}, z^{±1}]-combination of
// braid-free loop monomials. Canonical: no zero coefficients.
class ModuleElement {
 public:
  using Terms = std::map<LoopMonomial, CoeffPoly>;

  ModuleElement() = default;

  static ModuleElement monomial(LoopMonomial m, CoeffPoly c = CoeffPoly(1)) {
    ModuleElement out;
    out.add_term(std::move(m), std::move(c));
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CoeffPoly coefficient(const LoopMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CoeffPoly() : it->second;
  }

  void add_term(LoopMonomial m, CoeffPoly c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ModuleElement& operator+=(const ModuleElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) {
    return a += b;
  }
  ModuleElement& operator-=(const ModuleElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) {
    return a -= b;
  }

  ModuleElement scaled(const CoeffPoly& c) const {
    ModuleElement out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
  }

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  Terms terms_;
};

}  // namespace skein
