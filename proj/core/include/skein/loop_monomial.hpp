#pragma once

#include <compare>
#include <map>

#include "skein/errors.hpp"

namespace skein {

// Commuting product of looping elements: index 0 is t, index i >= 1 is
// t_i = g_i ... g_1 t g_1 ... g_i. Canonical form is the exponent map with no
// stored zeros (the t_i commute, so the map determines the product).
class LoopMonomial {
 public:
  LoopMonomial() = default;

  static LoopMonomial single(int index, int exp) {
    LoopMonomial m;
    m.set(index, exp);
    return m;
  }

  const std::map<int, int>& exponents() const { return exps_; }
  bool empty() const { return exps_.empty(); }

  int exponent(int index) const {
    auto it = exps_.find(index);
    return it == exps_.end() ? 0 : it->second;
  }

  void set(int index, int exp) {
    if (index < 0) throw IndexOutOfRange("loop index must be >= 0");
    if (exp == 0)
      exps_.erase(index);
    else
      exps_[index] = exp;
  }

  void bump(int index, int delta) { set(index, exponent(index) + delta); }

  // -1 when empty.
  int max_index() const { return exps_.empty() ? -1 : exps_.rbegin()->first; }

  // Sum of exponents.
  int level() const {
    int s = 0;
    for (const auto& [i, e] : exps_) s += e;
    return s;
  }

  // Support equals {0, 1, ..., max_index}, or empty.
  bool gap_free() const {
    int expected = 0;
    for (const auto& [i, e] : exps_)
      if (i != expected++) return false;
    return true;
  }

  LoopMonomial times(const LoopMonomial& o) const {
    LoopMonomial out = *this;
    for (const auto& [i, e] : o.exps_) out.bump(i, e);
    return out;
  }

  LoopMonomial inverse() const {
    LoopMonomial out;
    for (const auto& [i, e] : exps_) out.exps_[i] = -e;
    return out;
  }

  friend auto operator<=>(const LoopMonomial&, const LoopMonomial&) = default;

 private:
  std::map<int, int> exps_;
};

}  // namespace skein
