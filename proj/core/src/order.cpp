#include "skein/order.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace skein {

OrderKey OrderKey::of(const LoopMonomial& m) {
  OrderKey k;
  k.level = m.level();
  k.index = monomial_index(m);
  for (const auto& [i, e] : m.exponents()) {
    k.support.push_back(i);
    k.exps.push_back(e);
  }
  return k;
}

std::strong_ordering OrderKey::compare(const OrderKey& o) const {
  if (level != o.level) return level <=> o.level;
  if (index != o.index) return index <=> o.index;
  // Positional on the increasing index sequences: at the first difference the
  // smaller index makes the greater monomial.
  std::size_t common = std::min(support.size(), o.support.size());
  for (std::size_t p = 0; p < common; ++p) {
    if (support[p] != o.support[p])
      return support[p] < o.support[p] ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
  }
  // Equal prefixes with equal top index force equal lengths: a strictly
  // increasing proper extension would exceed the common maximum.
  assert(support.size() == o.support.size());
  // Exponents from the highest position downward: smaller |exp| first, and for
  // equal |exp| the larger signed value is the smaller monomial.
  for (std::size_t p = support.size(); p-- > 0;) {
    int a = exps[p], b = o.exps[p];
    if (a == b) continue;
    if (std::abs(a) != std::abs(b)) return std::abs(a) <=> std::abs(b);
    return a > b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

int monomial_index(const LoopMonomial& m) { return std::max(0, m.max_index()); }

int monomial_level(const LoopMonomial& m) { return m.level(); }

std::strong_ordering order_compare(const LoopMonomial& a, const LoopMonomial& b) {
  return OrderKey::of(a).compare(OrderKey::of(b));
}

LoopMonomial homologous(const LoopMonomial& mprime) { return mprime; }

bool in_basis_grammar(const LoopMonomial& m) { return m.gap_free(); }

bool canonical_exponents(const LoopMonomial& m) {
  int prev = 0;
  bool first = true;
  for (const auto& [i, e] : m.exponents()) {
    if (!first && e < prev) return false;
    prev = e;
    first = false;
  }
  return true;
}

namespace {

void enumerate_rec(int position, int top, int remaining, int max_abs_exp,
                   bool canonical, int prev_exp, LoopMonomial& partial,
                   std::vector<LoopMonomial>& out) {
  if (position > top) {
    if (remaining == 0) out.push_back(partial);
    return;
  }
  int slots_left = top - position;  // positions after this one
  for (int e = -max_abs_exp; e <= max_abs_exp; ++e) {
    if (e == 0) continue;
    if (canonical && e < prev_exp) continue;
    // The remaining positions can shift the level by at most max_abs_exp each.
    int rest = remaining - e;
    if (std::abs(rest) > slots_left * max_abs_exp) continue;
    partial.set(position, e);
    enumerate_rec(position + 1, top, rest, max_abs_exp, canonical, e, partial, out);
    partial.set(position, 0);
  }
}

}  // namespace

std::vector<LoopMonomial> enumerate_level(int level, int max_index, int max_abs_exp,
                                          bool canonical) {
  if (max_index < 0 || max_abs_exp < 0) throw IndexOutOfRange("enumerate_level: bounds must be >= 0");
  std::vector<LoopMonomial> out;
  if (level == 0) out.push_back(LoopMonomial{});
  for (int top = 0; top <= max_index; ++top) {
    LoopMonomial partial;
    enumerate_rec(0, top, level, max_abs_exp, canonical, -max_abs_exp, partial, out);
  }
  std::sort(out.begin(), out.end(), [](const LoopMonomial& a, const LoopMonomial& b) {
    return order_compare(a, b) == std::strong_ordering::less;
  });
  return out;
}

}  // namespace skein
