#include "skein/engine.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace skein {

namespace {

const LaurentPoly kQ = lp_q(1);            // q
const LaurentPoly kQInv = lp_q(-1);        // q^{-1}
const LaurentPoly kQm1 = lp_q(1) - lp_q(0);      // q - 1
const LaurentPoly kQInvm1 = lp_q(-1) - lp_q(0);  // q^{-1} - 1

// Sigma_n expansion of T_w * t_k^{eps}. Recurses on a descent of w: with
// w = w' s_i, the letter t_k^{eps} crosses g_i by one of the interaction rules
//   g_i t_k^{±1}    = t_k^{±1} g_i                      (k > i or k < i-1)
//   g_i t_i         = q t_{i-1} g_i + (q-1) t_i
//   g_i t_{i-1}     = q^{-1} t_i g_i + (q^{-1}-1) t_i
//   g_i t_{i-1}^{-1} = q t_i^{-1} g_i + (q-1) t_{i-1}^{-1}
//   g_i t_i^{-1}    = q^{-1} t_{i-1}^{-1} g_i + (q^{-1}-1) t_{i-1}^{-1}
// and the recursion continues on the strictly shorter w'.
AlgebraElement push_through(const Permutation& w, int k, int eps, int n);

struct PushKey {
  std::vector<int> images;
  int k;
  int eps;
  friend auto operator<=>(const PushKey&, const PushKey&) = default;
};

AlgebraElement push_through_uncached(const Permutation& w, int k, int eps, int n) {
  int i = 1;
  while (!w.descent(i)) ++i;
  Permutation wp = w.times_s(i);

  auto with_g = [&](const AlgebraElement& e) { return append_braid(e, i, +1); };

  if (k > i || k < i - 1) {
    return with_g(push_through(wp, k, eps, n));
  }
  if (k == i && eps > 0) {
    return with_g(push_through(wp, i - 1, +1, n)).scaled(kQ) +
           push_through(wp, i, +1, n).scaled(kQm1);
  }
  if (k == i - 1 && eps > 0) {
    AlgebraElement r = push_through(wp, i, +1, n);
    return with_g(r).scaled(kQInv) + r.scaled(kQInvm1);
  }
  if (k == i - 1 && eps < 0) {
    return with_g(push_through(wp, i, -1, n)).scaled(kQ) +
           push_through(wp, i - 1, -1, n).scaled(kQm1);
  }
  // k == i, eps < 0
  AlgebraElement r = push_through(wp, i - 1, -1, n);
  return with_g(r).scaled(kQInv) + r.scaled(kQInvm1);
}

AlgebraElement push_through(const Permutation& w, int k, int eps, int n) {
  if (k < 0 || k > n - 1) throw IndexOutOfRange("loop index exceeds strand count");
  if (w.is_identity())
    return AlgebraElement::monomial(n, LoopMonomial::single(k, eps),
                                    Permutation::identity(n));
  thread_local std::map<PushKey, AlgebraElement> memo;
  PushKey key{w.images(), k, eps};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  AlgebraElement res = push_through_uncached(w, k, eps, n);
  memo.emplace(std::move(key), res);
  return res;
}

}  // namespace

AlgebraElement append_braid(const AlgebraElement& e, int i, int sign) {
  if (i < 1 || i > e.n() - 1) throw IndexOutOfRange("braid letter index out of range");
  if (sign < 0) {
    // g_i^{-1} = q^{-1} g_i + (q^{-1} - 1), from the quadratic relation.
    return append_braid(e, i, +1).scaled(kQInv) + e.scaled(kQInvm1);
  }
  AlgebraElement out(e.n());
  for (const auto& [key, c] : e.terms()) {
    if (!key.perm.descent(i)) {
      out.add_term(key.loops, key.perm.times_s(i), c);
    } else {
      out.add_term(key.loops, key.perm, c * kQm1);
      out.add_term(key.loops, key.perm.times_s(i), c * kQ);
    }
  }
  return out;
}

AlgebraElement append_loop(const AlgebraElement& e, int index, int sign) {
  AlgebraElement out(e.n());
  for (const auto& [key, c] : e.terms()) {
    AlgebraElement pushed = push_through(key.perm, index, sign, e.n());
    for (const auto& [pkey, pc] : pushed.terms())
      out.add_term(key.loops.times(pkey.loops), pkey.perm, c * pc);
  }
  return out;
}

AlgebraElement append_letter(const AlgebraElement& e, const Letter& l) {
  switch (l.kind) {
    case Letter::Kind::BraidG:
      return append_braid(e, l.index, l.sign);
    case Letter::Kind::LoopT:
      if (l.index == 0) return append_loop(e, 0, l.sign);
      [[fallthrough]];
    case Letter::Kind::LoopTPrime: {
      AlgebraElement cur = e;
      for (const Letter& base : expand_macro(l).letters) cur = append_letter(cur, base);
      return cur;
    }
  }
  throw Error("append_letter: bad letter kind");
}

AlgebraElement normal_form(const Word& w) {
  AlgebraElement e = AlgebraElement::one(w.n);
  for (const Letter& l : w.letters) e = append_letter(e, l);
  return e;
}

AlgebraElement prefix_loops(const AlgebraElement& e, const LoopMonomial& loops) {
  AlgebraElement out(e.n());
  for (const auto& [key, c] : e.terms()) out.add_term(loops.times(key.loops), key.perm, c);
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n()) throw StrandMismatch("multiply: strand counts differ");
  AlgebraElement out(a.n());
  for (const auto& [key, c] : b.terms()) {
    AlgebraElement cur = a;
    for (const auto& [idx, exp] : key.loops.exponents()) {
      int s = exp > 0 ? +1 : -1;
      for (int r = 0; r < (exp > 0 ? exp : -exp); ++r) cur = append_loop(cur, idx, s);
    }
    for (int i : key.perm.reduced_word()) cur = append_braid(cur, i, +1);
    out += cur.scaled(c);
  }
  return out;
}

AlgebraElement embed(const AlgebraElement& e, int n2) {
  if (n2 < e.n()) throw ShrinkNotAllowed("embed: cannot shrink");
  AlgebraElement out(n2);
  for (const auto& [key, c] : e.terms())
    out.add_term(key.loops, key.perm.extended(n2), c);
  return out;
}

AlgebraElement shrink(const AlgebraElement& e, int n2) {
  if (n2 > e.n()) throw IndexOutOfRange("shrink: target exceeds source");
  AlgebraElement out(n2);
  for (const auto& [key, c] : e.terms()) {
    if (key.loops.max_index() > n2 - 1)
      throw ShrinkNotAllowed("shrink: loop index uses a dropped strand");
    out.add_term(key.loops, key.perm.restricted(n2), c);
  }
  return out;
}

int used_strands(const AlgebraElement& e) {
  int used = 1;
  for (const auto& [key, c] : e.terms()) {
    used = std::max(used, key.loops.max_index() + 1);
    used = std::max(used, key.perm.top_moved());
  }
  return used;
}

bool equal(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n()) throw StrandMismatch("equal: strand counts differ");
  return a == b;
}

AlgebraElement conjugate_by(const Word& u, const AlgebraElement& x) {
  AlgebraElement cur = AlgebraElement::one(x.n());
  for (const Letter& l : u.letters) cur = append_letter(cur, l);
  cur = multiply(cur, x);
  for (const Letter& l : u.inverse().letters) cur = append_letter(cur, l);
  return cur;
}

Word key_word(int n, const LoopMonomial& loops, const Permutation& perm) {
  Word w(n);
  for (const auto& [idx, exp] : loops.exponents()) {
    int s = exp > 0 ? +1 : -1;
    for (int r = 0; r < (exp > 0 ? exp : -exp); ++r) w.append(Letter::t_i(idx, s));
  }
  for (int i : perm.reduced_word()) w.append(Letter::g(i, +1));
  return w;
}

}  // namespace skein
