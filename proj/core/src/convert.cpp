#include "skein/convert.hpp"

#include <algorithm>
#include <deque>

#include "skein/order.hpp"

namespace skein {

namespace {

const LaurentPoly kOne = LaurentPoly(1);
const LaurentPoly kQ = lp_q(1);
const LaurentPoly kQInv = lp_q(-1);
const LaurentPoly kQm1 = lp_q(1) - lp_q(0);
const LaurentPoly kQInvm1 = lp_q(-1) - lp_q(0);

std::vector<Letter> delta(int top, int bottom, int sign = +1) {
  return DeltaWord{top, bottom, std::nullopt, sign}.letters();
}

std::vector<Letter> delta_skip(int top, int bottom, int omitted, int sign = +1) {
  return DeltaWord{top, bottom, omitted, sign}.letters();
}

std::vector<Letter> cat(std::vector<Letter> a, const std::vector<Letter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

// Simplifies adjacent same-index letter pairs in the formal braid words:
// inverse pairs cancel freely and equal-sign pairs split by the quadratic
// relation (how the braid-free leading terms of the conversion lemmas arise).
// Pieces with identical (loops, braid) keys are merged.
FormalSum squash(const FormalSum& sum) {
  std::deque<FormalTerm> work(sum.begin(), sum.end());
  std::map<std::pair<LoopMonomial, std::vector<Letter>>, LaurentPoly> merged;
  const LaurentPoly q = lp_q(1), qinv = lp_q(-1);
  const LaurentPoly qm1 = lp_q(1) - lp_q(0), qinvm1 = lp_q(-1) - lp_q(0);
  while (!work.empty()) {
    FormalTerm t = std::move(work.front());
    work.pop_front();
    bool rewrote = false;
    for (std::size_t p = 0; p + 1 < t.braid.size(); ++p) {
      const Letter &a = t.braid[p], &b = t.braid[p + 1];
      if (a.index != b.index) continue;
      rewrote = true;
      std::vector<Letter> both = t.braid, one = t.braid;
      both.erase(both.begin() + p, both.begin() + p + 2);
      one.erase(one.begin() + p);
      if (a.sign != b.sign) {
        work.push_back({t.coeff, t.loops, std::move(both)});
      } else if (a.sign < 0) {
        work.push_back({t.coeff * qinv, t.loops, std::move(both)});
        work.push_back({t.coeff * qinvm1, t.loops, std::move(one)});
      } else {
        work.push_back({t.coeff * q, t.loops, std::move(both)});
        work.push_back({t.coeff * qm1, t.loops, std::move(one)});
      }
      break;
    }
    if (!rewrote) {
      auto [it, inserted] =
          merged.try_emplace({t.loops, t.braid}, LaurentPoly());
      it->second += t.coeff;
    }
  }
  FormalSum out;
  for (auto& [key, coeff] : merged)
    if (!coeff.is_zero()) out.push_back({std::move(coeff), key.first, key.second});
  return out;
}

AlgebraElement realize(const FormalSum& sum, int n) {
  AlgebraElement out(n);
  for (const FormalTerm& t : sum) {
    AlgebraElement e =
        AlgebraElement::monomial(n, t.loops, Permutation::identity(n), t.coeff);
    for (const Letter& l : t.braid) e = append_letter(e, l);
    out += e;
  }
  return out;
}

AlgebraElement expand_g_next_t_power(int m, int k, int sign, int n) {
  if (m < 0 || k < 1) throw IndexOutOfRange("expand_g_next_t_power: bad parameters");
  if (n < 0) n = m + 2;
  if (m + 1 > n - 1) throw IndexOutOfRange("expand_g_next_t_power: index exceeds strands");
  FormalSum rhs;
  if (sign > 0) {
    // g_{m+1} t_m^k = q^{-(k-1)} t_{m+1}^k g_{m+1}^{-1}
    //                 + sum_j q^{-(k-1-j)} (q^{-1}-1) t_m^j t_{m+1}^{k-j}
    rhs.push_back({lp_q(-(k - 1)), LoopMonomial::single(m + 1, k),
                   {Letter::g(m + 1, -1)}});
    for (int j = 1; j <= k - 1; ++j) {
      LoopMonomial loops = LoopMonomial::single(m, j);
      loops.bump(m + 1, k - j);
      rhs.push_back({lp_q(-(k - 1 - j)) * kQInvm1, loops, {}});
    }
  } else {
    // g_{m+1}^{-1} t_m^{-k} = q^{k-1} t_{m+1}^{-k} g_{m+1}
    //                        + sum_j q^{k-1-j} (q-1) t_m^{-j} t_{m+1}^{-(k-j)}
    rhs.push_back({lp_q(k - 1), LoopMonomial::single(m + 1, -k),
                   {Letter::g(m + 1, +1)}});
    for (int j = 1; j <= k - 1; ++j) {
      LoopMonomial loops = LoopMonomial::single(m, -j);
      loops.bump(m + 1, -(k - j));
      rhs.push_back({lp_q(k - 1 - j) * kQm1, loops, {}});
    }
  }
  return realize(rhs, n);
}

AlgebraElement expand_desc_block_times_t(int r, int s, int k, int sign, int n) {
  if (r - s < 1 || s < 0 || k < 0)
    throw IndexOutOfRange("expand_desc_block_times_t: bad parameters");
  if (n < 0) n = std::max(r, k) + 1;
  if (r > n - 1 || k > n - 1)
    throw IndexOutOfRange("expand_desc_block_times_t: index exceeds strands");
  const int lo = r - s;
  FormalSum rhs;
  if (sign > 0) {
    if (k > r || k < lo - 1) {
      rhs.push_back({kOne, LoopMonomial::single(k, +1), delta(r, lo)});
    } else if (k == lo - 1) {
      rhs.push_back({kOne, LoopMonomial::single(r, +1), delta(r, lo, -1)});
    } else if (k == r) {
      rhs.push_back({kQ, LoopMonomial::single(r - 1, +1), delta(r, lo)});
      rhs.push_back({kQm1, LoopMonomial::single(r, +1),
                     s == 0 ? std::vector<Letter>{} : delta(r - 1, lo)});
    } else {
      // lo <= k <= r-1: the climb leaves q t_{k-1} * block plus the
      // (q-1) t_r remainder with inverted letters above k.
      rhs.push_back({kQ, LoopMonomial::single(k - 1, +1), delta(r, lo)});
      std::vector<Letter> tail = delta(r, k + 1, -1);
      if (k - 1 >= lo) tail = cat(tail, delta(k - 1, lo));
      rhs.push_back({kQm1, LoopMonomial::single(r, +1), tail});
    }
  } else {
    if (k > r || k < lo - 1) {
      rhs.push_back({kOne, LoopMonomial::single(k, -1), delta(r, lo)});
    } else if (k == lo - 1) {
      // q^{s+1} t_r^{-1} block + (q-1) sum_j q^{s-j+1} t_{r-j}^{-1} block-with-
      // g_{r-j+1} omitted.
      rhs.push_back({lp_q(s + 1), LoopMonomial::single(r, -1), delta(r, lo)});
      for (int j = 1; j <= s + 1; ++j)
        rhs.push_back({lp_q(s - j + 1) * kQm1, LoopMonomial::single(r - j, -1),
                       delta_skip(r, lo, r - j + 1)});
    } else {
      // lo <= k <= r: t_{k-1}^{-1} with only g_k inverted.
      std::vector<Letter> word;
      if (k + 1 <= r) word = delta(r, k + 1);
      word.push_back(Letter::g(k, -1));
      if (k - 1 >= lo) word = cat(word, delta(k - 1, lo));
      rhs.push_back({kOne, LoopMonomial::single(k - 1, -1), word});
    }
  }
  return realize(rhs, n);
}

AlgebraElement expand_t_times_desc_block(int k, int r, int n) {
  if (r < 1 || k < r) throw IndexOutOfRange("expand_t_times_desc_block: need k >= r >= 1");
  if (n < 0) n = k + 1;
  if (k > n - 1) throw IndexOutOfRange("expand_t_times_desc_block: index exceeds strands");
  // t_k d_{k,r} = sum_i q^i (q-1) d_{k,^{k-i},r} t_{k-i} + q^{l} d_{k,r} t_{r-1}
  FormalSum rhs;
  for (int i = 0; i <= k - r; ++i) {
    std::vector<Letter> word = delta_skip(k, r, k - i);
    word.push_back(Letter::t_i(k - i, +1));
    rhs.push_back({lp_q(i) * kQm1, LoopMonomial{}, word});
  }
  std::vector<Letter> last = delta(k, r);
  last.push_back(Letter::t_i(r - 1, +1));
  rhs.push_back({lp_q(k - r + 1), LoopMonomial{}, last});
  // The trailing loop letters ride through realize() as macro letters.
  AlgebraElement out(n);
  for (const FormalTerm& t : rhs) {
    AlgebraElement e = AlgebraElement::monomial(n, t.loops, Permutation::identity(n), t.coeff);
    for (const Letter& l : t.braid) e = append_letter(e, l);
    out += e;
  }
  return out;
}

AlgebraElement expand_asc_block_times_t(int r, int s, int k, int sign, int n) {
  if (r < 1 || s < 0 || k < 0)
    throw IndexOutOfRange("expand_asc_block_times_t: bad parameters");
  if (n < 0) n = std::max(r + s, k) + 1;
  if (r + s > n - 1 || k > n - 1)
    throw IndexOutOfRange("expand_asc_block_times_t: index exceeds strands");
  const int hi = r + s;
  FormalSum rhs;
  if (sign > 0) {
    if (k >= hi + 1 || k < r - 1) {
      rhs.push_back({kOne, LoopMonomial::single(k, +1), delta(r, hi)});
    } else if (k < hi) {
      // r-1 <= k < r+s: t_{k+1} (g_r ... g_k g_{k+1}^{-1} g_{k+2} ... g_{r+s})
      std::vector<Letter> word;
      if (k >= r) word = delta(r, k);
      word.push_back(Letter::g(k + 1, -1));
      if (k + 2 <= hi) word = cat(word, delta(k + 2, hi));
      rhs.push_back({kOne, LoopMonomial::single(k + 1, +1), word});
    } else {
      // k == r+s
      for (int i = r; i <= hi; ++i)
        rhs.push_back({lp_q(hi - i) * kQm1, LoopMonomial::single(i, +1),
                       delta_skip(r, hi, i)});
      rhs.push_back({lp_q(s + 1), LoopMonomial::single(r - 1, +1), delta(r, hi)});
    }
  } else {
    if (k >= hi + 1 || k < r - 1) {
      rhs.push_back({kOne, LoopMonomial::single(k, -1), delta(r, hi)});
    } else if (k < hi) {
      rhs.push_back({kQ, LoopMonomial::single(k + 1, -1), delta(r, hi)});
      std::vector<Letter> word;
      if (k >= r) word = delta(r, k, -1);
      if (k + 2 <= hi) word = cat(word, delta(k + 2, hi));
      rhs.push_back({kQm1, LoopMonomial::single(r - 1, -1), word});
    } else {
      rhs.push_back({kOne, LoopMonomial::single(r - 1, -1), delta(r, hi, -1)});
    }
  }
  return realize(rhs, n);
}

FormalSum closed_walk(const std::vector<Letter>& letters) {
  struct Item {
    LaurentPoly coeff;
    LoopMonomial loops;
    std::deque<Letter> rest;
  };
  std::deque<Item> work;
  work.push_back({kOne, LoopMonomial{}, {letters.begin(), letters.end()}});
  FormalSum done;

  while (!work.empty()) {
    Item it = std::move(work.front());
    work.pop_front();
    // Absorb leading loop letters.
    while (!it.rest.empty() && it.rest.front().kind != Letter::Kind::BraidG) {
      const Letter& l = it.rest.front();
      if (l.kind == Letter::Kind::LoopTPrime) throw Error("closed_walk: expand t' first");
      it.loops.bump(l.index, l.sign);
      it.rest.pop_front();
    }
    // Find the first loop letter (it has only braid letters to its left).
    std::size_t pos = 0;
    while (pos < it.rest.size() && it.rest[pos].kind == Letter::Kind::BraidG) ++pos;
    if (pos == it.rest.size()) {
      done.push_back({std::move(it.coeff), std::move(it.loops),
                      {it.rest.begin(), it.rest.end()}});
      continue;
    }
    const Letter g = it.rest[pos - 1];
    const Letter t = it.rest[pos];
    const int i = g.index, k = t.index, eps = t.sign;
    // One crossing: g_i^{±1} t_k^{eps} -> sum of c * t_j^{d} [g_i^{b}].
    struct Branch {
      LaurentPoly c;
      int j;
      int d;
      int b;  // 0: no braid letter survives
    };
    std::vector<Branch> branches;
    if (k > i || k < i - 1) {
      branches.push_back({kOne, k, eps, g.sign});
    } else if (g.sign > 0) {
      if (k == i && eps > 0) {
        branches.push_back({kQ, i - 1, +1, +1});
        branches.push_back({kQm1, i, +1, 0});
      } else if (k == i - 1 && eps > 0) {
        branches.push_back({kOne, i, +1, -1});
      } else if (k == i - 1 && eps < 0) {
        branches.push_back({kQ, i, -1, +1});
        branches.push_back({kQm1, i - 1, -1, 0});
      } else {
        branches.push_back({kOne, i - 1, -1, -1});
      }
    } else {
      if (k == i && eps > 0) {
        branches.push_back({kOne, i - 1, +1, +1});
      } else if (k == i - 1 && eps > 0) {
        branches.push_back({kQInv, i, +1, -1});
        branches.push_back({kQInvm1, i - 1, +1, 0});
      } else if (k == i - 1 && eps < 0) {
        branches.push_back({kOne, i, -1, +1});
      } else {
        branches.push_back({kQInv, i - 1, -1, -1});
        branches.push_back({kQInvm1, i, -1, 0});
      }
    }
    for (const Branch& br : branches) {
      Item next = it;
      next.coeff = it.coeff * br.c;
      next.rest[pos - 1] = Letter::t_i(br.j, br.d);
      if (br.b == 0)
        next.rest.erase(next.rest.begin() + static_cast<long>(pos));
      else
        next.rest[pos] = Letter::g(i, br.b);
      work.push_back(std::move(next));
    }
  }
  return done;
}

AlgebraElement expand_bridge(int index, BridgeVariant variant, int n) {
  if (index < 1) throw IndexOutOfRange("expand_bridge: index must be >= 1");
  if (n < 0) n = index + 1;
  if (index > n - 1) throw IndexOutOfRange("expand_bridge: index exceeds strands");
  FormalSum rhs;
  switch (variant) {
    case BridgeVariant::I: {
      // (g_1...g_{i-1} g_i^2 g_{i-1}...g_1) t =
      //   (q-1) sum_k q^{i-k} t_k (g_1...g_{k-1} g_k^{-1} ... g_1^{-1}) + q^i t
      const int i = index;
      for (int k = 1; k <= i; ++k) {
        std::vector<Letter> word;
        if (k - 1 >= 1) word = delta(1, k - 1);
        word = cat(word, delta(k, 1, -1));
        rhs.push_back({lp_q(i - k) * kQm1, LoopMonomial::single(k, +1), word});
      }
      rhs.push_back({lp_q(i), LoopMonomial::single(0, +1), {}});
      return realize(rhs, n);
    }
    case BridgeVariant::II: {
      const int i = index;
      for (int k = 1; k <= i; ++k) {
        std::vector<Letter> word;
        if (k - 1 >= 1) word = delta(1, k - 1, -1);
        word = cat(word, delta(k, 1, +1));
        rhs.push_back({lp_q(-(i - k)) * kQInvm1, LoopMonomial::single(k, -1), word});
      }
      rhs.push_back({lp_q(-i), LoopMonomial::single(0, -1), {}});
      return realize(rhs, n);
    }
    case BridgeVariant::III:
    case BridgeVariant::IV: {
      // The printed closed forms for these two variants are not algebra
      // identities; expand by the closed letter walk instead.
      const int k = index;
      std::vector<Letter> word;
      if (k >= 2) word = delta(k, 2, -1);
      word.push_back(Letter::g(1, -1));
      word.push_back(Letter::g(1, -1));
      if (k >= 2) word = cat(word, delta(2, k, -1));
      word.push_back(Letter::t_i(k, variant == BridgeVariant::III ? +1 : -1));
      return realize(closed_walk(word), n);
    }
  }
  throw Error("expand_bridge: bad variant");
}

AlgebraElement expand_tprime1_power(int k, int sign, int n) {
  if (k < 1) throw IndexOutOfRange("expand_tprime1_power: k must be >= 1");
  if (n < 0) n = 2;
  if (n < 2) throw IndexOutOfRange("expand_tprime1_power: needs two strands");
  return realize(tprime_power_formal(1, sign > 0 ? k : -k), n);
}

AlgebraElement expand_tprime_inverse(int k, int n) {
  if (k < 1) throw IndexOutOfRange("expand_tprime_inverse: k must be >= 1");
  if (n < 0) n = k + 1;
  if (k > n - 1) throw IndexOutOfRange("expand_tprime_inverse: index exceeds strands");
  // t'_k^{-1} = q^k t_k^{-1}
  //             + (q-1) sum_i q^i t_i^{-1} (g_k...g_{i+2} g_{i+1}^{-1}...g_k^{-1})
  FormalSum rhs;
  rhs.push_back({lp_q(k), LoopMonomial::single(k, -1), {}});
  for (int i = 0; i <= k - 1; ++i) {
    std::vector<Letter> word;
    if (k >= i + 2) word = delta(k, i + 2);
    word = cat(word, delta(i + 1, k, -1));
    rhs.push_back({lp_q(i) * kQm1, LoopMonomial::single(i, -1), word});
  }
  return realize(rhs, n);
}

FormalSum tprime_power_formal(int m, int k) {
  if (k == 0) throw IndexOutOfRange("tprime_power_formal: zero exponent");
  if (m < 0) throw IndexOutOfRange("tprime_power_formal: negative index");
  if (m == 0) return {{kOne, LoopMonomial::single(0, k), {}}};
  if (m == 1) {
    FormalSum out;
    if (k > 0) {
      // t'_1^k = q^{-k} t_1^k + sum_j q^{-(k-j)} (q^{-1}-1) t^{j-1} t_1^{k+1-j} g_1^{-1}
      out.push_back({lp_q(-k), LoopMonomial::single(1, k), {}});
      for (int j = 1; j <= k; ++j) {
        LoopMonomial loops;
        loops.bump(0, j - 1);
        loops.bump(1, k + 1 - j);
        out.push_back({lp_q(-(k - j)) * kQInvm1, loops, {Letter::g(1, -1)}});
      }
    } else {
      // t'_1^{-k} = q^k t_1^{-k} + sum_j q^{k-j} (q-1) t^{-j} t_1^{j-k} g_1^{-1}
      int kk = -k;
      out.push_back({lp_q(kk), LoopMonomial::single(1, -kk), {}});
      for (int j = 1; j <= kk; ++j) {
        LoopMonomial loops;
        loops.bump(0, -j);
        loops.bump(1, j - kk);
        out.push_back({lp_q(kk - j) * kQm1, loops, {Letter::g(1, -1)}});
      }
    }
    return out;
  }
  // t'_m^k = g_m t'_{m-1}^k g_m^{-1}; cross g_m with the t_{m-1} power of each
  // piece, everything below commutes.
  FormalSum prev = tprime_power_formal(m - 1, k);
  FormalSum out;
  for (const FormalTerm& t : prev) {
    int lambda = t.loops.exponent(m - 1);
    LoopMonomial rest = t.loops;
    rest.set(m - 1, 0);
    if (lambda == 0) {
      std::vector<Letter> word{Letter::g(m, +1)};
      word = cat(word, t.braid);
      word.push_back(Letter::g(m, -1));
      out.push_back({t.coeff, t.loops, word});
      continue;
    }
    if (lambda > 0) {
      // g_m t_{m-1}^l = q^{-(l-1)} t_m^l g_m^{-1} + sum_j ... (Lemma form)
      {
        LoopMonomial loops = rest;
        loops.bump(m, lambda);
        std::vector<Letter> word{Letter::g(m, -1)};
        word = cat(word, t.braid);
        word.push_back(Letter::g(m, -1));
        out.push_back({t.coeff * lp_q(-(lambda - 1)), loops, word});
      }
      for (int j = 1; j <= lambda - 1; ++j) {
        LoopMonomial loops = rest;
        loops.bump(m - 1, j);
        loops.bump(m, lambda - j);
        std::vector<Letter> word = t.braid;
        word.push_back(Letter::g(m, -1));
        out.push_back({t.coeff * lp_q(-(lambda - 1 - j)) * kQInvm1, loops, word});
      }
    } else {
      // g_m t_{m-1}^{-l} = q^l t_m^{-l} g_m + (q-1) sum_j q^j t_m^{-j} t_{m-1}^{-(l-j)}
      int l = -lambda;
      {
        LoopMonomial loops = rest;
        loops.bump(m, -l);
        std::vector<Letter> word{Letter::g(m, +1)};
        word = cat(word, t.braid);
        word.push_back(Letter::g(m, -1));
        out.push_back({t.coeff * lp_q(l), loops, word});
      }
      for (int j = 0; j <= l - 1; ++j) {
        LoopMonomial loops = rest;
        loops.bump(m, -j);
        loops.bump(m - 1, -(l - j));
        std::vector<Letter> word = t.braid;
        word.push_back(Letter::g(m, -1));
        out.push_back({t.coeff * lp_q(j) * kQm1, loops, word});
      }
    }
  }
  return squash(out);
}

AlgebraElement expand_tprime_power(int m, int k, int n) {
  if (n < 0) n = std::max(1, m + 1);
  if (m > n - 1) throw IndexOutOfRange("expand_tprime_power: index exceeds strands");
  return realize(tprime_power_formal(m, k), n);
}

FormalSum convert_monomial_formal(const LoopMonomial& mprime) {
  FormalSum acc{{kOne, LoopMonomial{}, {}}};
  for (const auto& [idx, exp] : mprime.exponents()) {
    if (idx == 0) {
      for (FormalTerm& t : acc) t.loops.bump(0, exp);
      continue;
    }
    FormalSum factor = tprime_power_formal(idx, exp);
    FormalSum next;
    // (tau w) * t'_j^{k} = tau (t'_j^{k}) w since w only uses letters below j.
    for (const FormalTerm& a : acc)
      for (const FormalTerm& f : factor)
        next.push_back({a.coeff * f.coeff, a.loops.times(f.loops), cat(f.braid, a.braid)});
    acc = std::move(next);
  }
  return squash(acc);
}

AlgebraElement convert_monomial(const LoopMonomial& mprime, int n) {
  // Increasing ordered product; the strict basis grammar additionally demands
  // consecutive support, which callers assembling the matrix enforce.
  if (n < 0) n = std::max(1, mprime.max_index() + 1);
  if (mprime.max_index() > n - 1)
    throw GrammarViolation("convert_monomial: index exceeds strands");
  return realize(convert_monomial_formal(mprime), n);
}

}  // namespace skein
