#include "skein/verify.hpp"

#include <algorithm>
#include <sstream>

#include "skein/block_matrix.hpp"
#include "skein/convert.hpp"
#include "skein/engine.hpp"
#include "skein/gaps.hpp"
#include "skein/order.hpp"
#include "skein/tails.hpp"
#include "skein/trace.hpp"

namespace skein {

namespace {

const LaurentPoly kQ = lp_q(1);
const LaurentPoly kQm1 = lp_q(1) - lp_q(0);

std::string show(const LoopMonomial& m) {
  std::ostringstream os;
  if (m.empty()) return "1";
  for (const auto& [i, e] : m.exponents()) {
    os << "t";
    if (i) os << "[" << i << "]";
    if (e != 1) os << "^" << e;
    os << " ";
  }
  return os.str();
}

std::string show(const Word& w) {
  std::ostringstream os;
  os << "n=" << w.n << ":";
  for (const Letter& l : w.letters) {
    os << " ";
    switch (l.kind) {
      case Letter::Kind::BraidG: os << "g[" << l.index << "]"; break;
      case Letter::Kind::LoopT: os << "t[" << l.index << "]"; break;
      case Letter::Kind::LoopTPrime: os << "t'[" << l.index << "]"; break;
    }
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

struct Context {
  SuiteResult result;
  void check(bool ok, const std::string& what) {
    ++result.checks;
    if (!ok) result.failures.push_back(what);
  }
};

Word monomial_word(const LoopMonomial& m, bool primed, int n) {
  Word w(n);
  for (const auto& [i, e] : m.exponents()) {
    Letter l = primed && i > 0 ? Letter::t_prime(i) : Letter::t_i(i);
    l.sign = e > 0 ? +1 : -1;
    for (int r = 0; r < std::abs(e); ++r) w.append(l);
  }
  return w;
}

Word repeat_letter(int n, Letter l, int count) {
  Word w(n);
  for (int r = 0; r < count; ++r) w.append(l);
  return w;
}

// ---------------------------------------------------------------------------
// relations
// ---------------------------------------------------------------------------
void suite_relations(const SuiteOptions& o, Context& ctx) {
  for (int n = 2; n <= o.n_max; ++n) {
    // g_1 t g_1 t = t g_1 t g_1
    ctx.check(equal(normal_form(Word(n, {Letter::g(1), Letter::t(), Letter::g(1), Letter::t()})),
                    normal_form(Word(n, {Letter::t(), Letter::g(1), Letter::t(), Letter::g(1)}))),
              "mixed braid relation failed on " + std::to_string(n) + " strands");
    // t g_i = g_i t for i > 1
    for (int i = 2; i <= n - 1; ++i)
      ctx.check(equal(normal_form(Word(n, {Letter::t(), Letter::g(i)})),
                      normal_form(Word(n, {Letter::g(i), Letter::t()}))),
                "t/g commutation failed at i=" + std::to_string(i));
    // braid relations
    for (int i = 1; i <= n - 2; ++i)
      ctx.check(equal(normal_form(Word(n, {Letter::g(i), Letter::g(i + 1), Letter::g(i)})),
                      normal_form(Word(n, {Letter::g(i + 1), Letter::g(i), Letter::g(i + 1)}))),
                "braid relation failed at i=" + std::to_string(i));
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        ctx.check(equal(normal_form(Word(n, {Letter::g(i), Letter::g(j)})),
                        normal_form(Word(n, {Letter::g(j), Letter::g(i)}))),
                  "far commutation failed");
    // quadratic relation and inverses
    for (int i = 1; i <= n - 1; ++i) {
      AlgebraElement lhs = normal_form(Word(n, {Letter::g(i), Letter::g(i)}));
      AlgebraElement rhs =
          normal_form(Word(n, {Letter::g(i)})).scaled(kQm1) + AlgebraElement::one(n).scaled(kQ);
      ctx.check(equal(lhs, rhs), "quadratic relation failed at i=" + std::to_string(i));
      ctx.check(equal(normal_form(Word(n, {Letter::g(i), Letter::g(i, -1)})),
                      AlgebraElement::one(n)),
                "g g^{-1} != 1");
    }
    ctx.check(equal(normal_form(Word(n, {Letter::t(), Letter::t(-1)})),
                    AlgebraElement::one(n)),
              "t t^{-1} != 1");
    for (int i = 1; i <= n - 1; ++i)
      ctx.check(equal(normal_form(Word(n, {Letter::t_i(i), Letter::t_i(i, -1)})),
                      AlgebraElement::one(n)),
                "t_i t_i^{-1} != 1");
    // the g_i / t_k^{±1} interaction rules
    for (int i = 1; i <= n - 1; ++i) {
      for (int k = 0; k <= n - 1; ++k) {
        for (int eps : {+1, -1}) {
          AlgebraElement lhs = normal_form(Word(n, {Letter::g(i), Letter::t_i(k, eps)}));
          AlgebraElement rhs(n);
          if (k > i || k < i - 1) {
            rhs = normal_form(Word(n, {Letter::t_i(k, eps), Letter::g(i)}));
          } else if (k == i && eps > 0) {
            rhs = normal_form(Word(n, {Letter::t_i(i - 1), Letter::g(i)})).scaled(kQ) +
                  normal_form(Word(n, {Letter::t_i(i)})).scaled(kQm1);
          } else if (k == i - 1 && eps > 0) {
            rhs = normal_form(Word(n, {Letter::t_i(i), Letter::g(i, -1)}));
          } else if (k == i - 1 && eps < 0) {
            rhs = normal_form(Word(n, {Letter::t_i(i, -1), Letter::g(i)})).scaled(kQ) +
                  normal_form(Word(n, {Letter::t_i(i - 1, -1)})).scaled(kQm1);
          } else {
            rhs = normal_form(Word(n, {Letter::t_i(i - 1, -1), Letter::g(i, -1)}));
          }
          ctx.check(equal(lhs, rhs), "interaction rule failed at i=" + std::to_string(i) +
                                         " k=" + std::to_string(k) +
                                         " eps=" + std::to_string(eps));
        }
      }
    }
    // loop commutativity
    for (int i = 0; i <= n - 1; ++i)
      for (int j = 0; j <= n - 1; ++j)
        ctx.check(equal(normal_form(Word(n, {Letter::t_i(i), Letter::t_i(j, -1)})),
                        normal_form(Word(n, {Letter::t_i(j, -1), Letter::t_i(i)}))),
                  "loop commutativity failed");
  }

  // Idempotence and associativity on random words.
  Rng rng(o.seed);
  int n = std::min(o.n_max, 4);
  for (int s = 0; s < o.samples; ++s) {
    Word w = rng.word(n, rng.uniform(0, 8), true);
    AlgebraElement e = normal_form(w);
    AlgebraElement again(n);
    for (const auto& [key, c] : e.terms())
      again += normal_form(key_word(n, key.loops, key.perm)).scaled(c);
    ctx.check(equal(e, again), "normal form not idempotent on " + show(w));
  }
  for (int s = 0; s < o.samples / 2; ++s) {
    AlgebraElement a = normal_form(rng.word(n, rng.uniform(0, 5), true));
    AlgebraElement b = normal_form(rng.word(n, rng.uniform(0, 5), true));
    AlgebraElement c = normal_form(rng.word(n, rng.uniform(0, 5), true));
    ctx.check(equal(multiply(multiply(a, b), c), multiply(a, multiply(b, c))),
              "associativity failed");
  }
}

// ---------------------------------------------------------------------------
// lemmas
// ---------------------------------------------------------------------------
void suite_lemmas(const SuiteOptions& o, Context& ctx) {
  const int N = o.n_max;
  // g_{m+1} t_m^{±k}
  for (int n = 2; n <= N; ++n)
    for (int m = 0; m + 1 <= n - 1; ++m)
      for (int k = 1; k <= o.exp_max; ++k)
        for (int sign : {+1, -1}) {
          Word lhs(n);
          lhs.append(Letter::g(m + 1, sign));
          for (int r = 0; r < k; ++r) lhs.append(Letter::t_i(m, sign));
          ctx.check(equal(normal_form(lhs), expand_g_next_t_power(m, k, sign, n)),
                    "expand_g_next_t_power mismatch at m=" + std::to_string(m) +
                        " k=" + std::to_string(k) + " sign=" + std::to_string(sign));
        }
  // (g_r ... g_{r-s}) t_k^{±1}
  for (int n = 2; n <= N; ++n)
    for (int r = 1; r <= n - 1; ++r)
      for (int s = 0; s <= r - 1; ++s)
        for (int k = 0; k <= n - 1; ++k)
          for (int sign : {+1, -1}) {
            Word lhs(n);
            for (int i = r; i >= r - s; --i) lhs.append(Letter::g(i));
            lhs.append(Letter::t_i(k, sign));
            ctx.check(equal(normal_form(lhs), expand_desc_block_times_t(r, s, k, sign, n)),
                      "expand_desc_block_times_t mismatch at r=" + std::to_string(r) +
                          " s=" + std::to_string(s) + " k=" + std::to_string(k) +
                          " sign=" + std::to_string(sign));
          }
  // t_k (g_k ... g_r)
  for (int n = 2; n <= N; ++n)
    for (int k = 1; k <= n - 1; ++k)
      for (int r = 1; r <= k; ++r) {
        Word lhs(n);
        lhs.append(Letter::t_i(k));
        for (int i = k; i >= r; --i) lhs.append(Letter::g(i));
        ctx.check(equal(normal_form(lhs), expand_t_times_desc_block(k, r, n)),
                  "expand_t_times_desc_block mismatch at k=" + std::to_string(k) +
                      " r=" + std::to_string(r));
      }
  // (g_r ... g_{r+s}) t_k^{±1}
  for (int n = 2; n <= N; ++n)
    for (int r = 1; r <= n - 1; ++r)
      for (int s = 0; r + s <= n - 1; ++s)
        for (int k = 0; k <= n - 1; ++k)
          for (int sign : {+1, -1}) {
            Word lhs(n);
            for (int i = r; i <= r + s; ++i) lhs.append(Letter::g(i));
            lhs.append(Letter::t_i(k, sign));
            ctx.check(equal(normal_form(lhs), expand_asc_block_times_t(r, s, k, sign, n)),
                      "expand_asc_block_times_t mismatch at r=" + std::to_string(r) +
                          " s=" + std::to_string(s) + " k=" + std::to_string(k) +
                          " sign=" + std::to_string(sign));
          }
  // bridges
  for (int n = 2; n <= N; ++n) {
    for (int i = 1; i <= n - 1; ++i) {
      Word lhs1(n), lhs2(n);
      for (int a = 1; a < i; ++a) lhs1.append(Letter::g(a));
      lhs1.append(Letter::g(i));
      lhs1.append(Letter::g(i));
      for (int a = i - 1; a >= 1; --a) lhs1.append(Letter::g(a));
      lhs1.append(Letter::t());
      ctx.check(equal(normal_form(lhs1), expand_bridge(i, BridgeVariant::I, n)),
                "expand_bridge I mismatch at i=" + std::to_string(i));
      for (int a = 1; a < i; ++a) lhs2.append(Letter::g(a, -1));
      lhs2.append(Letter::g(i, -1));
      lhs2.append(Letter::g(i, -1));
      for (int a = i - 1; a >= 1; --a) lhs2.append(Letter::g(a, -1));
      lhs2.append(Letter::t(-1));
      ctx.check(equal(normal_form(lhs2), expand_bridge(i, BridgeVariant::II, n)),
                "expand_bridge II mismatch at i=" + std::to_string(i));
    }
    for (int k = 1; k <= n - 1; ++k) {
      for (auto [variant, sign] : {std::pair{BridgeVariant::III, +1},
                                   std::pair{BridgeVariant::IV, -1}}) {
        Word lhs(n);
        for (int a = k; a >= 2; --a) lhs.append(Letter::g(a, -1));
        lhs.append(Letter::g(1, -1));
        lhs.append(Letter::g(1, -1));
        for (int a = 2; a <= k; ++a) lhs.append(Letter::g(a, -1));
        lhs.append(Letter::t_i(k, sign));
        ctx.check(equal(normal_form(lhs), expand_bridge(k, variant, n)),
                  "expand_bridge III/IV mismatch at k=" + std::to_string(k));
      }
    }
  }
  // t'_1^{±k}
  for (int k = 1; k <= o.exp_max; ++k)
    for (int sign : {+1, -1}) {
      int n = std::max(2, N >= 2 ? 2 : 2);
      Word lhs = repeat_letter(n, Letter::t_prime(1, sign), k);
      ctx.check(equal(normal_form(lhs), expand_tprime1_power(k, sign, n)),
                "expand_tprime1_power mismatch at k=" + std::to_string(k));
    }
  // t'_k^{-1}
  for (int n = 2; n <= N; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      Word lhs = repeat_letter(n, Letter::t_prime(k, -1), 1);
      ctx.check(equal(normal_form(lhs), expand_tprime_inverse(k, n)),
                "expand_tprime_inverse mismatch at k=" + std::to_string(k));
    }
  // t'_m^{k} with the structure contract on the formal decomposition.
  for (int n = 2; n <= N; ++n)
    for (int m = 1; m <= n - 1; ++m)
      for (int k = 1; k <= o.exp_max; ++k)
        for (int sign : {+1, -1}) {
          Word lhs = repeat_letter(n, Letter::t_prime(m, sign), k);
          ctx.check(equal(normal_form(lhs), expand_tprime_power(m, sign * k, n)),
                    "expand_tprime_power mismatch at m=" + std::to_string(m) +
                        " k=" + std::to_string(sign * k));
          FormalSum sum = tprime_power_formal(m, sign * k);
          LoopMonomial lead = LoopMonomial::single(m, sign * k);
          int braid_free_leads = 0;
          bool contract_ok = true;
          for (const FormalTerm& t : sum) {
            if (t.loops == lead && t.braid.empty()) {
              ++braid_free_leads;
              if (t.coeff != lp_q(-m * sign * k)) contract_ok = false;
              continue;
            }
            if (t.loops == lead) continue;  // lead loop part with a braid word
            if (t.loops.level() != sign * k) contract_ok = false;
            for (const auto& [i, ex] : t.loops.exponents())
              if ((sign > 0 && ex < 0) || (sign < 0 && ex > 0)) contract_ok = false;
          }
          ctx.check(braid_free_leads == 1 && contract_ok,
                    "t'_m^k structure contract failed at m=" + std::to_string(m) +
                        " k=" + std::to_string(sign * k));
        }
}

void check_leading_structure(Context& ctx, const LoopMonomial& mp) {
  // On the formal decomposition: the homologous word appears braid-free with
  // coefficient exactly q^{-sum i k_i}, every other loop monomial is strictly
  // below it (the homologous one may recur only with a braid word), and the
  // level is preserved.
  FormalSum sum = convert_monomial_formal(mp);
  LoopMonomial hom = homologous(mp);
  int a = 0;
  for (const auto& [i, e] : mp.exponents()) a += i * e;
  LaurentPoly lead;
  bool order_ok = true;
  bool level_ok = true;
  for (const FormalTerm& t : sum) {
    if (t.loops.level() != mp.level()) level_ok = false;
    if (t.loops == hom) {
      if (t.braid.empty()) lead += t.coeff;
      continue;
    }
    if (order_compare(t.loops, hom) != std::strong_ordering::less) order_ok = false;
  }
  ctx.check(lead == lp_q(-a), "conversion leading coefficient wrong for " + show(mp));
  ctx.check(order_ok, "conversion lower-order claim failed for " + show(mp));
  ctx.check(level_ok, "conversion changed the level of " + show(mp));
}

void suite_convert_monomial(const SuiteOptions& o, Context& ctx) {
  Rng rng(o.seed + 1);
  for (int s = 0; s < o.samples; ++s) {
    LoopMonomial mp = rng.grammar_monomial(std::min(o.index_max, o.n_max - 1),
                                           o.exp_max, false);
    int n = std::max(1, mp.max_index() + 1);
    AlgebraElement conv = convert_monomial(mp, n);
    ctx.check(equal(conv, normal_form(monomial_word(mp, true, n))),
              "convert_monomial differs from the oracle on " + show(mp));
    check_leading_structure(ctx, mp);
  }
}

// ---------------------------------------------------------------------------
// order
// ---------------------------------------------------------------------------
void suite_order(const SuiteOptions& o, Context& ctx) {
  Rng rng(o.seed + 2);
  auto cmp = [](const LoopMonomial& a, const LoopMonomial& b) {
    return order_compare(a, b);
  };
  for (int s = 0; s < o.samples; ++s) {
    LoopMonomial a = rng.loop_monomial(4, 4);
    LoopMonomial b = rng.loop_monomial(4, 4);
    LoopMonomial c = rng.loop_monomial(4, 4);
    ctx.check((cmp(a, b) == std::strong_ordering::equal) == (a == b),
              "compare equality mismatch");
    if (cmp(a, b) == std::strong_ordering::less)
      ctx.check(cmp(b, a) == std::strong_ordering::greater, "antisymmetry failed");
    if (cmp(a, b) != std::strong_ordering::greater &&
        cmp(b, c) != std::strong_ordering::greater)
      ctx.check(cmp(a, c) != std::strong_ordering::greater, "transitivity failed");
  }
  // Minimum of a level set is t^k.
  for (int k = -o.exp_max; k <= o.exp_max; ++k) {
    auto level = enumerate_level(k, o.index_max, o.exp_max, o.canonical);
    ctx.check(!level.empty(), "level set empty");
    if (level.empty()) continue;
    LoopMonomial expected = k == 0 ? LoopMonomial{} : LoopMonomial::single(0, k);
    ctx.check(level.front() == expected, "level minimum is not t^k");
    for (std::size_t i = 0; i + 1 < level.size(); ++i)
      ctx.check(cmp(level[i], level[i + 1]) == std::strong_ordering::less,
                "level enumeration not sorted strictly");
  }
}

// ---------------------------------------------------------------------------
// pipeline
// ---------------------------------------------------------------------------
void suite_pipeline(const SuiteOptions& o, Context& ctx) {
  Rng rng(o.seed + 3);
  ReduceOptions opts{o.canonical};
  ReduceOptions literal;
  literal.canonical = false;
  // Idempotence on basis monomials.
  for (int s = 0; s < o.samples; ++s) {
    LoopMonomial tau = rng.grammar_monomial(o.index_max, o.exp_max, o.canonical);
    int n = std::max(1, tau.max_index() + 1);
    auto [coords, trace] =
        reduce_to_basis(AlgebraElement::monomial(n, tau, Permutation::identity(n)), opts);
    ctx.check(coords == ModuleElement::monomial(tau), "reduce not identity on " + show(tau));
    ReplayReport rep = replay(trace);
    ctx.check(rep.ok, "witness replay failed on " + show(tau));
  }
  // Level preservation, witness replay, and agreement between the canonical
  // presentation and the sorted literal reduction.
  int n = std::min(o.n_max, 4);
  for (int s = 0; s < o.samples; ++s) {
    Word x = rng.word(n, rng.uniform(1, 5), true);
    auto [cx, tx] = reduce_to_basis(x, opts);
    ctx.check(replay(tx).ok, "witness replay failed on " + show(x));
    int level = 0;
    for (const Letter& l : x.letters)
      if (l.kind != Letter::Kind::BraidG) level += l.sign;
    for (const auto& [m, c] : cx.terms())
      ctx.check(m.level() == level, "level not preserved on " + show(x));
    if (o.canonical) {
      auto [lit, tl] = reduce_to_basis(x, literal);
      ModuleElement sorted;
      for (const auto& [m, c] : lit.terms()) {
        std::vector<int> exps;
        for (const auto& [i, e] : m.exponents()) exps.push_back(e);
        std::sort(exps.begin(), exps.end());
        LoopMonomial key;
        for (std::size_t i = 0; i < exps.size(); ++i) key.set(static_cast<int>(i), exps[i]);
        sorted.add_term(key, c);
      }
      ctx.check(cx == sorted, "canonical presentation is not the sorted literal reduction");
    }
  }
  // Triangularity of reduce(convert(w')) with the exact diagonal, over the
  // literal representatives (exponent sorting merges distinct monomials).
  for (int s = 0; s < o.samples; ++s) {
    LoopMonomial mp = rng.grammar_monomial(o.index_max, o.exp_max, false);
    auto [coords, trace] = reduce_to_basis(convert_monomial(mp), literal);
    LoopMonomial hom = homologous(mp);
    int a = 0;
    for (const auto& [i, e] : mp.exponents()) a += i * e;
    ctx.check(coords.coefficient(hom) == to_coeff(lp_q(-a)),
              "pipeline diagonal differs from q^{-sum i k_i} on " + show(mp));
    for (const auto& [m, c] : coords.terms())
      if (m != hom)
        ctx.check(order_compare(m, hom) == std::strong_ordering::less,
                  "pipeline produced a term above the diagonal on " + show(mp));
    ReplayReport rep = replay(trace);
    ctx.check(rep.ok, "witness replay failed on reduce(convert(" + show(mp) + "))");
  }
}

// ---------------------------------------------------------------------------
// matrix
// ---------------------------------------------------------------------------
void suite_matrix(const SuiteOptions& o, Context& ctx) {
  // Entries are literal reductions; both column enumerations (full literal
  // and sorted) must give triangular, unit-diagonal, exactly invertible blocks.
  for (bool canonical : {false, true}) {
    for (int level = -o.exp_max; level <= o.exp_max; ++level) {
      BlockMatrix b = build_block(level, o.index_max, o.exp_max, canonical);
      TriangularReport rep = check_triangular(b);
      std::string msgs;
      for (const std::string& v : rep.violations) msgs += v + "; ";
      ctx.check(rep.ok, "block level " + std::to_string(level) + " not triangular: " + msgs);
      if (!rep.ok) continue;
      BlockMatrix inv = invert_block(b);
      BlockMatrix square = paired_square(b);
      ctx.check(is_identity(block_product(square, inv)),
                "B B^{-1} != I at level " + std::to_string(level));
      ctx.check(is_identity(block_product(inv, square)),
                "B^{-1} B != I at level " + std::to_string(level));
      ctx.check(independence_certificate(b),
                "independence certificate failed at level " + std::to_string(level));
    }
  }
  // Negative test: a corrupted block must be rejected.
  BlockMatrix b = build_block(1, std::min(1, o.index_max), std::min(2, o.exp_max), false);
  if (b.cols.size() >= 2) {
    b.entries[{static_cast<int>(b.rows.size()) - 1, 0}] = CoeffPoly(7);
    ctx.check(!check_triangular(b).ok, "corrupted block passed check_triangular");
    ctx.check(!independence_certificate(b), "corrupted block certified independent");
  }
}

// ---------------------------------------------------------------------------
// trace
// ---------------------------------------------------------------------------
void suite_trace(const SuiteOptions& o, Context& ctx) {
  TraceCalculator calc;
  // tr(g_1) = z, tr(t^k) = s_k
  ctx.check(markov_trace(Word(2, {Letter::g(1)})) == TraceValue::monomial({0, 1, 0, {}}),
            "tr(g_1) != z");
  for (int k = -o.exp_max; k <= o.exp_max; ++k) {
    if (k == 0) continue;
    TraceKey key;
    key.s.add(k);
    ctx.check(calc.markov_trace(repeat_letter(1, Letter::t(k > 0 ? 1 : -1), std::abs(k))) ==
                  TraceValue::monomial(key),
              "tr(t^k) != s_k at k=" + std::to_string(k));
  }
  // Closed form on the primed family.
  Rng rng(o.seed + 4);
  for (int s = 0; s < o.samples; ++s) {
    LoopMonomial mp = rng.grammar_monomial(o.index_max, o.exp_max, o.canonical);
    int n = std::max(1, mp.max_index() + 1);
    TraceValue lhs = calc.markov_trace(monomial_word(mp, true, n));
    ctx.check(lhs == tr_lambda_prime(mp), "markov trace differs from closed form on " + show(mp));
  }
  // tr(ab) = tr(ba), and conjugation soundness tr(u x u^{-1}) = tr(x).
  int n = std::min(o.n_max, 3);
  for (int s = 0; s < o.samples; ++s) {
    Word a = rng.word(n, rng.uniform(0, 3), true);
    Word b = rng.word(n, rng.uniform(0, 3), true);
    Word ab(n), ba(n);
    ab.append(a);
    ab.append(b);
    ba.append(b);
    ba.append(a);
    ctx.check(calc.markov_trace(ab) == calc.markov_trace(ba),
              "tr(ab) != tr(ba) on " + show(a) + " | " + show(b));
    Word conj(n);
    conj.append(b);
    conj.append(a);
    conj.append(b.inverse());
    ctx.check(calc.markov_trace(conj) == calc.markov_trace(a),
              "tr(u x u^{-1}) != tr(x) on " + show(a) + " by " + show(b));
  }
  // Markov property tr(x g_n) = z tr(x)
  for (int s = 0; s < o.samples / 2; ++s) {
    Word x = rng.word(n, rng.uniform(0, 3), true);
    Word xg(n + 1);
    xg.letters = x.letters;
    xg.append(Letter::g(n));
    ctx.check(calc.markov_trace(xg) ==
                  TraceValue::monomial({0, 1, 0, {}}) * calc.markov_trace(x),
              "Markov property failed on " + show(x));
  }
  // lambda -> lambda' round trip.
  ReduceOptions opts{o.canonical};
  for (int s = 0; s < o.samples / 4 + 1; ++s) {
    LoopMonomial tau = rng.grammar_monomial(o.index_max, o.exp_max, true);
    ModuleElement acc;
    for (const auto& [mp, c] : calc.lambda_to_lambda_prime(tau)) {
      auto [coords, trace] = reduce_to_basis(convert_monomial(mp), opts);
      acc += coords.scaled(c);
    }
    ctx.check(acc == ModuleElement::monomial(tau),
              "lambda->lambda' round trip failed on " + show(tau));
  }
}

}  // namespace

LoopMonomial Rng::grammar_monomial(int max_index, int max_abs_exp, bool canonical) {
  LoopMonomial out;
  int top = uniform(-1, max_index);  // -1: the empty monomial
  std::vector<int> exps;
  for (int i = 0; i <= top; ++i) exps.push_back(nonzero(max_abs_exp));
  if (canonical) std::sort(exps.begin(), exps.end());
  for (int i = 0; i <= top; ++i) out.set(i, exps[i]);
  return out;
}

LoopMonomial Rng::loop_monomial(int max_index, int max_abs_exp) {
  LoopMonomial out;
  for (int i = 0; i <= max_index; ++i)
    if (uniform(0, 1)) out.set(i, nonzero(max_abs_exp));
  return out;
}

Word Rng::word(int n, int length, bool macros) {
  Word out(n);
  for (int i = 0; i < length; ++i) {
    int sign = uniform(0, 1) ? +1 : -1;
    int kind = uniform(0, macros && n > 1 ? 2 : 1);
    if (kind == 0 || n == 1) {
      out.append(Letter::t(sign));
    } else if (kind == 1) {
      out.append(Letter::g(uniform(1, n - 1), sign));
    } else {
      out.append(uniform(0, 1) ? Letter::t_i(uniform(1, n - 1), sign)
                               : Letter::t_prime(uniform(1, n - 1), sign));
    }
  }
  return out;
}

std::vector<std::string> suite_names() {
  return {"relations", "lemmas", "order", "pipeline", "matrix", "trace"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  Context ctx;
  ctx.result.suite = name;
  if (name == "relations") {
    suite_relations(opts, ctx);
  } else if (name == "lemmas") {
    suite_lemmas(opts, ctx);
    suite_convert_monomial(opts, ctx);
  } else if (name == "order") {
    suite_order(opts, ctx);
  } else if (name == "pipeline") {
    suite_pipeline(opts, ctx);
  } else if (name == "matrix") {
    suite_matrix(opts, ctx);
  } else if (name == "trace") {
    suite_trace(opts, ctx);
  } else {
    throw Error("unknown suite: " + name);
  }
  return ctx.result;
}

}  // namespace skein
