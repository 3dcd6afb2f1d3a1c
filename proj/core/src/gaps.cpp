#include "skein/gaps.hpp"

#include "reduction_pipeline.hpp"

namespace skein {

namespace {

AlgebraElement monomial_element(const LoopMonomial& m) {
  int n = std::max(1, m.max_index() + 1);
  return AlgebraElement::monomial(n, m, Permutation::identity(n));
}

}  // namespace

std::pair<AlgebraElement, RewriteTrace> shift_gap_simple(const LoopMonomial& m,
                                                         int j, int sign) {
  int e = m.exponent(j);
  if (e != sign || (e != 1 && e != -1))
    throw NotAGap("shift_gap_simple: exponent on t_j must be ±1");
  LoopMonomial prefix = m;
  prefix.set(j, 0);
  if (!prefix.gap_free() || prefix.max_index() >= j - 1)
    throw NotAGap("shift_gap_simple: need a consecutive prefix and gap size > 1");
  detail::Pipeline p(monomial_element(m), /*canonical=*/false, /*gaps_only=*/true);
  p.run();
  return {p.algebra_result(), p.take_trace()};
}

std::pair<AlgebraElement, RewriteTrace> conj_shift(int i, int k, int sign,
                                                   const AlgebraElement& alpha) {
  if (i < 1 || k < 1) throw IndexOutOfRange("conj_shift: need i >= 1, k >= 1");
  if (i > alpha.n() - 1) throw IndexOutOfRange("conj_shift: index exceeds strands");
  AlgebraElement x = prefix_loops(alpha, LoopMonomial::single(i, sign * k));
  RewriteTrace trace;
  trace.input = x;
  Word u(alpha.n());
  u.append(Letter::g(i, -sign));
  TraceStep st;
  st.kind = TraceStep::Kind::Conjugate;
  st.branch = 0;
  st.conjugate_by = u;
  st.after = conjugate_by(u, x);
  AlgebraElement out = st.after;
  trace.steps.push_back(std::move(st));
  return {out, trace};
}

std::pair<std::vector<std::pair<LoopMonomial, AlgebraElement>>, RewriteTrace>
regularize_one_gap(const LoopMonomial& prefix, int j, int k_j,
                   const AlgebraElement& alpha) {
  if (!prefix.gap_free()) throw NotAGap("regularize_one_gap: prefix has gaps");
  if (k_j == 0 || j <= prefix.max_index() + 1)
    throw NotAGap("regularize_one_gap: t_j does not sit past a gap");
  LoopMonomial m = prefix;
  m.set(j, k_j);
  AlgebraElement x = prefix_loops(alpha, m);
  detail::Pipeline p(x, /*canonical=*/false, /*gaps_only=*/true);
  p.run();
  // Group the branches by loop monomial; the tails keep the coefficients.
  std::map<LoopMonomial, AlgebraElement> grouped;
  for (const TraceBranch& br : p.branches()) {
    if (br.elem.is_zero()) continue;
    for (const auto& [key, c] : br.elem.terms()) {
      auto [it, inserted] = grouped.try_emplace(
          key.loops, AlgebraElement::zero(br.elem.n()));
      it->second.add_term(LoopMonomial{}, key.perm, c * to_laurent(br.weight));
    }
  }
  std::vector<std::pair<LoopMonomial, AlgebraElement>> out(grouped.begin(),
                                                           grouped.end());
  return {std::move(out), p.take_trace()};
}

std::pair<AlgebraElement, RewriteTrace> regularize(const LoopMonomial& m,
                                                   const AlgebraElement& tail) {
  return regularize_element(prefix_loops(tail, m));
}

std::pair<AlgebraElement, RewriteTrace> regularize_element(const AlgebraElement& e) {
  detail::Pipeline p(e, /*canonical=*/false, /*gaps_only=*/true);
  p.run();
  return {p.algebra_result(), p.take_trace()};
}

}  // namespace skein
