#include "skein/tails.hpp"

#include "reduction_pipeline.hpp"

namespace skein {

std::pair<AlgebraElement, CoeffPoly> stabilize(const AlgebraElement& e, int sign) {
  if (sign != 1 && sign != -1) throw NotStabilizable("stabilize: sign must be ±1");
  int n = e.n();
  if (n < 2) throw NotStabilizable("stabilize: needs at least two strands");
  AlgebraElement a_full = append_braid(e, n - 1, -sign);
  if (used_strands(a_full) > n - 1)
    throw NotStabilizable("stabilize: element does not factor as a * g_{n-1}^{±1}");
  CoeffPoly weight = sign > 0
                         ? cp_z(1)
                         : CoeffPoly::monomial({-1, 1}) + cp_q(-1) - CoeffPoly(1);
  return {shrink(a_full, n - 1), weight};
}

std::pair<ModuleElement, RewriteTrace> eliminate_tail(const LoopMonomial& tau,
                                                      const AlgebraElement& braid,
                                                      ReduceOptions opts) {
  return reduce_to_basis(prefix_loops(braid, tau), opts);
}

std::pair<ModuleElement, RewriteTrace> reduce_to_basis(const AlgebraElement& e,
                                                       ReduceOptions opts) {
  detail::Pipeline p(e, opts.canonical, /*gaps_only=*/false);
  p.run();
  return {p.module_result(), p.take_trace()};
}

std::pair<ModuleElement, RewriteTrace> reduce_to_basis(const Word& w,
                                                       ReduceOptions opts) {
  return reduce_to_basis(normal_form(w), opts);
}

}  // namespace skein
