#include "skein/trace.hpp"

#include "skein/convert.hpp"
#include "skein/order.hpp"

namespace skein {

TraceValue tr_lambda_prime(const LoopMonomial& mprime) {
  if (!in_basis_grammar(mprime))
    throw GrammarViolation("tr_lambda_prime: monomial not in the basis grammar");
  TraceKey key;
  for (const auto& [i, e] : mprime.exponents()) key.s.add(e);
  return TraceValue::monomial(key);
}

std::map<LoopMonomial, CoeffPoly> TraceCalculator::lambda_to_lambda_prime(
    const LoopMonomial& tau) {
  if (!in_basis_grammar(tau))
    throw GrammarViolation("lambda_to_lambda_prime: monomial not in the basis grammar");
  if (auto it = memo_.find(tau); it != memo_.end()) return it->second;
  if (++depth_ > caps::depth_cap())
    throw DepthCapExceeded("lambda_to_lambda_prime: recursion exceeds the step cap");

  // Reduce the homologous primed monomial; over the literal monomial family
  // its expansion is triangular with a unit diagonal at tau, so
  // tau = d^{-1} [tau'] - d^{-1} sum c_sigma [sigma]. (Exponent sorting is a
  // closure presentation that merges distinct trace values, so the solve runs
  // on unsorted representatives regardless of the caller's options.)
  ReduceOptions literal;
  literal.canonical = false;
  auto [expansion, trace] = reduce_to_basis(convert_monomial(tau), literal);
  CoeffPoly diag = expansion.coefficient(tau);
  if (!diag.is_unit())
    throw NotAUnit("lambda_to_lambda_prime: diagonal coefficient is not a unit");
  CoeffPoly diag_inv = CoeffPoly(1).div_unit(diag);

  std::map<LoopMonomial, CoeffPoly> out;
  out[tau] = diag_inv;
  for (const auto& [sigma, c] : expansion.terms()) {
    if (sigma == tau) continue;
    if (order_compare(sigma, tau) != std::strong_ordering::less)
      throw Error("lambda_to_lambda_prime: expansion is not triangular");
    CoeffPoly scale = diag_inv * c;
    for (const auto& [mp, cp] : lambda_to_lambda_prime(sigma)) {
      auto [it, inserted] = out.try_emplace(mp, CoeffPoly());
      it->second -= scale * cp;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  --depth_;
  memo_.emplace(tau, out);
  return out;
}

TraceValue TraceCalculator::markov_trace(const AlgebraElement& x) {
  ReduceOptions literal;
  literal.canonical = false;
  auto [coords, trace] = reduce_to_basis(x, literal);
  TraceValue out;
  for (const auto& [tau, c] : coords.terms()) {
    for (const auto& [mp, cp] : lambda_to_lambda_prime(tau))
      out += to_trace(c * cp) * tr_lambda_prime(mp);
  }
  return out;
}

TraceValue TraceCalculator::markov_trace(const Word& w) {
  return markov_trace(normal_form(w));
}

std::map<LoopMonomial, CoeffPoly> lambda_to_lambda_prime(const LoopMonomial& tau) {
  TraceCalculator calc;
  return calc.lambda_to_lambda_prime(tau);
}

TraceValue markov_trace(const AlgebraElement& x) {
  TraceCalculator calc;
  return calc.markov_trace(x);
}

TraceValue markov_trace(const Word& w) {
  TraceCalculator calc;
  return calc.markov_trace(w);
}

NormalizedInvariant invariant_x(const Word& w) {
  TraceCalculator calc;
  TraceValue tr = calc.markov_trace(w);
  int n = w.n;
  int e = w.writhe();

  // [-(1 - lambda q)]^{n-1} with lambda = L^2.
  TraceValue lead = TraceValue::monomial({1, 0, 2, {}}) - TraceValue(1);
  TraceValue num = TraceValue(1);
  for (int i = 0; i < n - 1; ++i) num *= lead;
  num *= TraceValue::monomial({0, 0, e, {}});
  num *= tr;

  NormalizedInvariant out;
  out.denom_one_minus_q_exp = n - 1;
  out.denom_L_exp = n - 1;
  // Cancel the common power of L between numerator and denominator.
  if (!num.is_zero()) {
    int min_l = out.denom_L_exp;
    for (const auto& [k, c] : num.terms()) min_l = std::min(min_l, k.L);
    if (min_l > 0) {
      out.denom_L_exp -= min_l;
      num = num.div_unit(TraceValue::monomial({0, 0, min_l, {}}));
    }
  }
  out.numerator = num;
  return out;
}

}  // namespace skein
