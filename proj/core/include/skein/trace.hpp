#pragma once

#include <map>

#include "skein/module_element.hpp"
#include "skein/tails.hpp"
#include "skein/word.hpp"

namespace skein {

// The Markov trace and the link invariant, computed through the basis
// machinery: the closed form on primed monomials, a memoized triangular solve
// for unprimed monomials, and linear extension everywhere else.

// tr(t^{k_0} t'_1^{k_1} ... t'_m^{k_m}) = s_{k_m} ... s_{k_1} s_{k_0}: the
// multiset of exponents as an s-monomial. Requires the strict basis grammar.
TraceValue tr_lambda_prime(const LoopMonomial& mprime);

// Memoized conversion of basis monomials into combinations of primed
// monomials, by back-substitution against the reduction pipeline. The solve
// runs over literal (unsorted) representatives, where the change of basis is
// triangular with unit diagonal; the maximum recursion depth is bounded by the
// rewrite-step cap. Instances are independent, so share one per task or guard
// it externally.
class TraceCalculator {
 public:
  TraceCalculator() = default;

  // tau as a combination of primed monomials: reduce_to_basis applied to the
  // result (linearly, via convert) gives back 1 * tau.
  std::map<LoopMonomial, CoeffPoly> lambda_to_lambda_prime(const LoopMonomial& tau);

  TraceValue markov_trace(const AlgebraElement& x);
  TraceValue markov_trace(const Word& w);

 private:
  std::map<LoopMonomial, std::map<LoopMonomial, CoeffPoly>> memo_;
  std::size_t depth_ = 0;
};

// One-shot helpers.
std::map<LoopMonomial, CoeffPoly> lambda_to_lambda_prime(const LoopMonomial& tau);
TraceValue markov_trace(const AlgebraElement& x);
TraceValue markov_trace(const Word& w);

// X = [-(1 - lambda q) / (sqrt(lambda) (1 - q))]^{n-1} (sqrt(lambda))^e tr(pi(w)),
// held as an exact numerator over (sqrt(lambda))^a (1-q)^b with lambda = L^2.
struct NormalizedInvariant {
  TraceValue numerator;
  int denom_L_exp = 0;
  int denom_one_minus_q_exp = 0;

  friend bool operator==(const NormalizedInvariant&, const NormalizedInvariant&) = default;
};

NormalizedInvariant invariant_x(const Word& w);

}  // namespace skein
