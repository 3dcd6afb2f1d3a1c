#pragma once

#include <utility>

#include "skein/rewrite_trace.hpp"

namespace skein {

// Elimination of braid tails via conjugation and weighted stabilization,
// producing canonical module coordinates over the gap-free basis monomials.

// Removes the top strand of an element of the form a * g_{n-1}^{±1} (a not
// using strand n). The weight is z for sign +, and q^{-1} z + (q^{-1} - 1) for
// sign - (the quadratic expansion of g^{-1} followed by the z rule).
std::pair<AlgebraElement, CoeffPoly> stabilize(const AlgebraElement& e, int sign);

struct ReduceOptions {
  // Sort the exponent sequences of the output monomials (equal closures) via
  // ClosurePermute steps. Disable to reproduce literal matrix entries.
  bool canonical = true;
};

// Full reduction of tau * w to module coordinates, with witness.
std::pair<ModuleElement, RewriteTrace> eliminate_tail(const LoopMonomial& tau,
                                                      const AlgebraElement& braid,
                                                      ReduceOptions opts = {});

// Pipeline entry points: normal form, gap regularization, tail elimination,
// and (by default) closure canonicalization.
std::pair<ModuleElement, RewriteTrace> reduce_to_basis(const AlgebraElement& e,
                                                       ReduceOptions opts = {});
std::pair<ModuleElement, RewriteTrace> reduce_to_basis(const Word& w,
                                                       ReduceOptions opts = {});

}  // namespace skein
