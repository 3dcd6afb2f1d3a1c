#pragma once

#include <utility>
#include <vector>

#include "skein/rewrite_trace.hpp"

namespace skein {

// Regularization of loop monomials with index gaps into gap-free monomials
// followed by braid tails, up to conjugation, with replayable witnesses.
// A "gap" is any skipped index in the support, a missing t^{k_0} included.

// Lemma move for a single out-loop with exponent ±1: the monomial
// prefix * t_j^{±1} becomes prefix * t_{i+1}^{±1} followed by the bridge word
// (g_{i+2}^e ... g_{j-1}^e g_j^{2e} g_{j-1}^e ... g_{i+2}^e), via one
// conjugation. The input monomial must be a consecutive prefix plus t_j^{±1}.
std::pair<AlgebraElement, RewriteTrace> shift_gap_simple(const LoopMonomial& m,
                                                         int j, int sign);

// One-index shift of a full power: t_i^{eps*k} * alpha conjugated by g_i^{-eps},
// the closed form being
//   sum_u q^{eps(u-1)} (q^eps - 1) t_{i-1}^{eps u} t_i^{eps(k-u)} (alpha g_i^eps)
//   + q^{eps(k-1)} t_{i-1}^{eps k} (g_i^eps alpha g_i^eps).
std::pair<AlgebraElement, RewriteTrace> conj_shift(int i, int k, int sign,
                                                   const AlgebraElement& alpha);

// Full regularization of a 1-gap word prefix * t_j^{k_j} * alpha. Returns the
// gap-free pieces grouped by loop monomial with their braid tails.
std::pair<std::vector<std::pair<LoopMonomial, AlgebraElement>>, RewriteTrace>
regularize_one_gap(const LoopMonomial& prefix, int j, int k_j,
                   const AlgebraElement& alpha);

// Leftmost-gap regularization of an arbitrary monomial-with-tail. Every loop
// monomial of the result is gap-free; gap-free input passes through unchanged.
std::pair<AlgebraElement, RewriteTrace> regularize(const LoopMonomial& m,
                                                   const AlgebraElement& tail);

// Regularizes every term of an element (used by the reduction pipeline).
std::pair<AlgebraElement, RewriteTrace> regularize_element(const AlgebraElement& e);

}  // namespace skein
