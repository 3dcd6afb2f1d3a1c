#pragma once

#include "skein/algebra_element.hpp"
#include "skein/word.hpp"

namespace skein {

// The brute-force reduction engine: folds words over {t^{±1}, g_i^{±1}} into
// the Sigma_n normal form using only the defining relations and the basic
// g_i / t_k^{±1} interaction rules. Every closed-form lemma is tested against
// it. All operations are pure.

// e * g_i^{±1}. Positive letters use the inductive Hecke rule on the
// permutation basis; g_i^{-1} is eliminated as q^{-1} g_i + (q^{-1} - 1).
AlgebraElement append_braid(const AlgebraElement& e, int i, int sign);

// e * t_idx^{±1}: the loop letter is pushed leftward through each braid part
// until it merges into the loop monomial. The number of braid letters to its
// left strictly decreases on every branch, which is the termination measure.
AlgebraElement append_loop(const AlgebraElement& e, int index, int sign);

// e * letter (macros are expanded by definition first).
AlgebraElement append_letter(const AlgebraElement& e, const Letter& l);

// Unique Sigma_n expansion of a word.
AlgebraElement normal_form(const Word& w);

// Bilinear extension of basis-element concatenation.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// loops * e: left multiplication by a loop monomial merges directly.
AlgebraElement prefix_loops(const AlgebraElement& e, const LoopMonomial& loops);

// Inclusion H_{1,n} into H_{1,n'}.
AlgebraElement embed(const AlgebraElement& e, int n2);

// Inverse inclusion; throws ShrinkNotAllowed when a dropped strand is in use.
AlgebraElement shrink(const AlgebraElement& e, int n2);

// Smallest strand count on which the element lives (>= 1).
int used_strands(const AlgebraElement& e);

bool equal(const AlgebraElement& a, const AlgebraElement& b);

// normal_form(u * x * u^{-1}).
AlgebraElement conjugate_by(const Word& u, const AlgebraElement& x);

// Word built from a single Sigma_n basis key (loops as macro letters followed
// by a reduced word of the permutation part).
Word key_word(int n, const LoopMonomial& loops, const Permutation& perm);

}  // namespace skein
