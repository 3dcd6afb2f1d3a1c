#pragma once

#include <vector>

#include "skein/engine.hpp"

namespace skein {

// Closed-form rewriters converting primed looping monomials into the Sigma_n
// basis. Each operation builds the lemma's right-hand side and normal-forms
// it through the engine, so the lemma-vs-oracle tests are structural equality
// of two different reduction paths.

// A formal term: coefficient * loop monomial * braid word (letters g_i^{±1}).
struct FormalTerm {
  LaurentPoly coeff;
  LoopMonomial loops;
  std::vector<Letter> braid;
};
using FormalSum = std::vector<FormalTerm>;

// Normal-form a formal sum on n strands.
AlgebraElement realize(const FormalSum& sum, int n);

// g_{m+1} t_m^k (sign +) or g_{m+1}^{-1} t_m^{-k} (sign -), k >= 1.
AlgebraElement expand_g_next_t_power(int m, int k, int sign, int n = -1);

// (g_r g_{r-1} ... g_{r-s}) * t_k^{±1}.
AlgebraElement expand_desc_block_times_t(int r, int s, int k, int sign, int n = -1);

// t_k * (g_k g_{k-1} ... g_r), k >= r >= 1.
AlgebraElement expand_t_times_desc_block(int k, int r, int n = -1);

// (g_r g_{r+1} ... g_{r+s}) * t_k^{±1}.
AlgebraElement expand_asc_block_times_t(int r, int s, int k, int sign, int n = -1);

// The bridge-word interactions:
//   I:   (g_1 ... g_{i-1} g_i^2 g_{i-1} ... g_1) * t
//   II:  (g_1^{-1} ... g_i^{-2} ... g_1^{-1}) * t^{-1}
//   III: (g_k^{-1} ... g_2^{-1} g_1^{-2} g_2^{-1} ... g_k^{-1}) * t_k
//   IV:  same bridge * t_k^{-1}
enum class BridgeVariant { I, II, III, IV };
AlgebraElement expand_bridge(int index, BridgeVariant variant, int n = -1);

// t'_1^{±k}, k >= 1.
AlgebraElement expand_tprime1_power(int k, int sign, int n = -1);

// t'_k^{-1}.
AlgebraElement expand_tprime_inverse(int k, int n = -1);

// t'_m^k for nonzero k, as a formal sum (used by convert_monomial) and as a
// normal-formed element. Exactly one term carries the loop part t_m^k with an
// empty braid word, with coefficient q^{-mk}.
FormalSum tprime_power_formal(int m, int k);
AlgebraElement expand_tprime_power(int m, int k, int n = -1);

// t^{k_0} t'_1^{k_1} ... t'_m^{k_m} expanded into Sigma_n. The monomial is
// read as the increasing ordered product of primed generators; the homologous
// unprimed monomial appears braid-free with coefficient q^{-sum(i*k_i)}.
AlgebraElement convert_monomial(const LoopMonomial& mprime, int n = -1);
FormalSum convert_monomial_formal(const LoopMonomial& mprime);

// Closed-form letter walk: expands a word by moving loop letters leftward with
// the primitive g_i^{±1} / t_k^{±1} rules, without touching the braid part.
// Walks words the engine never sees as a whole; used by the bridge variants
// whose printed forms are not algebra identities.
FormalSum closed_walk(const std::vector<Letter>& letters);

}  // namespace skein
