#pragma once

#include <compare>
#include <vector>

#include "skein/loop_monomial.hpp"

namespace skein {

// Total ordering on loop monomials (the braiding part of a Sigma_n element is
// ignored). Keys compare by level, then index, then positionally on the index
// sequences (at the first difference the smaller index wins as the greater
// monomial), then on exponents scanned from the highest position downward
// (smaller absolute value first; for equal absolute value the larger signed
// value is the smaller monomial).
struct OrderKey {
  int level = 0;
  int index = 0;
  std::vector<int> support;  // increasing
  std::vector<int> exps;     // aligned with support

  static OrderKey of(const LoopMonomial& m);
  std::strong_ordering compare(const OrderKey& o) const;
};

// Highest loop index; 0 for pure t-powers and for the empty monomial.
int monomial_index(const LoopMonomial& m);

// Sum of exponents.
int monomial_level(const LoopMonomial& m);

std::strong_ordering order_compare(const LoopMonomial& a, const LoopMonomial& b);

// The homologous Lambda-monomial of a Lambda'-monomial: same index/exponent
// data with every primed generator unprimed. (Both sides share the
// LoopMonomial representation; which family is meant is contextual.)
LoopMonomial homologous(const LoopMonomial& mprime);

// Monomial grammar of the basis sets: support consecutive from 0 with nonzero
// exponents, or empty. (A missing t^{k_0} counts as a gap.)
bool in_basis_grammar(const LoopMonomial& m);

// Weakly increasing exponent sequence (the canonical closure representative).
bool canonical_exponents(const LoopMonomial& m);

// All grammar monomials of the given level with index <= max_index and every
// |exponent| <= max_abs_exp, sorted ascending; the empty monomial appears at
// level 0. With canonical=true only weakly increasing exponent sequences are
// produced.
std::vector<LoopMonomial> enumerate_level(int level, int max_index, int max_abs_exp,
                                          bool canonical);

}  // namespace skein
