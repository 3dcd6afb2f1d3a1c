#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/loop_monomial.hpp"
#include "skein/word.hpp"

namespace skein {

// Concrete syntax for algebra expressions (whitespace-insensitive):
//   expr   := '-'? term (('+' | '-') term)*
//   term   := factor ('*'? factor)*
//   factor := base ('^' int)?
//   base   := 't' | t/t' with '[' uint ']' | 'g' '[' uint ']'
//           | 'q' | 'z' | uint | '(' expr ')'
// Juxtaposition is multiplication.

struct Expression;

struct ExprBase {
  enum class Kind { Loop, LoopPrime, Braid, Q, Z, IntLit, Paren };
  Kind kind = Kind::Loop;
  int index = 0;          // Loop/LoopPrime/Braid
  Int value = 0;          // IntLit
  std::shared_ptr<Expression> sub;  // Paren

  friend bool operator==(const ExprBase& a, const ExprBase& b);
};

struct ExprFactor {
  ExprBase base;
  int exp = 1;
  friend bool operator==(const ExprFactor&, const ExprFactor&) = default;
};

struct ExprTerm {
  int sign = +1;
  std::vector<ExprFactor> factors;
  friend bool operator==(const ExprTerm&, const ExprTerm&) = default;
};

struct Expression {
  std::vector<ExprTerm> terms;
  friend bool operator==(const Expression&, const Expression&) = default;
};

Expression parse_expression(const std::string& text);
std::string print_expression(const Expression& e);

// A linear combination of words with CoeffPoly coefficients, on a common
// strand count inferred from the expression (1 + the largest index used).
struct LinearWords {
  int n = 1;
  std::vector<std::pair<CoeffPoly, Word>> terms;
};

LinearWords evaluate(const Expression& e);

// Requires the expression to be a plain word (single term, coefficient 1).
Word expression_word(const Expression& e);

// Requires the expression to be an ordered primed monomial
// t^{k_0} t'[1]^{k_1} ... t'[m]^{k_m} (strictly increasing indices); plain t
// and t[0] are the index-0 generator.
LoopMonomial expression_lambda_prime(const Expression& e);

}  // namespace skein
