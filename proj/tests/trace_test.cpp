#include <doctest.h>

#include "skein/convert.hpp"
#include "skein/trace.hpp"
#include "skein/verify.hpp"

using namespace skein;

namespace {

LoopMonomial mono(std::initializer_list<std::pair<int, int>> exps) {
  LoopMonomial m;
  for (auto [i, e] : exps) m.set(i, e);
  return m;
}

TraceValue s_monomial(std::initializer_list<int> subscripts, int z = 0) {
  TraceKey key;
  key.z = z;
  for (int k : subscripts) key.s.add(k);
  return TraceValue::monomial(key);
}

}  // namespace

TEST_CASE("closed form on primed monomials") {
  CHECK(tr_lambda_prime(LoopMonomial{}) == TraceValue(1));
  CHECK(tr_lambda_prime(mono({{0, 5}})) == s_monomial({5}));
  CHECK(tr_lambda_prime(mono({{0, -1}, {1, 2}})) == s_monomial({-1, 2}));
  CHECK_THROWS_AS(tr_lambda_prime(mono({{1, 2}})), GrammarViolation);
}

TEST_CASE("basis-change recursion") {
  TraceCalculator calc;
  auto t3 = calc.lambda_to_lambda_prime(mono({{0, 3}}));
  REQUIRE(t3.size() == 1);
  CHECK(t3.at(mono({{0, 3}})) == CoeffPoly(1));

  auto empty = calc.lambda_to_lambda_prime(LoopMonomial{});
  REQUIRE(empty.size() == 1);
  CHECK(empty.at(LoopMonomial{}) == CoeffPoly(1));

  // Round trip: reduce(convert(.)) of the expansion returns the monomial.
  for (const LoopMonomial& tau :
       {mono({{0, 1}, {1, 1}}), mono({{0, -1}, {1, 1}}), mono({{0, 1}, {1, 2}})}) {
    ModuleElement acc;
    for (const auto& [mp, c] : calc.lambda_to_lambda_prime(tau)) {
      auto [coords, tr] = reduce_to_basis(convert_monomial(mp));
      acc += coords.scaled(c);
    }
    CHECK(acc == ModuleElement::monomial(tau));
  }
}

TEST_CASE("markov trace examples") {
  CHECK(markov_trace(Word(2, {Letter::g(1)})) == TraceValue::monomial({0, 1, 0, {}}));
  CHECK(markov_trace(Word(1, {Letter::t(), Letter::t()})) == s_monomial({2}));
  // tr(t_1) = ((q-1)z + q) s_1
  TraceValue expected =
      (TraceValue::monomial({1, 1, 0, {}}) - TraceValue::monomial({0, 1, 0, {}}) +
       TraceValue::monomial({1, 0, 0, {}})) *
      s_monomial({1});
  CHECK(markov_trace(Word(2, {Letter::t_i(1)})) == expected);
}

TEST_CASE("invariant values") {
  // Unknot around the axis: X = tr(1) = 1 with no normalization.
  NormalizedInvariant unknot = invariant_x(Word(1));
  CHECK(unknot.numerator == TraceValue(1));
  CHECK(unknot.denom_L_exp == 0);
  CHECK(unknot.denom_one_minus_q_exp == 0);

  NormalizedInvariant t = invariant_x(Word(1, {Letter::t()}));
  CHECK(t.numerator == s_monomial({1}));
  CHECK(t.denom_L_exp == 0);
  CHECK(t.denom_one_minus_q_exp == 0);

  // g_1 on two strands: numerator -(1 - L^2 q) z, denominators (1-q)^1 and L^0.
  NormalizedInvariant g1 = invariant_x(Word(2, {Letter::g(1)}));
  TraceValue expected_num =
      TraceValue::monomial({1, 1, 2, {}}) - TraceValue::monomial({0, 1, 0, {}});
  CHECK(g1.numerator == expected_num);
  CHECK(g1.denom_L_exp == 0);
  CHECK(g1.denom_one_minus_q_exp == 1);
}

TEST_CASE("trace suite") {
  SuiteOptions opts;
  opts.n_max = 3;
  opts.index_max = 2;
  opts.exp_max = 2;
  opts.samples = 20;
  SuiteResult r = run_suite("trace", opts);
  for (const std::string& f : r.failures) MESSAGE(f);
  CHECK(r.failures.empty());
}
