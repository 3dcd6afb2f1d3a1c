#include <doctest.h>

#include "skein/order.hpp"
#include "skein/verify.hpp"

using namespace skein;

namespace {

LoopMonomial mono(std::initializer_list<std::pair<int, int>> exps) {
  LoopMonomial m;
  for (auto [i, e] : exps) m.set(i, e);
  return m;
}

}  // namespace

TEST_CASE("index and level") {
  CHECK(monomial_index(mono({{0, 1}, {1, 2}, {2, -1}})) == 2);
  CHECK(monomial_index(mono({{0, 3}})) == 0);
  CHECK(monomial_index(LoopMonomial{}) == 0);
  CHECK(monomial_index(mono({{0, 1}, {3, 2}})) == 3);
  CHECK(monomial_level(mono({{0, 2}, {1, -2}})) == 0);
  CHECK(monomial_level(LoopMonomial{}) == 0);
  CHECK(monomial_level(mono({{0, 1}, {1, 1}, {2, 1}})) == 3);
}

TEST_CASE("ordering clauses") {
  // level first
  CHECK(order_compare(mono({{0, 1}}), mono({{0, 2}})) == std::strong_ordering::less);
  // index at equal level: t^2 < t t_1
  CHECK(order_compare(mono({{0, 2}}), mono({{0, 1}, {1, 1}})) ==
        std::strong_ordering::less);
  // positional clause: t t_2 > t_1 t_2 (smaller first index wins as greater)
  CHECK(order_compare(mono({{0, 1}, {2, 1}}), mono({{1, 1}, {2, 1}})) ==
        std::strong_ordering::greater);
  // sign clause at equal |exponent| and level: t^{-2} t_1^2 < t^2 t_1^{-2}
  // (the larger signed exponent at the first difference from the top loses)
  CHECK(order_compare(mono({{0, -2}, {1, 2}}), mono({{0, 2}, {1, -2}})) ==
        std::strong_ordering::less);
  // level precedes the exponent clauses: t t_1^2 has level 3, t t_1^{-2} has -1
  CHECK(order_compare(mono({{0, 1}, {1, 2}}), mono({{0, 1}, {1, -2}})) ==
        std::strong_ordering::greater);
  // gap vs consecutive at equal level and index: t t_2 < t^{-1} t_1 t_2^2
  CHECK(order_compare(mono({{0, 1}, {2, 1}}), mono({{0, -1}, {1, 1}, {2, 2}})) ==
        std::strong_ordering::less);
  // abs ordering from the top position downward (equal levels)
  CHECK(order_compare(mono({{0, 1}, {1, 1}}), mono({{0, -1}, {1, 3}})) ==
        std::strong_ordering::less);
  CHECK(order_compare(mono({{0, 1}}), mono({{0, 1}})) == std::strong_ordering::equal);
}

TEST_CASE("homologous mapping") {
  LoopMonomial mp = mono({{0, -1}, {1, 2}, {2, -1}});
  CHECK(homologous(mp) == mp);
  CHECK(homologous(LoopMonomial{}) == LoopMonomial{});
}

TEST_CASE("grammar predicate") {
  CHECK(in_basis_grammar(LoopMonomial{}));
  CHECK(in_basis_grammar(mono({{0, 5}})));
  CHECK(in_basis_grammar(mono({{0, 1}, {1, -1}})));
  CHECK_FALSE(in_basis_grammar(mono({{1, 1}})));
  CHECK_FALSE(in_basis_grammar(mono({{0, 1}, {2, 1}})));
}

TEST_CASE("level enumeration") {
  auto level2 = enumerate_level(2, 1, 2, true);
  REQUIRE(level2.size() == 2);
  CHECK(level2[0] == mono({{0, 2}}));
  CHECK(level2[1] == mono({{0, 1}, {1, 1}}));

  auto level0 = enumerate_level(0, 0, 2, true);
  REQUIRE(level0.size() == 1);
  CHECK(level0[0] == LoopMonomial{});

  auto level1 = enumerate_level(1, 0, 2, true);
  REQUIRE(level1.size() == 1);
  CHECK(level1[0] == mono({{0, 1}}));

  // Non-canonical enumeration contains every permutation of the exponents.
  auto canon = enumerate_level(1, 1, 2, true);
  auto all = enumerate_level(1, 1, 2, false);
  CHECK(all.size() > canon.size());
  for (const LoopMonomial& m : canon)
    CHECK(std::find(all.begin(), all.end(), m) != all.end());
  for (const LoopMonomial& m : all) {
    CHECK(m.level() == 1);
    CHECK(in_basis_grammar(m));
    CHECK(m.max_index() <= 1);
  }
}

TEST_CASE("order suite") {
  SuiteOptions opts;
  opts.samples = 2000;
  SuiteResult r = run_suite("order", opts);
  for (const std::string& f : r.failures) MESSAGE(f);
  CHECK(r.failures.empty());
}
