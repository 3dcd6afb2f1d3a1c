#include <doctest.h>

#include "skein/laurent.hpp"
#include "skein/verify.hpp"

using namespace skein;

namespace {

LaurentPoly random_poly(Rng& rng) {
  LaurentPoly p;
  int terms = rng.uniform(0, 4);
  for (int i = 0; i < terms; ++i)
    p.add_term({rng.uniform(-4, 4)}, Int(rng.uniform(-9, 9)));
  return p;
}

}  // namespace

TEST_CASE("addition") {
  LaurentPoly qm1 = lp_q(1) - lp_q(0);   // q - 1
  LaurentPoly onemq = lp_q(0) - lp_q(1); // 1 - q
  CHECK((qm1 + onemq).is_zero());
  CHECK(lp_q(1) + lp_q(1) == lp_q(1, 2));
  CHECK(qm1 + lp_q(1) == lp_q(1, 2) - lp_q(0));
}

TEST_CASE("multiplication") {
  LaurentPoly qm1 = lp_q(1) - lp_q(0);
  LaurentPoly qp1 = lp_q(1) + lp_q(0);
  CHECK(qm1 * qp1 == lp_q(2) - lp_q(0));
  CHECK(lp_q(-1) * lp_q(1) == LaurentPoly(1));
  LaurentPoly qinvm1 = lp_q(-1) - lp_q(0);
  CHECK(qinvm1 * qinvm1 == lp_q(-2) - lp_q(-1, 2) + lp_q(0));
}

TEST_CASE("units") {
  CHECK(lp_q(-3).is_unit());
  CHECK_FALSE((lp_q(1) - lp_q(0)).is_unit());
  CHECK((-(cp_q(2) * cp_z(1))).is_unit());
  CHECK_FALSE(CoeffPoly(2).is_unit());
  // A trace monomial containing s_k is not invertible.
  TraceKey with_s;
  with_s.s.add(2);
  CHECK_FALSE(TraceValue::monomial(with_s).is_unit());
  CHECK(TraceValue::monomial({1, -2, 3, {}}).is_unit());
}

TEST_CASE("division by a unit") {
  CHECK((lp_q(2) - lp_q(1)).div_unit(lp_q(1)) == lp_q(1) - lp_q(0));
  CHECK(lp_q(-2).div_unit(lp_q(-2)) == LaurentPoly(1));
  CHECK((cp_z(2) * cp_q(1)).div_unit(-cp_q(1)) == -cp_z(2));
  CHECK_THROWS_AS(lp_q(1).div_unit(lp_q(1) - lp_q(0)), NotAUnit);
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (a.is_unit()) CHECK(a * LaurentPoly(1).div_unit(a) == LaurentPoly(1));
  }
}

TEST_CASE("canonical form") {
  LaurentPoly a;
  a.add_term({2}, 5);
  a.add_term({2}, -5);
  CHECK(a.is_zero());
  CHECK(a.terms().empty());
  LaurentPoly b = lp_q(1) + lp_q(0);
  LaurentPoly c = lp_q(0) + lp_q(1);
  CHECK(b.terms() == c.terms());
}

TEST_CASE("trace ring multisets") {
  TraceKey a;
  a.s.add(2);
  a.s.add(-1);
  TraceKey b;
  b.s.add(-1);
  TraceKey prod = a + b;
  CHECK(prod.s.flatten() == std::vector<int>{-1, -1, 2});
  TraceValue x = TraceValue::monomial(a, 3);
  TraceValue y = TraceValue::monomial(b, -2);
  TraceValue expected = TraceValue::monomial(prod, -6);
  CHECK(x * y == expected);
}
