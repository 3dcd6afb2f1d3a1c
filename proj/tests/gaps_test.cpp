#include <doctest.h>

#include "skein/gaps.hpp"
#include "skein/order.hpp"
#include "skein/verify.hpp"

using namespace skein;

namespace {

const LaurentPoly kQm1 = lp_q(1) - lp_q(0);

LoopMonomial mono(std::initializer_list<std::pair<int, int>> exps) {
  LoopMonomial m;
  for (auto [i, e] : exps) m.set(i, e);
  return m;
}

AlgebraElement nf(int n, std::vector<Letter> letters) {
  return normal_form(Word(n, std::move(letters)));
}

void check_gap_free_and_level(const AlgebraElement& e, int level) {
  for (const auto& [key, c] : e.terms()) {
    CHECK(key.loops.gap_free());
    CHECK(key.loops.level() == level);
  }
}

}  // namespace

TEST_CASE("single shift over a gap") {
  // t^k t_1^l t_3 -> t^k t_1^l t_2 g_3^2 (k = l = 1 here)
  LoopMonomial m = mono({{0, 1}, {1, 1}, {3, 1}});
  auto [result, trace] = shift_gap_simple(m, 3, +1);
  CHECK(equal(result, nf(4, {Letter::t(), Letter::t_i(1), Letter::t_i(2),
                             Letter::g(3), Letter::g(3)})));
  ReplayReport rep = replay(trace);
  CHECK(rep.ok);
  check_gap_free_and_level(result, 3);

  auto [r2, t2] = shift_gap_simple(mono({{0, 1}, {2, 1}}), 2, +1);
  CHECK(equal(r2, nf(3, {Letter::t(), Letter::t_i(1), Letter::g(2), Letter::g(2)})));
  CHECK(replay(t2).ok);

  auto [r3, t3] = shift_gap_simple(mono({{0, 1}, {2, -1}}), 2, -1);
  CHECK(equal(r3, nf(3, {Letter::t(), Letter::t_i(1, -1), Letter::g(2, -1),
                         Letter::g(2, -1)})));
  CHECK(replay(t3).ok);

  CHECK_THROWS_AS(shift_gap_simple(mono({{0, 1}, {1, 1}}), 1, +1), NotAGap);
  CHECK_THROWS_AS(shift_gap_simple(mono({{0, 1}, {2, 2}}), 2, +1), NotAGap);
}

TEST_CASE("one-index conjugation shift") {
  // t_1 ~ t g_1^2
  auto [r1, t1] = conj_shift(1, 1, +1, AlgebraElement::one(2));
  CHECK(equal(r1, nf(2, {Letter::t(), Letter::g(1), Letter::g(1)})));
  CHECK(replay(t1).ok);

  // t_1^2 ~ (q-1) t t_1 g_1 + q t^2 g_1^2
  auto [r2, t2] = conj_shift(1, 2, +1, AlgebraElement::one(2));
  AlgebraElement expected =
      nf(2, {Letter::t(), Letter::t_i(1), Letter::g(1)}).scaled(kQm1) +
      nf(2, {Letter::t(), Letter::t(), Letter::g(1), Letter::g(1)}).scaled(lp_q(1));
  CHECK(equal(r2, expected));
  CHECK(replay(t2).ok);

  // t_2^{-1} g_1 ~ q^{-1*0} t_1^{-1} (g_2^{-1} g_1 g_2^{-1})
  auto [r3, t3] = conj_shift(2, 1, -1, nf(3, {Letter::g(1)}));
  CHECK(equal(r3, nf(3, {Letter::t_i(1, -1), Letter::g(2, -1), Letter::g(1),
                         Letter::g(2, -1)})));
  CHECK(replay(t3).ok);
}

TEST_CASE("one-gap regularization") {
  // Delegation: exponent 1 reduces to the simple shift.
  auto [pieces1, tr1] = regularize_one_gap(mono({{0, 1}, {1, 1}}), 3, 1,
                                           AlgebraElement::one(4));
  REQUIRE(pieces1.size() == 1);
  CHECK(pieces1[0].first == mono({{0, 1}, {1, 1}, {2, 1}}));
  CHECK(replay(tr1).ok);

  // t t_3^2: leading piece t t_1^2 with tail q^2 (g_2 g_3)(g_3 g_2), plus
  // t t_1 t_2 pieces.
  auto [pieces2, tr2] = regularize_one_gap(mono({{0, 1}}), 3, 2,
                                           AlgebraElement::one(4));
  CHECK(replay(tr2).ok);
  bool found_lead = false;
  for (const auto& [m, tail] : pieces2) {
    CHECK(m.gap_free());
    if (m == mono({{0, 1}, {1, 2}})) {
      found_lead = true;
      CHECK(equal(tail, nf(4, {Letter::g(2), Letter::g(3), Letter::g(3), Letter::g(2)})
                            .scaled(lp_q(2))));
    } else {
      CHECK(m == mono({{0, 1}, {1, 1}, {2, 1}}));
    }
  }
  CHECK(found_lead);

  // Branch (i) of the lemma: |k_j| < gap size.
  auto [pieces3, tr3] = regularize_one_gap(mono({{0, 1}}), 2, -2,
                                           AlgebraElement::one(3));
  CHECK(replay(tr3).ok);
  for (const auto& [m, tail] : pieces3) {
    CHECK(m.gap_free());
    CHECK(m.level() == -1);
  }
}

TEST_CASE("gap-free input passes through") {
  LoopMonomial m = mono({{0, 2}, {1, -1}});
  auto [r, tr] = regularize(m, AlgebraElement::one(2));
  CHECK(equal(r, AlgebraElement::monomial(2, m, Permutation::identity(2))));
  CHECK(tr.steps.empty());
  CHECK(replay(tr).ok);
}

TEST_CASE("two gaps") {
  auto [r, tr] = regularize(mono({{0, 1}, {2, 1}, {4, 1}}), AlgebraElement::one(5));
  CHECK(replay(tr).ok);
  check_gap_free_and_level(r, 3);
}

TEST_CASE("the two-gap regression") {
  // t t_1 t_3 t_5^2 t_6^{-1} regularizes to the three-piece combination
  //   q^2 t t_1 t_2 t_3^2 t_4^{-1} (g_5^{-1} g_6^{-1} g_4 g_5 g_3^2 g_5 g_4 g_6^{-1} g_5^{-1})
  // + q(q-1) t t_1 t_2 t_3 t_4 t_5^{-1} (g_6^{-1} g_5 g_3^2 g_5 g_4 g_6^{-1})
  // + (q-1) t t_1 t_2 t_3 t_4 t_5^{-1} (g_6^{-1} g_5 g_4 g_3^2 g_5 g_4 g_5 g_6^{-1})
  LoopMonomial m = mono({{0, 1}, {1, 1}, {3, 1}, {5, 2}, {6, -1}});
  auto [r, tr] = regularize(m, AlgebraElement::one(7));
  check_gap_free_and_level(r, 4);
  ReplayReport rep = replay(tr);
  for (const std::string& e : rep.errors) MESSAGE(e);
  CHECK(rep.ok);

  auto piece = [&](std::initializer_list<std::pair<int, int>> loops,
                   std::vector<int> letters) {
    std::vector<Letter> ls;
    LoopMonomial lm = mono(loops);
    for (const auto& [i, e] : lm.exponents()) {
      for (int rpt = 0; rpt < std::abs(e); ++rpt)
        ls.push_back(Letter::t_i(i, e > 0 ? +1 : -1));
    }
    for (int v : letters) ls.push_back(Letter::g(std::abs(v), v > 0 ? +1 : -1));
    return nf(7, std::move(ls));
  };
  AlgebraElement expected =
      piece({{0, 1}, {1, 1}, {2, 1}, {3, 2}, {4, -1}},
            {-5, -6, 4, 5, 3, 3, 5, 4, -6, -5})
          .scaled(lp_q(2)) +
      piece({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, -1}},
            {-6, 5, 3, 3, 5, 4, -6})
          .scaled(lp_q(1) * kQm1) +
      piece({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, -1}},
            {-6, 5, 4, 3, 3, 5, 4, 5, -6})
          .scaled(kQm1);
  CHECK(equal(r, expected));
}
