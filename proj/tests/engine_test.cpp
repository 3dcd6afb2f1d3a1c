#include <doctest.h>

#include "skein/engine.hpp"
#include "skein/verify.hpp"

using namespace skein;

namespace {

const LaurentPoly kQm1 = lp_q(1) - lp_q(0);
const LaurentPoly kQinvm1 = lp_q(-1) - lp_q(0);

AlgebraElement term(int n, LoopMonomial loops, std::vector<int> images, LaurentPoly c) {
  return AlgebraElement::monomial(n, std::move(loops),
                                  Permutation::from_images(std::move(images)),
                                  std::move(c));
}

}  // namespace

TEST_CASE("macro expansion") {
  Word t1 = expand_macro(Letter::t_i(1));
  CHECK(t1.letters == std::vector<Letter>{Letter::g(1), Letter::t(), Letter::g(1)});
  Word tp1inv = expand_macro(Letter::t_prime(1, -1));
  CHECK(tp1inv.letters ==
        std::vector<Letter>{Letter::g(1), Letter::t(-1), Letter::g(1, -1)});
  Word t0 = expand_macro(Letter::t_i(0));
  CHECK(t0.letters == std::vector<Letter>{Letter::t()});
  Word t1inv = expand_macro(Letter::t_i(1, -1));
  CHECK(t1inv.letters ==
        std::vector<Letter>{Letter::g(1, -1), Letter::t(-1), Letter::g(1, -1)});
}

TEST_CASE("quadratic relation via append") {
  AlgebraElement e = normal_form(Word(2, {Letter::g(1), Letter::g(1)}));
  AlgebraElement expected = term(2, {}, {2, 1}, kQm1) + term(2, {}, {1, 2}, lp_q(1));
  CHECK(e == expected);
}

TEST_CASE("defining word of t_1") {
  AlgebraElement e = normal_form(Word(2, {Letter::g(1), Letter::t(), Letter::g(1)}));
  CHECK(e == term(2, LoopMonomial::single(1, 1), {1, 2}, LaurentPoly(1)));
}

TEST_CASE("t'_1 in the Sigma_2 basis") {
  // Hand-checked: t'_1 = (q^{-1} + (q^{-1}-1)^2) t_1 + q^{-1}(q^{-1}-1) t_1 g_1.
  AlgebraElement e = normal_form(Word(2, {Letter::t_prime(1)}));
  AlgebraElement expected =
      term(2, LoopMonomial::single(1, 1), {1, 2}, lp_q(-1) + kQinvm1 * kQinvm1) +
      term(2, LoopMonomial::single(1, 1), {2, 1}, lp_q(-1) * kQinvm1);
  CHECK(e == expected);
}

TEST_CASE("normal form equates the defining relations") {
  CHECK(equal(normal_form(Word(3, {Letter::g(1), Letter::g(2), Letter::g(1)})),
              normal_form(Word(3, {Letter::g(2), Letter::g(1), Letter::g(2)}))));
  CHECK(equal(normal_form(Word(2, {Letter::g(1), Letter::t(), Letter::g(1), Letter::t()})),
              normal_form(Word(2, {Letter::t(), Letter::g(1), Letter::t(), Letter::g(1)}))));
  CHECK(equal(normal_form(Word(2, {Letter::t(), Letter::t_i(1)})),
              normal_form(Word(2, {Letter::t_i(1), Letter::t()}))));
}

TEST_CASE("multiplication") {
  AlgebraElement a = normal_form(Word(3, {Letter::g(2), Letter::t(), Letter::g(1, -1)}));
  CHECK(equal(multiply(a, AlgebraElement::one(3)), a));
  CHECK(equal(multiply(AlgebraElement::one(3), a), a));

  AlgebraElement g1 = normal_form(Word(2, {Letter::g(1)}));
  AlgebraElement expected = term(2, {}, {2, 1}, kQm1) + term(2, {}, {1, 2}, lp_q(1));
  CHECK(equal(multiply(g1, g1), expected));

  AlgebraElement t1 = normal_form(Word(2, {Letter::t_i(1)}));
  AlgebraElement t1inv = normal_form(Word(2, {Letter::t_i(1, -1)}));
  CHECK(equal(multiply(t1, t1inv), AlgebraElement::one(2)));
}

TEST_CASE("embed and shrink") {
  AlgebraElement t1 = normal_form(Word(2, {Letter::t_i(1)}));
  AlgebraElement t1_3 = embed(t1, 3);
  CHECK(t1_3.n() == 3);
  CHECK(equal(t1_3, normal_form(Word(3, {Letter::t_i(1)}))));
  CHECK(equal(shrink(t1_3, 2), t1));
  CHECK_THROWS_AS(embed(t1_3, 2), ShrinkNotAllowed);
  CHECK_THROWS_AS(shrink(normal_form(Word(3, {Letter::g(2)})), 2), ShrinkNotAllowed);
  CHECK_THROWS_AS(multiply(t1, t1_3), StrandMismatch);
}

TEST_CASE("strand usage") {
  CHECK(used_strands(normal_form(Word(5, {Letter::g(2)}))) == 3);
  CHECK(used_strands(normal_form(Word(5, {Letter::t_i(3)}))) == 4);
  CHECK(used_strands(AlgebraElement::one(5)) == 1);
}

TEST_CASE("conjugation helper") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    Word x = rng.word(3, rng.uniform(0, 5), true);
    Word u = rng.word(3, rng.uniform(0, 3), true);
    Word whole(3);
    whole.append(u);
    whole.append(x);
    whole.append(u.inverse());
    CHECK(equal(conjugate_by(u, normal_form(x)), normal_form(whole)));
  }
}

TEST_CASE("term cap fails loudly") {
  std::size_t old = caps::term_cap();
  caps::set_term_cap(3);
  Word w(4);
  for (int i = 0; i < 6; ++i) w.append(Letter::g(1 + (i % 3)));
  w.append(Letter::g(1, -1));
  w.append(Letter::g(2, -1));
  CHECK_THROWS_AS(normal_form(w), TermCapExceeded);
  caps::set_term_cap(old);
}

TEST_CASE("relations suite") {
  SuiteOptions opts;
  opts.n_max = 4;
  opts.samples = 40;
  SuiteResult r = run_suite("relations", opts);
  for (const std::string& f : r.failures) MESSAGE(f);
  CHECK(r.failures.empty());
}
