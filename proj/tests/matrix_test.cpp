#include <doctest.h>

#include "skein/block_matrix.hpp"
#include "skein/verify.hpp"

using namespace skein;

namespace {

LoopMonomial mono(std::initializer_list<std::pair<int, int>> exps) {
  LoopMonomial m;
  for (auto [i, e] : exps) m.set(i, e);
  return m;
}

}  // namespace

TEST_CASE("one-by-one block") {
  BlockMatrix b = build_block(1, 0, 1, true);
  REQUIRE(b.cols.size() == 1);
  REQUIRE(b.rows.size() == 1);
  CHECK(b.cols[0] == mono({{0, 1}}));
  const CoeffPoly* d = b.entry(0, 0);
  REQUIRE(d != nullptr);
  CHECK(*d == CoeffPoly(1));
  CHECK(check_triangular(b).ok);
  BlockMatrix inv = invert_block(b);
  CHECK(is_identity(block_product(paired_square(b), inv)));
}

TEST_CASE("diagonal entries") {
  BlockMatrix b = build_block(1, 1, 2, true);
  // Column t^1: pure t-powers have diagonal 1.
  int jt = b.col_of(mono({{0, 1}}));
  REQUIRE(jt >= 0);
  CHECK(*b.entry(b.row_of(mono({{0, 1}})), jt) == CoeffPoly(1));
  // Column t^{-1} t'_1^2: diagonal q^{-2} on its homologous row.
  int j = b.col_of(mono({{0, -1}, {1, 2}}));
  REQUIRE(j >= 0);
  const CoeffPoly* d = b.entry(b.row_of(mono({{0, -1}, {1, 2}})), j);
  REQUIRE(d != nullptr);
  CHECK(*d == cp_q(-2));
  CHECK(check_triangular(b).ok);
}

TEST_CASE("corrupted block is reported") {
  BlockMatrix b = build_block(0, 1, 1, true);
  REQUIRE(check_triangular(b).ok);
  CHECK(independence_certificate(b));
  // Plant an entry above a diagonal.
  b.entries[{static_cast<int>(b.rows.size()) - 1, 0}] = CoeffPoly(3);
  TriangularReport rep = check_triangular(b);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.violations.empty());
  CHECK_FALSE(independence_certificate(b));
  CHECK_THROWS_AS(invert_block(b), NotTriangular);
}

TEST_CASE("closed-form two-by-two inverse") {
  // Triangular fixture with unit diagonal q^{-sum(i k_i)}: rows = cols =
  // {t^{-1} t_1 < t^{-2} t_1^2}, D = [[q^{-1}, c], [0, q^{-2}]] inverts to
  // [[q, -q c q^2], [0, q^2]].
  BlockMatrix b;
  b.level = 0;
  b.rows = {mono({{0, -1}, {1, 1}}), mono({{0, -2}, {1, 2}})};
  b.cols = b.rows;
  CoeffPoly c = cp_q(1) * cp_z(2) - CoeffPoly(4);
  b.entries[{0, 0}] = cp_q(-1);
  b.entries[{0, 1}] = c;
  b.entries[{1, 1}] = cp_q(-2);
  REQUIRE(check_triangular(b).ok);
  BlockMatrix inv = invert_block(b);
  CHECK(*inv.entry(0, 0) == cp_q(1));
  CHECK(*inv.entry(1, 1) == cp_q(2));
  CHECK(*inv.entry(0, 1) == -(cp_q(3) * c));
  CHECK(inv.entry(1, 0) == nullptr);
  CHECK(is_identity(block_product(b, inv)));
  CHECK(is_identity(block_product(inv, b)));
}

TEST_CASE("empty block certifies") {
  BlockMatrix empty;
  CHECK(check_triangular(empty).ok);
  CHECK(independence_certificate(empty));
}

TEST_CASE("matrix suite at small bounds") {
  SuiteOptions opts;
  opts.index_max = 1;
  opts.exp_max = 1;
  SuiteResult r = run_suite("matrix", opts);
  for (const std::string& f : r.failures) MESSAGE(f);
  CHECK(r.failures.empty());
}
