#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skein/module_element.hpp"
#include "skein/tails.hpp"

namespace skein {

// Finite truncation of one level block of the change-of-basis matrix between
// the primed and unprimed monomial families. Column j holds the reduction of
// the j-th primed monomial; entry (i, j) is the coefficient of row monomial i.
// Rows and columns are sorted ascending under the ordering; the rows are grown
// to the full support of the computed columns (which may exceed the a-priori
// enumeration bounds).
struct BlockMatrix {
  int level = 0;
  bool canonical = true;
  std::vector<LoopMonomial> rows;  // basis monomials
  std::vector<LoopMonomial> cols;  // primed monomials (same representation)
  std::map<std::pair<int, int>, CoeffPoly> entries;

  const CoeffPoly* entry(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? nullptr : &it->second;
  }
  int row_of(const LoopMonomial& m) const;
  int col_of(const LoopMonomial& m) const;
};

BlockMatrix build_block(int level, int max_index, int max_abs_exp, bool canonical);

struct TriangularReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Verifies: no entry lies strictly above its column's diagonal (the row equal
// to the homologous monomial of the column), every diagonal entry is a unit
// and equals q^{-sum(i * k_i)}, and every row monomial has the block's level.
TriangularReport check_triangular(const BlockMatrix& b);

// Exact inverse of the paired square part (rows matched to columns by the
// homologous pairing) by back-substitution; entries stay in Z[q^{±1}, z^{±1}]
// because the diagonal is a unit. Returns a block with rows and cols swapped.
BlockMatrix invert_block(const BlockMatrix& b);

// Restriction of the block to the rows matched with its columns by the
// homologous pairing.
BlockMatrix paired_square(const BlockMatrix& b);

// Matrix product (a.cols must equal b.rows).
BlockMatrix block_product(const BlockMatrix& a, const BlockMatrix& b);

bool is_identity(const BlockMatrix& b);

// A triangular block with unit diagonal certifies linear independence of the
// truncated family.
bool independence_certificate(const BlockMatrix& b);

}  // namespace skein
