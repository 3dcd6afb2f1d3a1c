#include "skein/block_matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "skein/convert.hpp"
#include "skein/order.hpp"

namespace skein {

namespace {

std::string describe(const LoopMonomial& m) {
  std::ostringstream os;
  if (m.empty()) return "1";
  bool first = true;
  for (const auto& [i, e] : m.exponents()) {
    if (!first) os << " ";
    first = false;
    os << "t";
    if (i != 0) os << "[" << i << "]";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly diagonal_value(const LoopMonomial& col) {
  int a = 0;
  for (const auto& [i, e] : col.exponents()) a += i * e;
  return lp_q(-a);
}

}  // namespace

int BlockMatrix::row_of(const LoopMonomial& m) const {
  auto it = std::find(rows.begin(), rows.end(), m);
  return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
}

int BlockMatrix::col_of(const LoopMonomial& m) const {
  auto it = std::find(cols.begin(), cols.end(), m);
  return it == cols.end() ? -1 : static_cast<int>(it - cols.begin());
}

BlockMatrix build_block(int level, int max_index, int max_abs_exp, bool canonical) {
  BlockMatrix b;
  b.level = level;
  b.canonical = canonical;
  b.cols = enumerate_level(level, max_index, max_abs_exp, canonical);

  // The canonical flag selects the column enumeration; entries are always the
  // literal reductions (exponent sorting merges monomials with distinct
  // traces, which breaks the diagonal).
  ReduceOptions literal;
  literal.canonical = false;
  std::vector<ModuleElement> columns;
  std::set<LoopMonomial> support(b.cols.begin(), b.cols.end());
  for (const LoopMonomial& col : b.cols) {
    auto [coords, trace] = reduce_to_basis(convert_monomial(col), literal);
    for (const auto& [m, c] : coords.terms()) support.insert(m);
    columns.push_back(std::move(coords));
  }

  b.rows.assign(support.begin(), support.end());
  std::sort(b.rows.begin(), b.rows.end(),
            [](const LoopMonomial& x, const LoopMonomial& y) {
              return order_compare(x, y) == std::strong_ordering::less;
            });
  for (int j = 0; j < static_cast<int>(b.cols.size()); ++j)
    for (const auto& [m, c] : columns[j].terms())
      b.entries[{b.row_of(m), j}] = c;
  return b;
}

TriangularReport check_triangular(const BlockMatrix& b) {
  TriangularReport report;
  auto complain = [&](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };

  for (const LoopMonomial& m : b.rows)
    if (m.level() != b.level)
      complain("row " + describe(m) + " has wrong level");

  for (int j = 0; j < static_cast<int>(b.cols.size()); ++j) {
    const LoopMonomial diag_mono = homologous(b.cols[j]);
    int diag_row = b.row_of(diag_mono);
    if (diag_row < 0) {
      complain("column " + describe(b.cols[j]) + " is missing its diagonal row");
      continue;
    }
    const CoeffPoly* diag = b.entry(diag_row, j);
    if (diag == nullptr) {
      complain("column " + describe(b.cols[j]) + " has a zero diagonal entry");
    } else {
      if (!diag->is_unit())
        complain("diagonal of column " + describe(b.cols[j]) + " is not a unit");
      if (*diag != to_coeff(diagonal_value(b.cols[j])))
        complain("diagonal of column " + describe(b.cols[j]) +
                 " differs from q^{-sum(i k_i)}");
    }
    for (const auto& [rc, c] : b.entries) {
      if (rc.second != j || c.is_zero()) continue;
      if (order_compare(b.rows[rc.first], diag_mono) == std::strong_ordering::greater)
        complain("entry (" + describe(b.rows[rc.first]) + ", " +
                 describe(b.cols[j]) + ") lies above the diagonal");
    }
  }
  return report;
}

BlockMatrix invert_block(const BlockMatrix& b) {
  TriangularReport rep = check_triangular(b);
  if (!rep.ok) throw NotTriangular("invert_block: block is not triangular");

  const int k = static_cast<int>(b.cols.size());
  // Paired square part: entry (i, j) = coefficient of hom(col_i) in column j.
  std::vector<int> diag_row(k);
  for (int i = 0; i < k; ++i) diag_row[i] = b.row_of(homologous(b.cols[i]));
  auto d = [&](int i, int j) -> CoeffPoly {
    const CoeffPoly* e = b.entry(diag_row[i], j);
    return e == nullptr ? CoeffPoly() : *e;
  };

  BlockMatrix inv;
  inv.level = b.level;
  inv.canonical = b.canonical;
  inv.rows = b.cols;
  inv.cols = b.cols;
  std::vector<std::vector<CoeffPoly>> x(k, std::vector<CoeffPoly>(k));
  for (int j = k - 1; j >= 0; --j) {
    x[j][j] = CoeffPoly(1).div_unit(d(j, j));
    for (int i = j - 1; i >= 0; --i) {
      CoeffPoly acc;
      for (int l = i + 1; l <= j; ++l) acc += d(i, l) * x[l][j];
      if (!acc.is_zero()) x[i][j] = -(CoeffPoly(1).div_unit(d(i, i)) * acc);
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (!x[i][j].is_zero()) inv.entries[{i, j}] = x[i][j];
  return inv;
}

BlockMatrix paired_square(const BlockMatrix& b) {
  BlockMatrix out;
  out.level = b.level;
  out.canonical = b.canonical;
  out.rows = b.cols;
  out.cols = b.cols;
  for (int i = 0; i < static_cast<int>(b.cols.size()); ++i) {
    int r = b.row_of(homologous(b.cols[i]));
    if (r < 0) continue;
    for (int j = 0; j < static_cast<int>(b.cols.size()); ++j) {
      const CoeffPoly* e = b.entry(r, j);
      if (e != nullptr) out.entries[{i, j}] = *e;
    }
  }
  return out;
}

BlockMatrix block_product(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.cols != b.rows) throw StrandMismatch("block_product: shape mismatch");
  BlockMatrix out;
  out.level = a.level;
  out.canonical = a.canonical;
  out.rows = a.rows;
  out.cols = b.cols;
  for (int i = 0; i < static_cast<int>(a.rows.size()); ++i) {
    for (int j = 0; j < static_cast<int>(b.cols.size()); ++j) {
      CoeffPoly acc;
      for (int l = 0; l < static_cast<int>(a.cols.size()); ++l) {
        const CoeffPoly* u = a.entry(i, l);
        const CoeffPoly* v = b.entry(l, j);
        if (u && v) acc += *u * *v;
      }
      if (!acc.is_zero()) out.entries[{i, j}] = acc;
    }
  }
  return out;
}

bool is_identity(const BlockMatrix& b) {
  if (b.rows != b.cols) return false;
  for (const auto& [rc, c] : b.entries) {
    if (rc.first == rc.second) {
      if (!c.is_one()) return false;
    } else if (!c.is_zero()) {
      return false;
    }
  }
  for (int i = 0; i < static_cast<int>(b.rows.size()); ++i) {
    const CoeffPoly* e = b.entry(i, i);
    if (e == nullptr || !e->is_one()) return false;
  }
  return true;
}

bool independence_certificate(const BlockMatrix& b) {
  return check_triangular(b).ok;
}

}  // namespace skein
