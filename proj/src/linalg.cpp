#include "zetagamma/linalg.hpp"

#include <utility>

namespace zg {
namespace {

void strip_content(IntVector& row) {
  Int g = vector_content(row);
  if (g > 1)
    for (auto& x : row) x /= g;
}

struct Echelon {
  IntMatrix rows;                    // reduced rows, one per pivot
  std::vector<std::size_t> pivots;   // pivot column of each row
};

// Fraction-free Gauss-Jordan: after elimination every pivot column is zero
// outside its pivot row.
Echelon eliminate(IntMatrix m, std::size_t cols) {
  Echelon e;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t sel = m.size();
    for (std::size_t r = rank; r < m.size(); ++r) {
      if (m[r][c] != 0) {
        sel = r;
        break;
      }
    }
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    if (m[rank][c] < 0)
      for (auto& x : m[rank]) x = -x;
    strip_content(m[rank]);
    const IntVector& piv = m[rank];
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Int factor = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = piv[c] * m[r][j] - factor * piv[j];
      strip_content(m[r]);
    }
    e.pivots.push_back(c);
    ++rank;
  }
  m.resize(rank);
  e.rows = std::move(m);
  return e;
}

}  // namespace

std::vector<IntVector> integer_nullspace(const IntMatrix& rows, std::size_t cols) {
  Echelon e = eliminate(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // x_f = L, x_{pivot_r} = -L * row_r[f] / row_r[pivot_r], where L is the
    // lcm of the pivot entries.
    Int l = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) l = lcm(l, e.rows[r][e.pivots[r]]);
    IntVector v(cols, Int(0));
    v[f] = l;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      const Int& p = e.rows[r][e.pivots[r]];
      v[e.pivots[r]] = -(l / p) * e.rows[r][f];
    }
    basis.push_back(make_primitive(std::move(v)));
  }
  return basis;
}

std::vector<IntVector> rational_nullspace(const RationalMatrix& rows, std::size_t cols) {
  IntMatrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    Int den = 1;
    for (const auto& q : row) den = lcm(den, q.get_den());
    IntVector ints(cols, Int(0));
    for (std::size_t j = 0; j < cols && j < row.size(); ++j)
      ints[j] = row[j].get_num() * (den / row[j].get_den());
    m.push_back(std::move(ints));
  }
  return integer_nullspace(m, cols);
}

std::size_t integer_rank(const IntMatrix& rows, std::size_t cols) {
  return eliminate(rows, cols).rows.size();
}

}  // namespace zg
