#pragma once

#include <cstddef>
#include <vector>

#include "zetagamma/numbers.hpp"

namespace zg {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<IntVector>;

/// Exact right kernel {x : A x = 0} of a rational matrix with `cols`
/// columns. Rows are cleared of denominators and eliminated fraction-free
/// (Gauss-Jordan over Z with content removal). One basis vector is returned
/// per non-pivot column, scaled to a primitive integer vector whose first
/// nonzero entry is positive.
std::vector<IntVector> rational_nullspace(const RationalMatrix& rows, std::size_t cols);
std::vector<IntVector> integer_nullspace(const IntMatrix& rows, std::size_t cols);

std::size_t integer_rank(const IntMatrix& rows, std::size_t cols);

}  // namespace zg
