#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetagamma/ball.hpp"
#include "zetagamma/gamma_model.hpp"
#include "zetagamma/numbers.hpp"
#include "zetagamma/polynomial.hpp"
#include "zetagamma/verdict_engine.hpp"

namespace zg {

using IntBasis = std::vector<IntVector>;

/// Integral LLL (exact Gram-Schmidt data kept as integers). Rows of `basis`
/// must be linearly independent; otherwise InvalidBasis.
IntBasis lll_reduce(const IntBasis& basis, const Rational& delta = Rational(99, 100));

struct RelationQuery {
  unsigned degree_cap = 1;
  Int height_cap{1};
  long precision = 40;  // decimal digits
};

/// Smallest precision the query policy admits: 10 + d * len(H).
long required_precision(const RelationQuery& q);

struct RelationResult {
  std::optional<IntPoly> polynomial;
  num::Float residual{num::kMagPrecision};  // upper bound of |p(x)|
  RelationQuery searched;
  bool escalated = false;
  [[nodiscard]] bool found() const { return polynomial.has_value(); }
};

/// Integer vector c with max |c_i| <= height and |sum c_i x_i| < 10^(-digits/2),
/// searched by reducing e_i + 10^digits * x_i; the shortest such c, or none.
struct LinearRelation {
  IntVector coefficients;
  num::Float residual{num::kMagPrecision};
};
std::optional<LinearRelation> find_linear_relation(const std::vector<num::ComplexBall>& xs, const Int& height,
                                                   long digits);

/// Minimal-degree candidate polynomial for x (primitive, positive leading
/// coefficient). A candidate is heuristic evidence, never a proof.
RelationResult find_integer_relation(const num::ComplexBall& x, const RelationQuery& q);

/// Same search with x produced on demand at a given number of digits. The
/// precision is doubled once when the best residual lands near the threshold.
using Evaluator = std::function<num::ComplexBall(long digits)>;
RelationResult find_integer_relation(const Evaluator& x, const RelationQuery& q);

/// n^gamma = exp(gamma log n), principal branch, relative radius at most
/// 10^-digits (numeric literals carry their own stated accuracy).
num::ComplexBall eval_power(std::uint64_t n, const Gamma& g, long digits);

enum class ProbeKind { AgreesAlgebraic, AgreesNoRelation, Mismatch };
std::string to_string(ProbeKind k);

struct ProbeOutcome {
  ProbeKind kind = ProbeKind::AgreesNoRelation;
  Verdict verdict;
  RelationResult relation;
  std::string details;
};

/// Cross-checks classify_point (no assumptions) against the relation search.
ProbeOutcome probe_point(std::uint64_t n, const Gamma& g, const RelationQuery& q);

}  // namespace zg
