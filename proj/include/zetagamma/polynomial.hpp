#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetagamma/ball.hpp"
#include "zetagamma/numbers.hpp"

namespace zg {

/// Dense univariate polynomial with integer coefficients, lowest degree
/// first. The zero polynomial has no coefficients.
struct IntPoly {
  IntVector coeffs;

  IntPoly() = default;
  explicit IntPoly(IntVector c);

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs.empty(); }
  [[nodiscard]] const Int& leading() const { return coeffs.back(); }
  [[nodiscard]] Int content() const { return vector_content(coeffs); }
  [[nodiscard]] Int height() const;

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] num::ComplexBall operator()(const num::ComplexBall& x) const;
  [[nodiscard]] IntPoly derivative() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

/// Content removed and leading coefficient made positive.
IntPoly primitive_part(const IntPoly& p);

/// Rendering in the textual grammar accepted by parse_poly, e.g. "x^2-2".
std::string to_string(const IntPoly& p);

/// Parses terms like "3x^2", "3*x^2", "-x", "7" joined by '+'/'-' in the
/// variable x, with no whitespace. Throws ParseError.
IntPoly parse_poly(const std::string& text);

/// True when b divides a in Q[x] (b nonzero).
bool divides(const IntPoly& b, const IntPoly& a);
bool is_squarefree(const IntPoly& p);

/// Number of distinct real roots in the closed interval [lo, hi]; throws
/// InvalidInput when an endpoint is a root.
std::size_t count_real_roots(const IntPoly& p, const Rational& lo, const Rational& hi);

/// Certified enclosures of all complex roots of a squarefree polynomial:
/// each ComplexBall contains exactly one root and the balls are pairwise
/// disjoint. Precision starts at `prec` bits and is raised as needed.
std::vector<num::ComplexBall> isolate_roots(const IntPoly& p, mpfr_prec_t prec = 128);

/// Newton-refines an enclosure of a root to `prec` bits. The returned ball
/// holds a root within radius deg * |p(z)| / |p'(z)|.
num::ComplexBall refine_root(const IntPoly& p, const num::ComplexBall& start, mpfr_prec_t prec);

inline constexpr int kIrreducibilityDegreeCap = 8;

/// Exact irreducibility over Q for degree <= 8 via certified root subsets
/// (any factor's coefficients are integers, recovered from enclosures and
/// confirmed by exact division). Throws InvalidInput above the cap.
bool is_irreducible(const IntPoly& p);

/// Minimal polynomial over Q of base^exponent (real positive root), with
/// base >= 1 and exponent rational.
IntPoly power_minimal_polynomial(std::uint64_t base, const Rational& exponent);

}  // namespace zg
