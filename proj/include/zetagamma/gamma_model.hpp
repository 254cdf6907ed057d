#pragma once

// Exact representation of the exponent gamma in n^gamma.
//
// Text grammar (bit-exact; no whitespace):
//   rat:p/q                 rational, reduced on parse ("rat:p" also accepted)
//   alg:<poly>@<box>        root of an irreducible integer polynomial of
//                           degree 2..8; <box> is "[a,b]" (real interval) or
//                           "[a,b]x[c,d]" (re in [a,b], im in [c,d]) with
//                           rational corners, containing exactly one root
//   logratio:a/b            log a / log b with naturals a, b >= 2
//   const:pi | const:e
//   num:<decimal>~<digits>  numeric literal known to <digits> significant digits

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "zetagamma/ball.hpp"
#include "zetagamma/numbers.hpp"
#include "zetagamma/polynomial.hpp"

namespace zg {

struct RootBox {
  Rational re_lo, re_hi, im_lo, im_hi;

  [[nodiscard]] bool is_real_interval() const { return im_lo == 0 && im_hi == 0; }
  friend bool operator==(const RootBox&, const RootBox&) = default;
};

struct RationalGamma {
  Rational value;
  friend bool operator==(const RationalGamma&, const RationalGamma&) = default;
};

/// Construct through make_algebraic, which checks irreducibility and that
/// the box isolates exactly one root.
struct AlgebraicGamma {
  IntPoly min_poly;
  RootBox box;
  friend bool operator==(const AlgebraicGamma&, const AlgebraicGamma&) = default;
};

struct LogRatioGamma {
  std::uint64_t a = 2;
  std::uint64_t b = 2;
  friend bool operator==(const LogRatioGamma&, const LogRatioGamma&) = default;
};

enum class Constant { Pi, E };

struct NamedGamma {
  Constant constant = Constant::Pi;
  friend bool operator==(const NamedGamma&, const NamedGamma&) = default;
};

/// Classification-opaque numeric value.
struct NumericGamma {
  std::string decimal;
  unsigned digits = 1;
  friend bool operator==(const NumericGamma&, const NumericGamma&) = default;
};

using Gamma = std::variant<RationalGamma, AlgebraicGamma, LogRatioGamma, NamedGamma, NumericGamma>;

Gamma make_rational_gamma(const Rational& value);
Gamma make_algebraic(const IntPoly& poly, const RootBox& box);
Gamma make_log_ratio(std::uint64_t a, std::uint64_t b);
Gamma make_numeric(const std::string& decimal, unsigned digits);

Gamma parse_gamma(const std::string& text);
std::string to_string(const Gamma& g);

/// input == scale * canonical, and both have the same exceptional set.
struct CanonicalGamma {
  Gamma canonical;
  Rational scale{1};
  friend bool operator==(const CanonicalGamma&, const CanonicalGamma&) = default;
};

CanonicalGamma canonicalize(const Gamma& g);
/// q * g for nonzero rational q.
CanonicalGamma scaled(const CanonicalGamma& g, const Rational& q);

[[nodiscard]] bool is_rational(const CanonicalGamma& g);
[[nodiscard]] bool is_algebraic_irrational(const CanonicalGamma& g);
/// LogRatio (after canonicalization) and named constants: provably
/// transcendental.
[[nodiscard]] bool is_known_transcendental(const CanonicalGamma& g);

/// gamma = u + v * sqrt(d), d squarefree and != 0, 1; sqrt(d) = i sqrt(|d|)
/// for d < 0. Present only for quadratic algebraic gammas.
struct QuadraticForm {
  Int d;
  Rational u, v;
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

std::optional<QuadraticForm> quadratic_form(const AlgebraicGamma& g);

/// Enclosure of gamma at a working precision of `prec` bits.
num::ComplexBall enclose(const Gamma& g, mpfr_prec_t prec);
num::ComplexBall enclose(const CanonicalGamma& g, mpfr_prec_t prec);

/// gamma to `digits` significant digits: the returned ball's radius is at
/// most 10^-digits times its magnitude. NumericLiteral inputs fail with
/// PrecisionExceeded beyond their stated digits.
num::ComplexBall evaluate(const Gamma& g, long digits);

}  // namespace zg
