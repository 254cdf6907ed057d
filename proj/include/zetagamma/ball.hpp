#pragma once

// Midpoint-radius ("ball") arithmetic on top of MPFR. Midpoints are rounded
// to nearest at the working precision; radii are 64-bit MPFR values that are
// always rounded upward, so every ball encloses the exact result of the
// operation applied to any points of the input balls.

#include <cstdint>
#include <string>
#include <utility>

#include <mpfr.h>

#include "zetagamma/numbers.hpp"

namespace zg::num {

/// Owning wrapper around mpfr_t.
class Float {
public:
  explicit Float(mpfr_prec_t prec = 64);
  Float(const Float& other);
  Float(Float&& other) noexcept;
  Float& operator=(const Float& other);
  Float& operator=(Float&& other) noexcept;
  ~Float();

  [[nodiscard]] mpfr_ptr get() noexcept { return value_; }
  [[nodiscard]] mpfr_srcptr get() const noexcept { return value_; }
  [[nodiscard]] mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  [[nodiscard]] bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  [[nodiscard]] int sign() const noexcept { return mpfr_sgn(value_); }
  [[nodiscard]] double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }

private:
  mpfr_t value_;
};

inline constexpr mpfr_prec_t kMagPrecision = 64;

/// Bits needed for `digits` decimal digits plus `guard` extra bits.
mpfr_prec_t bits_for_digits(long digits, long guard = 32);

/// Upper bound of 10^(-digits) as a radius-precision value.
Float ten_to_minus(long digits);

class RealBall {
public:
  explicit RealBall(mpfr_prec_t prec = 64);

  static RealBall from_int(const Int& z, mpfr_prec_t prec);
  static RealBall from_rational(const Rational& q, mpfr_prec_t prec);
  static RealBall from_double(double d, mpfr_prec_t prec);

  [[nodiscard]] const Float& mid() const noexcept { return mid_; }
  [[nodiscard]] const Float& rad() const noexcept { return rad_; }
  [[nodiscard]] Float& mid() noexcept { return mid_; }
  [[nodiscard]] Float& rad() noexcept { return rad_; }
  [[nodiscard]] mpfr_prec_t precision() const noexcept { return mid_.precision(); }

  [[nodiscard]] bool is_exact() const noexcept { return rad_.is_zero(); }
  [[nodiscard]] bool contains_zero() const;
  /// Upper bound of |x| over the ball.
  [[nodiscard]] Float abs_upper() const;
  /// Lower bound of |x| over the ball (zero if the ball contains zero).
  [[nodiscard]] Float abs_lower() const;

  /// Certified comparisons; false when the ball straddles `q`.
  [[nodiscard]] bool certainly_less(const Rational& q) const;
  [[nodiscard]] bool certainly_greater(const Rational& q) const;

  /// Adds |ulp| slack to the radius when `ternary` reports inexact rounding.
  void add_rounding_error(int ternary);
  void add_radius(const Float& r);

private:
  Float mid_;
  Float rad_;
};

RealBall operator+(const RealBall& a, const RealBall& b);
RealBall operator-(const RealBall& a, const RealBall& b);
RealBall operator-(const RealBall& a);
RealBall operator*(const RealBall& a, const RealBall& b);
RealBall operator/(const RealBall& a, const RealBall& b);

RealBall exp(const RealBall& x);
RealBall cos(const RealBall& x);
RealBall sin(const RealBall& x);
/// Square root of a ball lying strictly inside (0, inf).
RealBall sqrt(const RealBall& x);
RealBall log_of(const Int& n, mpfr_prec_t prec);
RealBall const_pi(mpfr_prec_t prec);
RealBall const_e(mpfr_prec_t prec);

/// Nearest integer to the midpoint.
Int round_mid(const RealBall& x);

class ComplexBall {
public:
  explicit ComplexBall(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
  ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit ComplexBall(RealBall re);

  [[nodiscard]] const RealBall& re() const noexcept { return re_; }
  [[nodiscard]] const RealBall& im() const noexcept { return im_; }
  [[nodiscard]] RealBall& re() noexcept { return re_; }
  [[nodiscard]] RealBall& im() noexcept { return im_; }
  [[nodiscard]] mpfr_prec_t precision() const noexcept { return re_.precision(); }

  /// True when the imaginary part is exactly zero.
  [[nodiscard]] bool is_real() const noexcept { return im_.mid().is_zero() && im_.rad().is_zero(); }
  [[nodiscard]] bool is_exact() const noexcept { return re_.is_exact() && im_.is_exact(); }
  /// Upper bound on the distance from the midpoint to any enclosed point.
  [[nodiscard]] Float radius() const;
  [[nodiscard]] Float abs_upper() const;
  [[nodiscard]] Float abs_lower() const;

private:
  RealBall re_;
  RealBall im_;
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const RealBall& b);
ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
ComplexBall exp(const ComplexBall& z);

/// `digits` significant decimal digits of the midpoint, e.g. "1.58496".
std::string format_decimal(const Float& x, long digits);
std::string format_decimal(const ComplexBall& z, long digits);
/// Short scientific rendering of a radius, e.g. "3.2e-41".
std::string format_magnitude(const Float& r);

/// Compares an upper-bound magnitude against 10^(-digits).
bool below_ten_to_minus(const Float& value, long digits);

}  // namespace zg::num
