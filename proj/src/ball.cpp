#include "zetagamma/ball.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "zetagamma/errors.hpp"

namespace zg::num {

Float::Float(mpfr_prec_t prec) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

Float::Float(const Float& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Float::Float(Float&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Float& Float::operator=(const Float& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Float& Float::operator=(Float&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Float::~Float() { mpfr_clear(value_); }

mpfr_prec_t bits_for_digits(long digits, long guard) {
  return static_cast<mpfr_prec_t>(digits * 3322L / 1000L + 1 + guard);
}

namespace {

Float mag_abs(const Float& x) {
  Float r(kMagPrecision);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

Float mag_add(const Float& a, const Float& b) {
  Float r(kMagPrecision);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Float mag_mul(const Float& a, const Float& b) {
  Float r(kMagPrecision);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

// Upper bound on the rounding error of a midpoint that was rounded to
// nearest with the given ternary result.
Float rounding_error(const Float& mid, int ternary) {
  Float r(kMagPrecision);
  if (ternary == 0) return r;
  if (mid.is_zero()) {
    mpfr_set_ui_2exp(r.get(), 1, mpfr_get_emin(), MPFR_RNDU);
    return r;
  }
  mpfr_set_ui_2exp(r.get(), 1, mpfr_get_exp(mid.get()) - mid.precision(), MPFR_RNDU);
  return r;
}

mpfr_prec_t join(const RealBall& a, const RealBall& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Float ten_to_minus(long digits) {
  Float r(kMagPrecision);
  mpfr_set_ui(r.get(), 10, MPFR_RNDU);
  mpfr_pow_si(r.get(), r.get(), -digits, MPFR_RNDU);
  return r;
}

bool below_ten_to_minus(const Float& value, long digits) {
  Float t(kMagPrecision);
  mpfr_set_ui(t.get(), 10, MPFR_RNDD);
  mpfr_pow_si(t.get(), t.get(), -digits, MPFR_RNDD);
  return mpfr_less_p(value.get(), t.get()) != 0;
}

RealBall::RealBall(mpfr_prec_t prec) : mid_(prec), rad_(kMagPrecision) {}

RealBall RealBall::from_int(const Int& z, mpfr_prec_t prec) {
  RealBall b(prec);
  b.add_rounding_error(mpfr_set_z(b.mid_.get(), z.get_mpz_t(), MPFR_RNDN));
  return b;
}

RealBall RealBall::from_rational(const Rational& q, mpfr_prec_t prec) {
  RealBall b(prec);
  b.add_rounding_error(mpfr_set_q(b.mid_.get(), q.get_mpq_t(), MPFR_RNDN));
  return b;
}

RealBall RealBall::from_double(double d, mpfr_prec_t prec) {
  RealBall b(prec);
  b.add_rounding_error(mpfr_set_d(b.mid_.get(), d, MPFR_RNDN));
  return b;
}

void RealBall::add_rounding_error(int ternary) {
  if (ternary != 0) rad_ = mag_add(rad_, rounding_error(mid_, ternary));
}

void RealBall::add_radius(const Float& r) { rad_ = mag_add(rad_, mag_abs(r)); }

bool RealBall::contains_zero() const {
  return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0;
}

Float RealBall::abs_upper() const { return mag_add(mag_abs(mid_), rad_); }

Float RealBall::abs_lower() const {
  Float r(kMagPrecision);
  mpfr_abs(r.get(), mid_.get(), MPFR_RNDD);
  mpfr_sub(r.get(), r.get(), rad_.get(), MPFR_RNDD);
  if (r.sign() < 0) mpfr_set_zero(r.get(), 1);
  return r;
}

bool RealBall::certainly_less(const Rational& q) const {
  Float hi(precision() + kMagPrecision);
  mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return mpfr_cmp_q(hi.get(), q.get_mpq_t()) < 0;
}

bool RealBall::certainly_greater(const Rational& q) const {
  Float lo(precision() + kMagPrecision);
  mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return mpfr_cmp_q(lo.get(), q.get_mpq_t()) > 0;
}

RealBall operator+(const RealBall& a, const RealBall& b) {
  RealBall r(join(a, b));
  int t = mpfr_add(r.mid().get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  r.rad() = mag_add(a.rad(), b.rad());
  r.add_rounding_error(t);
  return r;
}

RealBall operator-(const RealBall& a, const RealBall& b) {
  RealBall r(join(a, b));
  int t = mpfr_sub(r.mid().get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  r.rad() = mag_add(a.rad(), b.rad());
  r.add_rounding_error(t);
  return r;
}

RealBall operator-(const RealBall& a) {
  RealBall r(a);
  mpfr_neg(r.mid().get(), a.mid().get(), MPFR_RNDN);
  return r;
}

RealBall operator*(const RealBall& a, const RealBall& b) {
  RealBall r(join(a, b));
  int t = mpfr_mul(r.mid().get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  Float rad = mag_add(mag_mul(mag_abs(a.mid()), b.rad()), mag_mul(mag_abs(b.mid()), a.rad()));
  r.rad() = mag_add(rad, mag_mul(a.rad(), b.rad()));
  r.add_rounding_error(t);
  return r;
}

RealBall operator/(const RealBall& a, const RealBall& b) {
  Float lower = b.abs_lower();
  if (lower.is_zero()) fail(ErrorKind::ImpreciseInput, "division by a ball that contains zero");
  RealBall r(join(a, b));
  int t = mpfr_div(r.mid().get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  Float err = rounding_error(r.mid(), t);
  Float quotient = mag_add(mag_abs(r.mid()), err);
  Float num = mag_add(a.rad(), mag_mul(quotient, b.rad()));
  Float rad(kMagPrecision);
  mpfr_div(rad.get(), num.get(), lower.get(), MPFR_RNDU);
  r.rad() = mag_add(rad, err);
  return r;
}

RealBall exp(const RealBall& x) {
  RealBall r(x.precision());
  int t = mpfr_exp(r.mid().get(), x.mid().get(), MPFR_RNDN);
  Float err = rounding_error(r.mid(), t);
  Float growth(kMagPrecision);
  mpfr_expm1(growth.get(), x.rad().get(), MPFR_RNDU);
  r.rad() = mag_add(mag_mul(mag_add(mag_abs(r.mid()), err), growth), err);
  return r;
}

RealBall cos(const RealBall& x) {
  RealBall r(x.precision());
  int t = mpfr_cos(r.mid().get(), x.mid().get(), MPFR_RNDN);
  r.rad() = x.rad();
  r.add_rounding_error(t);
  return r;
}

RealBall sin(const RealBall& x) {
  RealBall r(x.precision());
  int t = mpfr_sin(r.mid().get(), x.mid().get(), MPFR_RNDN);
  r.rad() = x.rad();
  r.add_rounding_error(t);
  return r;
}

RealBall sqrt(const RealBall& x) {
  Float lower = x.abs_lower();
  if (x.mid().sign() <= 0 || lower.is_zero())
    fail(ErrorKind::ImpreciseInput, "square root of a ball that is not strictly positive");
  RealBall r(x.precision());
  int t = mpfr_sqrt(r.mid().get(), x.mid().get(), MPFR_RNDN);
  Float root_lower(kMagPrecision);
  mpfr_sqrt(root_lower.get(), lower.get(), MPFR_RNDD);
  Float rad(kMagPrecision);
  mpfr_div(rad.get(), x.rad().get(), root_lower.get(), MPFR_RNDU);
  r.rad() = rad;
  r.add_rounding_error(t);
  return r;
}

RealBall log_of(const Int& n, mpfr_prec_t prec) {
  if (n <= 0) fail(ErrorKind::InvalidInput, "logarithm of a non-positive integer");
  RealBall r(prec);
  if (n == 1) return r;
  Float exact(std::max<mpfr_prec_t>(prec, static_cast<mpfr_prec_t>(mpz_sizeinbase(n.get_mpz_t(), 2)) + 1));
  mpfr_set_z(exact.get(), n.get_mpz_t(), MPFR_RNDN);
  r.add_rounding_error(mpfr_log(r.mid().get(), exact.get(), MPFR_RNDN));
  return r;
}

RealBall const_pi(mpfr_prec_t prec) {
  RealBall r(prec);
  r.add_rounding_error(mpfr_const_pi(r.mid().get(), MPFR_RNDN));
  return r;
}

RealBall const_e(mpfr_prec_t prec) {
  RealBall one(prec);
  mpfr_set_ui(one.mid().get(), 1, MPFR_RNDN);
  return exp(one);
}

Int round_mid(const RealBall& x) {
  Int z;
  mpfr_get_z(z.get_mpz_t(), x.mid().get(), MPFR_RNDN);
  return z;
}

ComplexBall::ComplexBall(RealBall re) : re_(std::move(re)), im_(re_.precision()) {}

Float ComplexBall::radius() const { return mag_add(re_.rad(), im_.rad()); }

Float ComplexBall::abs_upper() const {
  Float a = re_.abs_upper();
  Float b = im_.abs_upper();
  Float r(kMagPrecision);
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Float ComplexBall::abs_lower() const {
  Float a = re_.abs_lower();
  Float b = im_.abs_lower();
  Float r(kMagPrecision);
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDD);
  return r;
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  return {a.re() + b.re(), a.im() + b.im()};
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return {a.re() - b.re(), a.im() - b.im()};
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  if (a.is_real() && b.is_real()) return ComplexBall(a.re() * b.re());
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}

ComplexBall operator*(const ComplexBall& a, const RealBall& b) {
  if (a.is_real()) return ComplexBall(a.re() * b);
  return {a.re() * b, a.im() * b};
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  if (b.is_real()) {
    if (a.is_real()) return ComplexBall(a.re() / b.re());
    return {a.re() / b.re(), a.im() / b.re()};
  }
  RealBall den = b.re() * b.re() + b.im() * b.im();
  return {(a.re() * b.re() + a.im() * b.im()) / den, (a.im() * b.re() - a.re() * b.im()) / den};
}

ComplexBall exp(const ComplexBall& z) {
  RealBall modulus = exp(z.re());
  if (z.is_real()) return ComplexBall(modulus);
  return {modulus * cos(z.im()), modulus * sin(z.im())};
}

std::string format_decimal(const Float& x, long digits) {
  if (x.is_zero()) return "0";
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(std::max(1L, digits)), x.get(), MPFR_RNDN);
  std::string s(raw);
  mpfr_free_str(raw);
  bool negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);
  auto len = static_cast<mpfr_exp_t>(s.size());
  std::string out;
  if (exponent >= len) {
    out = s + std::string(static_cast<std::size_t>(exponent - len), '0');
  } else if (exponent > 0) {
    out = s.substr(0, static_cast<std::size_t>(exponent)) + "." + s.substr(static_cast<std::size_t>(exponent));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-exponent), '0') + s;
  }
  return negative ? "-" + out : out;
}

std::string format_decimal(const ComplexBall& z, long digits) {
  std::string re = format_decimal(z.re().mid(), digits);
  if (z.im().mid().is_zero()) return re;
  std::string im = format_decimal(z.im().mid(), digits);
  if (im[0] == '-') return re + " - " + im.substr(1) + "i";
  return re + " + " + im + "i";
}

std::string format_magnitude(const Float& r) {
  if (r.is_zero()) return "0";
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.2RUe", r.get());
  std::string s(raw);
  mpfr_free_str(raw);
  return s;
}

}  // namespace zg::num
