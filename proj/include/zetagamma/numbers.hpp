#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zg {

using Int = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Int>;

inline Rational make_rational(const Int& num, const Int& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Int to_int(std::uint64_t v) {
  Int z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

inline bool fits_u64(const Int& z) {
  return sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& z) {
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, z.get_mpz_t());
  return v;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

/// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Number of decimal digits of |z| (1 for zero).
inline std::size_t decimal_length(const Int& z) {
  Int a = abs(z);
  return a == 0 ? 1 : a.get_str().size();
}

Int int_pow(const Int& base, unsigned long exp);
Int vector_content(const IntVector& v);

/// Divides out the content and flips the sign so the first nonzero entry
/// is positive. The zero vector is returned unchanged.
IntVector make_primitive(IntVector v);

/// Parses "p" or "p/q" with optional sign; throws ParseError.
Rational parse_rational(const std::string& text);
Int parse_int(const std::string& text);

}  // namespace zg
