#include "zetagamma/numbers.hpp"

#include <cctype>

#include "zetagamma/errors.hpp"

namespace zg {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidTruncation: return "invalid-truncation";
    case ErrorKind::TruncationMismatch: return "truncation-mismatch";
    case ErrorKind::RelationArity: return "relation-arity";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::PrecisionExceeded: return "precision-exceeded";
    case ErrorKind::ImpreciseInput: return "imprecise-input";
    case ErrorKind::InvalidBasis: return "invalid-basis";
    case ErrorKind::RejectedQuery: return "rejected-query";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int vector_content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVector make_primitive(IntVector v) {
  Int g = vector_content(v);
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

Int parse_int(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) fail(ErrorKind::ParseError, "expected an integer, got '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      fail(ErrorKind::ParseError, "expected an integer, got '" + text + "'");
  return Int(text[0] == '+' ? text.substr(1) : text, 10);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    fail(ErrorKind::ParseError, "denominator must be unsigned in '" + text + "'");
  Int den = parse_int(den_text);
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  return make_rational(num, den);
}

}  // namespace zg
