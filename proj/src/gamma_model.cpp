#include "zetagamma/gamma_model.hpp"

#include <cctype>

#include "zetagamma/errors.hpp"
#include "zetagamma/exponent_lattice.hpp"

namespace zg {
namespace {

constexpr mpfr_prec_t kMaxSelectionBits = 4096;

enum class Side { In, Out, Unsure };

Side interval_side(const num::RealBall& x, const Rational& lo, const Rational& hi) {
  if (x.is_exact()) {
    bool in = mpfr_cmp_q(x.mid().get(), lo.get_mpq_t()) >= 0 && mpfr_cmp_q(x.mid().get(), hi.get_mpq_t()) <= 0;
    return in ? Side::In : Side::Out;
  }
  if (x.certainly_greater(lo) && x.certainly_less(hi)) return Side::In;
  if (x.certainly_less(lo) || x.certainly_greater(hi)) return Side::Out;
  return Side::Unsure;
}

Side box_side(const num::ComplexBall& z, const RootBox& box) {
  Side re = interval_side(z.re(), box.re_lo, box.re_hi);
  Side im = interval_side(z.im(), box.im_lo, box.im_hi);
  if (re == Side::Out || im == Side::Out) return Side::Out;
  if (re == Side::In && im == Side::In) return Side::In;
  return Side::Unsure;
}

// Weaker test used for real-interval boxes: could the ball meet the region?
bool may_touch(const num::ComplexBall& z, const RootBox& box) {
  return interval_side(z.re(), box.re_lo, box.re_hi) != Side::Out &&
         interval_side(z.im(), box.im_lo, box.im_hi) != Side::Out;
}

bool contained_in(const num::RealBall& inner, const num::RealBall& outer) {
  mpfr_prec_t p = std::max(inner.precision(), outer.precision()) + 64;
  num::Float a(p), b(p);
  mpfr_sub(a.get(), inner.mid().get(), inner.rad().get(), MPFR_RNDD);
  mpfr_sub(b.get(), outer.mid().get(), outer.rad().get(), MPFR_RNDU);
  if (mpfr_less_p(a.get(), b.get())) return false;
  mpfr_add(a.get(), inner.mid().get(), inner.rad().get(), MPFR_RNDU);
  mpfr_add(b.get(), outer.mid().get(), outer.rad().get(), MPFR_RNDD);
  return !mpfr_greater_p(a.get(), b.get());
}

bool contained_in(const num::ComplexBall& inner, const num::ComplexBall& outer) {
  return contained_in(inner.re(), outer.re()) && contained_in(inner.im(), outer.im());
}

// Both roots of a quadratic, "+" root first.
std::pair<num::ComplexBall, num::ComplexBall> quadratic_roots(const IntPoly& p, mpfr_prec_t prec) {
  const Int& a = p.coeffs[2];
  const Int& b = p.coeffs[1];
  const Int& c = p.coeffs[0];
  Int disc = b * b - 4 * a * c;
  num::RealBall two_a = num::RealBall::from_int(2 * a, prec);
  if (disc > 0) {
    num::RealBall root = num::sqrt(num::RealBall::from_int(disc, prec));
    num::RealBall minus_b = num::RealBall::from_int(-b, prec);
    return {num::ComplexBall((minus_b + root) / two_a), num::ComplexBall((minus_b - root) / two_a)};
  }
  num::RealBall re = num::RealBall::from_rational(make_rational(-b, 2 * a), prec);
  num::RealBall im = num::sqrt(num::RealBall::from_int(-disc, prec)) / two_a;
  return {num::ComplexBall(re, im), num::ComplexBall(re, -im)};
}

// +1 or -1: which quadratic root the box selects.
int quadratic_selection(const IntPoly& p, const RootBox& box) {
  for (mpfr_prec_t prec = 128; prec <= kMaxSelectionBits; prec *= 2) {
    auto [plus, minus] = quadratic_roots(p, prec);
    Side sp = box_side(plus, box);
    Side sm = box_side(minus, box);
    if (sp == Side::Unsure || sm == Side::Unsure) continue;
    if (sp == Side::In && sm == Side::Out) return 1;
    if (sp == Side::Out && sm == Side::In) return -1;
    fail(ErrorKind::InvalidInput, "box must contain exactly one root of " + to_string(p));
  }
  fail(ErrorKind::InvalidInput, "a root of " + to_string(p) + " lies on the box boundary");
}

// Isolating ball of the unique root in the box (degree >= 3).
num::ComplexBall isolate_in_box(const IntPoly& p, const RootBox& box) {
  if (box.is_real_interval() && count_real_roots(p, box.re_lo, box.re_hi) != 1)
    fail(ErrorKind::InvalidInput, "interval must contain exactly one real root of " + to_string(p));
  for (mpfr_prec_t prec = 128; prec <= kMaxSelectionBits; prec *= 2) {
    std::vector<num::ComplexBall> roots = isolate_roots(p, prec);
    std::vector<std::size_t> hits;
    bool unsure = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (box.is_real_interval()) {
        if (may_touch(roots[i], box)) hits.push_back(i);
        continue;
      }
      Side s = box_side(roots[i], box);
      if (s == Side::In) hits.push_back(i);
      else if (s == Side::Unsure) unsure = true;
    }
    if (box.is_real_interval()) {
      if (hits.size() == 1) return roots[hits[0]];
      continue;
    }
    if (unsure) continue;
    if (hits.size() != 1) fail(ErrorKind::InvalidInput, "box must contain exactly one root of " + to_string(p));
    return roots[hits[0]];
  }
  fail(ErrorKind::InvalidInput, "a root of " + to_string(p) + " lies on the box boundary");
}

num::ComplexBall algebraic_enclosure(const AlgebraicGamma& g, mpfr_prec_t prec) {
  if (g.min_poly.degree() == 2) {
    auto [plus, minus] = quadratic_roots(g.min_poly, prec);
    return quadratic_selection(g.min_poly, g.box) > 0 ? plus : minus;
  }
  num::ComplexBall isolated = isolate_in_box(g.min_poly, g.box);
  num::ComplexBall refined = refine_root(g.min_poly, isolated, prec);
  if (!contained_in(refined, isolated))
    fail(ErrorKind::InternalInconsistency, "root refinement left its isolating ball");
  return refined;
}

Rational parse_decimal(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t int_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == int_start) fail(ErrorKind::ParseError, "bad decimal '" + text + "'");
  std::string digits = text.substr(int_start, i - int_start);
  std::size_t frac = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    frac = i - frac_start;
    if (frac == 0) fail(ErrorKind::ParseError, "bad decimal '" + text + "'");
    digits += text.substr(frac_start, frac);
  }
  if (i != text.size()) fail(ErrorKind::ParseError, "bad decimal '" + text + "'");
  Int num(digits, 10);
  if (text[0] == '-') num = -num;
  return make_rational(num, int_pow(Int(10), frac));
}

std::uint64_t parse_natural(const std::string& text) {
  Int z = parse_int(text);
  if (text[0] == '-' || text[0] == '+' || !fits_u64(z))
    fail(ErrorKind::ParseError, "expected a 64-bit natural, got '" + text + "'");
  return to_u64(z);
}

// "[a,b]" at the start of `text`; returns the position after ']'.
std::size_t parse_interval(const std::string& text, std::size_t pos, Rational& lo, Rational& hi) {
  if (pos >= text.size() || text[pos] != '[') fail(ErrorKind::ParseError, "expected '[' in box '" + text + "'");
  std::size_t comma = text.find(',', pos);
  std::size_t close = text.find(']', pos);
  if (comma == std::string::npos || close == std::string::npos || comma > close)
    fail(ErrorKind::ParseError, "bad interval in box '" + text + "'");
  lo = parse_rational(text.substr(pos + 1, comma - pos - 1));
  hi = parse_rational(text.substr(comma + 1, close - comma - 1));
  if (hi < lo) fail(ErrorKind::ParseError, "empty interval in box '" + text + "'");
  return close + 1;
}

RootBox parse_box(const std::string& text) {
  RootBox box;
  std::size_t pos = parse_interval(text, 0, box.re_lo, box.re_hi);
  if (pos == text.size()) return box;
  if (text[pos] != 'x') fail(ErrorKind::ParseError, "expected 'x' between box intervals in '" + text + "'");
  pos = parse_interval(text, pos + 1, box.im_lo, box.im_hi);
  if (pos != text.size()) fail(ErrorKind::ParseError, "trailing characters in box '" + text + "'");
  return box;
}

std::string box_string(const RootBox& box) {
  std::string s = "[" + to_string(box.re_lo) + "," + to_string(box.re_hi) + "]";
  if (box.is_real_interval()) return s;
  return s + "x[" + to_string(box.im_lo) + "," + to_string(box.im_hi) + "]";
}

}  // namespace

Gamma make_rational_gamma(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return RationalGamma{v};
}

Gamma make_algebraic(const IntPoly& poly, const RootBox& box) {
  const int deg = poly.degree();
  if (deg < 2 || deg > kIrreducibilityDegreeCap)
    fail(ErrorKind::InvalidInput, "algebraic gamma needs a minimal polynomial of degree 2..8");
  if (poly.content() != 1) fail(ErrorKind::InvalidInput, "minimal polynomial must be primitive");
  if (poly.leading() < 0) fail(ErrorKind::InvalidInput, "minimal polynomial must have positive leading coefficient");
  if (box.re_hi < box.re_lo || box.im_hi < box.im_lo) fail(ErrorKind::InvalidInput, "empty root box");
  if (!is_irreducible(poly)) fail(ErrorKind::InvalidInput, to_string(poly) + " is reducible over Q");
  AlgebraicGamma g{poly, box};
  if (deg == 2) (void)quadratic_selection(poly, box);
  else (void)isolate_in_box(poly, box);
  return g;
}

Gamma make_log_ratio(std::uint64_t a, std::uint64_t b) {
  if (a < 2 || b < 2) fail(ErrorKind::InvalidInput, "logratio needs a, b >= 2");
  return LogRatioGamma{a, b};
}

Gamma make_numeric(const std::string& decimal, unsigned digits) {
  (void)parse_decimal(decimal);
  if (digits == 0) fail(ErrorKind::InvalidInput, "numeric literal needs at least one digit of precision");
  return NumericGamma{decimal, digits};
}

Gamma parse_gamma(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) fail(ErrorKind::ParseError, "gamma '" + text + "' lacks a kind prefix");
  std::string kind = text.substr(0, colon);
  std::string body = text.substr(colon + 1);
  if (kind == "rat") return make_rational_gamma(parse_rational(body));
  if (kind == "logratio") {
    auto slash = body.find('/');
    if (slash == std::string::npos) fail(ErrorKind::ParseError, "logratio needs a/b");
    return make_log_ratio(parse_natural(body.substr(0, slash)), parse_natural(body.substr(slash + 1)));
  }
  if (kind == "const") {
    if (body == "pi") return NamedGamma{Constant::Pi};
    if (body == "e") return NamedGamma{Constant::E};
    fail(ErrorKind::ParseError, "unknown constant '" + body + "' (expected pi or e)");
  }
  if (kind == "num") {
    auto tilde = body.find('~');
    if (tilde == std::string::npos) fail(ErrorKind::ParseError, "numeric literal needs <decimal>~<digits>");
    std::uint64_t digits = parse_natural(body.substr(tilde + 1));
    if (digits > 100000) fail(ErrorKind::ParseError, "numeric literal precision too large");
    return make_numeric(body.substr(0, tilde), static_cast<unsigned>(digits));
  }
  if (kind == "alg") {
    auto at = body.find('@');
    if (at == std::string::npos) fail(ErrorKind::ParseError, "algebraic gamma needs <poly>@<box>");
    return make_algebraic(parse_poly(body.substr(0, at)), parse_box(body.substr(at + 1)));
  }
  fail(ErrorKind::ParseError, "unknown gamma kind '" + kind + "'");
}

std::string to_string(const Gamma& g) {
  struct Printer {
    std::string operator()(const RationalGamma& r) const {
      return "rat:" + r.value.get_num().get_str() + "/" + r.value.get_den().get_str();
    }
    std::string operator()(const AlgebraicGamma& a) const { return "alg:" + to_string(a.min_poly) + "@" + box_string(a.box); }
    std::string operator()(const LogRatioGamma& l) const {
      return "logratio:" + std::to_string(l.a) + "/" + std::to_string(l.b);
    }
    std::string operator()(const NamedGamma& n) const { return n.constant == Constant::Pi ? "const:pi" : "const:e"; }
    std::string operator()(const NumericGamma& n) const { return "num:" + n.decimal + "~" + std::to_string(n.digits); }
  };
  return std::visit(Printer{}, g);
}

CanonicalGamma canonicalize(const Gamma& g) {
  if (const auto* r = std::get_if<RationalGamma>(&g)) {
    if (r->value == 0) return {RationalGamma{Rational(0)}, Rational(1)};
    return {RationalGamma{Rational(1)}, r->value};
  }
  if (const auto* l = std::get_if<LogRatioGamma>(&g)) {
    PerfectPower pa = perfect_power_root(l->a);
    PerfectPower pb = perfect_power_root(l->b);
    Rational scale = make_rational(Int(pa.exponent), Int(pb.exponent));
    // two non-perfect-powers are multiplicatively dependent only when equal
    if (pa.base == pb.base) return canonicalize(make_rational_gamma(scale));
    return {LogRatioGamma{pa.base, pb.base}, scale};
  }
  return {g, Rational(1)};
}

CanonicalGamma scaled(const CanonicalGamma& g, const Rational& q) {
  if (q == 0) fail(ErrorKind::InvalidInput, "scaling factor must be nonzero");
  if (const auto* r = std::get_if<RationalGamma>(&g.canonical); r && r->value == 0) return g;
  Rational s = g.scale * q;
  s.canonicalize();
  return {g.canonical, s};
}

bool is_rational(const CanonicalGamma& g) { return std::holds_alternative<RationalGamma>(g.canonical); }

bool is_algebraic_irrational(const CanonicalGamma& g) { return std::holds_alternative<AlgebraicGamma>(g.canonical); }

bool is_known_transcendental(const CanonicalGamma& g) {
  return std::holds_alternative<LogRatioGamma>(g.canonical) || std::holds_alternative<NamedGamma>(g.canonical);
}

std::optional<QuadraticForm> quadratic_form(const AlgebraicGamma& g) {
  if (g.min_poly.degree() != 2) return std::nullopt;
  const Int& a = g.min_poly.coeffs[2];
  const Int& b = g.min_poly.coeffs[1];
  const Int& c = g.min_poly.coeffs[0];
  Int disc = b * b - 4 * a * c;
  Int mag = abs(disc);
  if (!fits_u64(mag)) fail(ErrorKind::InvalidInput, "discriminant too large to factor");
  // disc = s^2 * d with d squarefree
  Int s = 1, d = 1;
  for (const auto& [p, e] : factor(to_u64(mag)).factors) {
    s *= int_pow(to_int(p), e / 2);
    if (e % 2 == 1) d *= to_int(p);
  }
  if (disc < 0) d = -d;
  int sigma = quadratic_selection(g.min_poly, g.box);
  QuadraticForm f;
  f.d = d;
  f.u = make_rational(-b, 2 * a);
  f.v = make_rational(sigma * s, 2 * a);
  return f;
}

num::ComplexBall enclose(const Gamma& g, mpfr_prec_t prec) {
  struct Encloser {
    mpfr_prec_t prec;
    num::ComplexBall operator()(const RationalGamma& r) const {
      return num::ComplexBall(num::RealBall::from_rational(r.value, prec));
    }
    num::ComplexBall operator()(const AlgebraicGamma& a) const { return algebraic_enclosure(a, prec); }
    num::ComplexBall operator()(const LogRatioGamma& l) const {
      return num::ComplexBall(num::log_of(to_int(l.a), prec) / num::log_of(to_int(l.b), prec));
    }
    num::ComplexBall operator()(const NamedGamma& n) const {
      return num::ComplexBall(n.constant == Constant::Pi ? num::const_pi(prec) : num::const_e(prec));
    }
    num::ComplexBall operator()(const NumericGamma& n) const {
      num::RealBall x = num::RealBall::from_rational(parse_decimal(n.decimal), prec);
      num::Float rel = num::ten_to_minus(static_cast<long>(n.digits));
      num::Float r(num::kMagPrecision);
      mpfr_mul(r.get(), x.abs_upper().get(), rel.get(), MPFR_RNDU);
      x.add_radius(r);
      return num::ComplexBall(x);
    }
  };
  return std::visit(Encloser{prec}, g);
}

num::ComplexBall enclose(const CanonicalGamma& g, mpfr_prec_t prec) {
  return enclose(g.canonical, prec) * num::RealBall::from_rational(g.scale, prec);
}

num::ComplexBall evaluate(const Gamma& g, long digits) {
  if (digits < 1) fail(ErrorKind::InvalidInput, "evaluate needs digits >= 1");
  if (const auto* n = std::get_if<NumericGamma>(&g)) {
    if (digits > static_cast<long>(n->digits))
      fail(ErrorKind::PrecisionExceeded, "numeric literal is only known to " + std::to_string(n->digits) + " digits");
    return enclose(g, num::bits_for_digits(static_cast<long>(n->digits), 64));
  }
  for (long guard = 32; guard <= 8192; guard *= 2) {
    num::ComplexBall z = enclose(g, num::bits_for_digits(digits, guard));
    if (z.is_exact()) return z;
    num::Float limit(num::kMagPrecision);
    mpfr_mul(limit.get(), z.abs_lower().get(), num::ten_to_minus(digits).get(), MPFR_RNDD);
    if (mpfr_cmp(z.radius().get(), limit.get()) <= 0) return z;
  }
  fail(ErrorKind::InternalInconsistency, "could not reach " + std::to_string(digits) + " digits for " + to_string(g));
}

}  // namespace zg
