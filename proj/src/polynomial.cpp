#include "zetagamma/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <functional>
#include <map>

#include "zetagamma/errors.hpp"
#include "zetagamma/exponent_lattice.hpp"

namespace zg {
namespace {

using QPoly = std::vector<Rational>;

void trim(IntVector& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void trim(QPoly& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

QPoly to_q(const IntPoly& p) { return {p.coeffs.begin(), p.coeffs.end()}; }

// Remainder of a modulo b over Q.
QPoly remainder(QPoly a, const QPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Rational eval_q(const QPoly& p, const Rational& x) {
  Rational r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

num::ComplexBall strip(const num::ComplexBall& z) {
  num::ComplexBall c(z);
  mpfr_set_zero(c.re().rad().get(), 1);
  mpfr_set_zero(c.im().rad().get(), 1);
  return c;
}

num::ComplexBall at_precision(const num::ComplexBall& z, mpfr_prec_t prec) {
  num::ComplexBall c(prec);
  mpfr_set(c.re().mid().get(), z.re().mid().get(), MPFR_RNDN);
  mpfr_set(c.im().mid().get(), z.im().mid().get(), MPFR_RNDN);
  return c;
}

// Rigorous radius n |p(z)| / |p'(z)| at an exact point z; nullopt when the
// derivative cannot be bounded away from zero.
std::optional<num::Float> newton_radius(const IntPoly& p, const IntPoly& dp, const num::ComplexBall& z) {
  num::Float num_up = p(z).abs_upper();
  num::Float den_lo = dp(z).abs_lower();
  if (den_lo.is_zero()) return std::nullopt;
  num::Float r(num::kMagPrecision);
  mpfr_div(r.get(), num_up.get(), den_lo.get(), MPFR_RNDU);
  mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(p.degree()), MPFR_RNDU);
  return r;
}

num::ComplexBall with_radius(const num::ComplexBall& z, const num::Float& r) {
  num::ComplexBall c = strip(z);
  c.re().add_radius(r);
  c.im().add_radius(r);
  return c;
}

// Lower bound on |a - b| between midpoints.
num::Float distance_lower(const num::ComplexBall& a, const num::ComplexBall& b) {
  return (strip(a) - strip(b)).abs_lower();
}

// Durand-Kerner iteration on midpoints.
std::vector<num::ComplexBall> durand_kerner(const IntPoly& p, mpfr_prec_t prec) {
  const int n = p.degree();
  // Cauchy bound 1 + max |a_i / a_n|
  double bound = 1.0;
  for (int i = 0; i < n; ++i) {
    double q = std::abs(mpz_get_d(p.coeffs[static_cast<std::size_t>(i)].get_mpz_t()) /
                        mpz_get_d(p.leading().get_mpz_t()));
    bound = std::max(bound, 1.0 + q);
  }
  std::vector<num::ComplexBall> z;
  num::ComplexBall seed(num::RealBall::from_double(0.4, prec), num::RealBall::from_double(0.9, prec));
  num::ComplexBall w = num::ComplexBall(num::RealBall::from_double(bound, prec));
  for (int i = 0; i < n; ++i) {
    z.push_back(strip(w));
    w = strip(w * seed);
  }
  num::Float tol(num::kMagPrecision);
  mpfr_set_ui_2exp(tol.get(), 1, -(prec - 16), MPFR_RNDN);
  for (int iter = 0; iter < 4000; ++iter) {
    bool converged = true;
    for (int i = 0; i < n; ++i) {
      num::ComplexBall den(num::RealBall::from_int(p.leading(), prec));
      for (int j = 0; j < n; ++j)
        if (j != i) den = strip(den * (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]));
      if (den.abs_upper().is_zero()) {
        z[static_cast<std::size_t>(i)] = strip(z[static_cast<std::size_t>(i)] + seed);
        converged = false;
        continue;
      }
      num::ComplexBall step = strip(p(z[static_cast<std::size_t>(i)]) / den);
      z[static_cast<std::size_t>(i)] = strip(z[static_cast<std::size_t>(i)] - step);
      num::Float scale = z[static_cast<std::size_t>(i)].abs_upper();
      if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDU);
      num::Float limit(num::kMagPrecision);
      mpfr_mul(limit.get(), tol.get(), scale.get(), MPFR_RNDU);
      if (mpfr_cmp(step.abs_upper().get(), limit.get()) > 0) converged = false;
    }
    if (converged) break;
  }
  return z;
}

}  // namespace

IntPoly::IntPoly(IntVector c) : coeffs(std::move(c)) { trim(coeffs); }

Int IntPoly::height() const {
  Int h = 0;
  for (const auto& c : coeffs) h = std::max(h, Int(abs(c)));
  return h;
}

Rational IntPoly::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

num::ComplexBall IntPoly::operator()(const num::ComplexBall& x) const {
  num::ComplexBall r(x.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    r = r * x + num::ComplexBall(num::RealBall::from_int(*it, x.precision()));
  return r;
}

IntPoly IntPoly::derivative() const {
  IntVector d;
  for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  IntVector c = p.coeffs;
  Int g = vector_content(c);
  if (p.leading() < 0) g = -g;
  for (auto& x : c) x /= g;
  return IntPoly(std::move(c));
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Int mag = abs(c);
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly parse_poly(const std::string& text) {
  auto bad = [&](const std::string& why) -> void {
    fail(ErrorKind::ParseError, "bad polynomial '" + text + "': " + why);
  };
  if (text.empty()) bad("empty");
  std::map<unsigned long, Int> terms;
  std::size_t i = 0;
  auto digits = [&]() {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return text.substr(start, i - start);
  };
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      bad("expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    std::string coef = digits();
    bool has_x = false;
    unsigned long exponent = 0;
    if (i < text.size() && text[i] == '*') {
      if (coef.empty()) bad("'*' without a coefficient");
      ++i;
      if (i >= text.size() || text[i] != 'x') bad("expected 'x' after '*'");
    }
    if (i < text.size() && text[i] == 'x') {
      has_x = true;
      exponent = 1;
      ++i;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string e = digits();
        if (e.empty() || e.size() > 4) bad("bad exponent");
        exponent = std::stoul(e);
      }
    }
    if (coef.empty() && !has_x) bad("empty term at position " + std::to_string(i));
    Int c = coef.empty() ? Int(1) : Int(coef, 10);
    terms[exponent] += sign * c;
  }
  IntVector c;
  for (const auto& [e, v] : terms) {
    if (c.size() <= e) c.resize(e + 1, Int(0));
    c[e] += v;
  }
  return IntPoly(std::move(c));
}

bool divides(const IntPoly& b, const IntPoly& a) {
  if (b.is_zero()) fail(ErrorKind::InvalidInput, "division by the zero polynomial");
  return remainder(to_q(a), to_q(b)).empty();
}

bool is_squarefree(const IntPoly& p) {
  if (p.degree() <= 0) return true;
  QPoly a = to_q(p);
  QPoly b = to_q(p.derivative());
  while (!b.empty()) {
    QPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

std::size_t count_real_roots(const IntPoly& p, const Rational& lo, const Rational& hi) {
  if (p(lo) == 0 || p(hi) == 0) fail(ErrorKind::InvalidInput, "interval endpoint is a root");
  if (hi < lo) return 0;
  std::vector<QPoly> seq{to_q(p), to_q(p.derivative())};
  trim(seq[1]);
  while (!seq.back().empty()) {
    QPoly r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& x : r) x = -x;
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  auto variations = [&](const Rational& x) {
    std::size_t v = 0;
    int last = 0;
    for (const auto& s : seq) {
      int sg = sgn(eval_q(s, x));
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++v;
      last = sg;
    }
    return v;
  };
  return variations(lo) - variations(hi);
}

std::vector<num::ComplexBall> isolate_roots(const IntPoly& p, mpfr_prec_t prec) {
  if (p.degree() < 1) return {};
  if (!is_squarefree(p)) fail(ErrorKind::InvalidInput, "root isolation needs a squarefree polynomial");
  const IntPoly dp = p.derivative();
  for (mpfr_prec_t bits = prec; bits <= 65536; bits *= 2) {
    std::vector<num::ComplexBall> z = durand_kerner(p, bits);
    std::vector<num::ComplexBall> balls;
    bool ok = true;
    for (const auto& zi : z) {
      auto r = newton_radius(p, dp, zi);
      if (!r) {
        ok = false;
        break;
      }
      balls.push_back(with_radius(zi, *r));
    }
    for (std::size_t i = 0; ok && i < balls.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < balls.size(); ++j) {
        num::Float reach(num::kMagPrecision);
        // balls are squares; their circumscribed disks have radius sqrt(2) r
        mpfr_add(reach.get(), balls[i].re().rad().get(), balls[j].re().rad().get(), MPFR_RNDU);
        mpfr_mul_ui(reach.get(), reach.get(), 2, MPFR_RNDU);
        if (mpfr_cmp(distance_lower(balls[i], balls[j]).get(), reach.get()) <= 0) ok = false;
      }
    }
    if (ok) return balls;
  }
  fail(ErrorKind::InternalInconsistency, "root isolation did not converge for " + to_string(p));
}

num::ComplexBall refine_root(const IntPoly& p, const num::ComplexBall& start, mpfr_prec_t prec) {
  const IntPoly dp = p.derivative();
  num::ComplexBall z = at_precision(start, prec);
  for (int iter = 0; iter < 200; ++iter) {
    num::ComplexBall d = strip(dp(z));
    if (d.abs_upper().is_zero()) break;
    num::ComplexBall step = strip(p(z) / d);
    z = strip(z - step);
    if (step.abs_upper().is_zero()) break;
    num::Float lim(num::kMagPrecision);
    mpfr_set_ui_2exp(lim.get(), 1, -(prec + 8), MPFR_RNDN);
    if (mpfr_cmp(step.abs_upper().get(), lim.get()) < 0) {
      // one more step lands at full precision
      num::ComplexBall d2 = strip(dp(z));
      if (!d2.abs_upper().is_zero()) z = strip(z - strip(p(z) / d2));
      break;
    }
  }
  auto r = newton_radius(p, dp, z);
  if (!r) fail(ErrorKind::InternalInconsistency, "derivative vanishes at a simple root of " + to_string(p));
  return with_radius(z, *r);
}

bool is_irreducible(const IntPoly& input) {
  IntPoly p = primitive_part(input);
  const int n = p.degree();
  if (n < 1) return false;
  if (n > kIrreducibilityDegreeCap)
    fail(ErrorKind::InvalidInput, "irreducibility check is capped at degree 8");
  if (n == 1) return true;
  if (p.coeffs[0] == 0) return false;
  if (!is_squarefree(p)) return false;

  if (!fits_u64(p.leading())) fail(ErrorKind::InvalidInput, "leading coefficient too large");
  std::vector<Int> lead_divisors{Int(1)};
  for (const auto& [q, e] : factor(to_u64(p.leading())).factors) {
    std::vector<Int> next;
    for (const auto& d : lead_divisors) {
      Int m = d;
      for (unsigned k = 0; k <= e; ++k, m *= to_int(q)) next.push_back(m);
    }
    lead_divisors = std::move(next);
  }

  for (mpfr_prec_t prec = 128; prec <= 65536; prec *= 2) {
    std::vector<num::ComplexBall> roots = isolate_roots(p, prec);
    bool too_coarse = false;
    std::vector<std::size_t> subset;
    // returns true when a factor was confirmed
    std::function<bool(std::size_t, std::size_t)> visit = [&](std::size_t start, std::size_t size) -> bool {
      if (subset.size() == size) {
        std::vector<num::ComplexBall> prod{num::ComplexBall(num::RealBall::from_int(Int(1), roots[0].precision()))};
        for (std::size_t idx : subset) {
          // multiply by (x - r)
          std::vector<num::ComplexBall> next(prod.size() + 1, num::ComplexBall(roots[0].precision()));
          for (std::size_t j = 0; j < prod.size(); ++j) {
            next[j + 1] = next[j + 1] + prod[j];
            next[j] = next[j] - prod[j] * roots[idx];
          }
          prod = std::move(next);
        }
        for (const auto& c : lead_divisors) {
          IntVector cand;
          bool possible = true;
          for (const auto& coef : prod) {
            num::ComplexBall scaled = coef * num::RealBall::from_int(c, coef.precision());
            if (!scaled.im().contains_zero()) {
              possible = false;
              break;
            }
            if (mpfr_cmp_d(scaled.re().rad().get(), 0.25) >= 0 || mpfr_cmp_d(scaled.im().rad().get(), 0.25) >= 0) {
              too_coarse = true;
              possible = false;
              break;
            }
            Int k = num::round_mid(scaled.re());
            num::RealBall diff = scaled.re() - num::RealBall::from_int(k, coef.precision());
            if (!diff.contains_zero()) {
              possible = false;
              break;
            }
            cand.push_back(k);
          }
          if (possible && divides(IntPoly(cand), p)) return true;
        }
        return false;
      }
      for (std::size_t i = start; i < roots.size(); ++i) {
        subset.push_back(i);
        if (visit(i + 1, size)) return true;
        subset.pop_back();
      }
      return false;
    };
    bool found = false;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(n / 2) && !found; ++k) found = visit(0, k);
    if (found) return false;
    if (!too_coarse) return true;
  }
  fail(ErrorKind::InternalInconsistency, "irreducibility check did not converge");
}

IntPoly power_minimal_polynomial(std::uint64_t base, const Rational& exponent) {
  if (base == 0) fail(ErrorKind::InvalidInput, "power_minimal_polynomial needs base >= 1");
  PerfectPower pp = perfect_power_root(base);
  Rational e = exponent * static_cast<unsigned long>(pp.exponent);
  if (pp.base == 1 || e == 0) return IntPoly({Int(-1), Int(1)});
  // m^(A/B) with m not a perfect power and gcd(A, B) = 1: x^B - m^A is
  // irreducible (no prime l | B makes m^A an l-th power)
  Int a = e.get_num();
  if (!e.get_den().fits_ulong_p()) fail(ErrorKind::InvalidInput, "exponent denominator too large");
  unsigned long b = e.get_den().get_ui();
  Int m = to_int(pp.base);
  IntVector c(b + 1, Int(0));
  Int ma = int_pow(m, Int(abs(a)).get_ui());
  if (a > 0) {
    c[0] = -ma;
    c[b] = 1;
  } else {
    c[0] = -1;
    c[b] = ma;
  }
  return IntPoly(std::move(c));
}

}  // namespace zg
