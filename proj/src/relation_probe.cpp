#include "zetagamma/relation_probe.hpp"

#include <algorithm>
#include <cmath>

#include "zetagamma/errors.hpp"

namespace zg {
namespace {

Int dot(const IntVector& u, const IntVector& v) {
  Int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

// Nearest integer to a/b for b > 0, halves rounded up.
Int round_div(const Int& a, const Int& b) {
  Int num = 2 * a + b;
  Int den = 2 * b;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int max_abs(const IntVector& v) {
  Int m = 0;
  for (const Int& x : v) m = std::max<Int>(m, abs(x));
  return m;
}

}  // namespace

IntBasis lll_reduce(const IntBasis& basis, const Rational& delta) {
  if (delta <= Rational(1, 4) || delta >= 1) fail(ErrorKind::InvalidInput, "delta must lie in (1/4, 1)");
  const std::size_t n = basis.size();
  if (n == 0) return {};
  for (const IntVector& v : basis)
    if (v.size() != basis[0].size()) fail(ErrorKind::InvalidInput, "basis vectors differ in length");
  const Int p = delta.get_num();
  const Int q = delta.get_den();

  // Cohen's integral LLL, 1-indexed.
  IntBasis b(n + 1);
  for (std::size_t i = 1; i <= n; ++i) b[i] = basis[i - 1];
  std::vector<Int> d(n + 1, Int(0));
  std::vector<IntVector> lam(n + 1, IntVector(n + 1, Int(0)));
  d[0] = 1;
  d[1] = dot(b[1], b[1]);
  if (d[1] == 0) fail(ErrorKind::InvalidBasis, "basis vectors are linearly dependent");

  auto red = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam[k][l]) <= d[l]) return;
    Int r = round_div(lam[k][l], d[l]);
    for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= r * b[l][c];
    lam[k][l] -= r * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= r * lam[l][i];
  };

  std::size_t kmax = 1;
  auto swap = [&](std::size_t k) {
    std::swap(b[k], b[k - 1]);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    Int l = lam[k][k - 1];
    Int B = exact_div(d[k - 2] * d[k] + l * l, d[k - 1]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Int t = lam[i][k];
      lam[i][k] = exact_div(d[k] * lam[i][k - 1] - l * t, d[k - 1]);
      lam[i][k - 1] = exact_div(B * t + l * lam[i][k], d[k]);
    }
    d[k - 1] = B;
  };

  std::size_t k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Int u = dot(b[k], b[j]);
        for (std::size_t i = 1; i < j; ++i) u = exact_div(d[i] * u - lam[k][i] * lam[j][i], d[i - 1]);
        if (j < k) {
          lam[k][j] = u;
        } else {
          if (u == 0) fail(ErrorKind::InvalidBasis, "basis vectors are linearly dependent");
          d[k] = u;
        }
      }
    }
    red(k, k - 1);
    if (q * (d[k] * d[k - 2] + lam[k][k - 1] * lam[k][k - 1]) < p * d[k - 1] * d[k - 1]) {
      swap(k);
      k = std::max<std::size_t>(2, k - 1);
      continue;
    }
    for (std::size_t l = k - 1; l-- > 1;) red(k, l);
    ++k;
  }
  return IntBasis(b.begin() + 1, b.end());
}

long required_precision(const RelationQuery& q) {
  return 10 + static_cast<long>(q.degree_cap) * static_cast<long>(decimal_length(q.height_cap));
}

std::optional<LinearRelation> find_linear_relation(const std::vector<num::ComplexBall>& xs, const Int& height,
                                                   long digits) {
  const std::size_t m = xs.size();
  if (m < 2) fail(ErrorKind::InvalidInput, "relation search needs at least two values");
  if (height < 1 || digits < 1) fail(ErrorKind::InvalidInput, "relation search needs height >= 1 and digits >= 1");
  mpfr_prec_t prec = 0;
  bool complex = false;
  for (const auto& x : xs) {
    prec = std::max(prec, x.precision());
    complex = complex || !x.is_real();
  }
  num::RealBall scale = num::RealBall::from_int(int_pow(Int(10), static_cast<unsigned long>(digits)), prec);

  IntBasis basis;
  for (std::size_t j = 0; j < m; ++j) {
    IntVector row(m, Int(0));
    row[j] = 1;
    num::ComplexBall s = xs[j] * scale;
    row.push_back(num::round_mid(s.re()));
    if (complex) row.push_back(num::round_mid(s.im()));
    basis.push_back(std::move(row));
  }
  IntBasis reduced = lll_reduce(basis);

  std::optional<LinearRelation> best;
  Int best_height;
  for (const IntVector& row : reduced) {
    IntVector c(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(m));
    Int h = max_abs(c);
    if (h == 0 || h > height) continue;
    if (best && h >= best_height) continue;
    num::ComplexBall sum(num::RealBall::from_int(0, prec));
    for (std::size_t j = 0; j < m; ++j) sum = sum + xs[j] * num::RealBall::from_int(c[j], prec);
    num::Float res = sum.abs_upper();
    if (!num::below_ten_to_minus(res, digits / 2)) continue;
    best = LinearRelation{make_primitive(std::move(c)), res};
    best_height = h;
  }
  return best;
}

RelationResult find_integer_relation(const num::ComplexBall& x, const RelationQuery& q) {
  if (q.degree_cap < 1 || q.height_cap < 1) fail(ErrorKind::InvalidInput, "relation query needs d >= 1 and H >= 1");
  const long P = q.precision;
  if (P < required_precision(q))
    fail(ErrorKind::ImpreciseInput, "precision " + std::to_string(P) + " below the policy minimum " +
                                        std::to_string(required_precision(q)));
  if (!x.is_exact()) {
    num::Float limit(num::kMagPrecision);
    num::Float mag = x.abs_upper();
    if (mpfr_cmp_ui(mag.get(), 1) < 0) mpfr_set_ui(mag.get(), 1, MPFR_RNDN);
    mpfr_mul(limit.get(), mag.get(), num::ten_to_minus(P).get(), MPFR_RNDD);
    if (mpfr_cmp(x.radius().get(), limit.get()) > 0)
      fail(ErrorKind::ImpreciseInput, "input radius exceeds 10^-" + std::to_string(P));
  }

  std::vector<num::ComplexBall> powers{num::ComplexBall(num::RealBall::from_int(1, x.precision()))};
  RelationResult result;
  result.searched = q;
  for (unsigned dd = 1; dd <= q.degree_cap; ++dd) {
    powers.push_back(powers.back() * x);
    std::optional<LinearRelation> rel = find_linear_relation(powers, q.height_cap, P);
    if (!rel) continue;
    IntPoly poly(rel->coefficients);
    if (poly.degree() < 1) continue;
    result.polynomial = primitive_part(poly);
    result.residual = rel->residual;
    return result;
  }
  return result;
}

RelationResult find_integer_relation(const Evaluator& x, const RelationQuery& q) {
  const long P = q.precision;
  if (P < required_precision(q))
    fail(ErrorKind::ImpreciseInput, "precision " + std::to_string(P) + " below the policy minimum " +
                                        std::to_string(required_precision(q)));
  // Extra digits so that 10^P * x^d is known to well below one unit.
  double mag = mpfr_get_d(x(P).abs_upper().get(), MPFR_RNDU);
  long lead = mag > 1 ? static_cast<long>(std::ceil(std::log10(mag))) : 0;
  auto digits_for = [&](long p) { return p + static_cast<long>(q.degree_cap) * lead + 10; };

  RelationResult r = find_integer_relation(x(digits_for(P)), q);
  if (r.found() && !num::below_ten_to_minus(r.residual, 3 * P / 4)) {
    RelationQuery q2 = q;
    q2.precision = 2 * P;
    r = find_integer_relation(x(digits_for(2 * P)), q2);
    r.escalated = true;
  }
  return r;
}

num::ComplexBall eval_power(std::uint64_t n, const Gamma& g, long digits) {
  if (n == 0) fail(ErrorKind::InvalidInput, "eval_power needs n >= 1");
  if (digits < 1) fail(ErrorKind::InvalidInput, "eval_power needs digits >= 1");
  if (n == 1) return num::ComplexBall(num::RealBall::from_int(1, num::bits_for_digits(digits)));
  if (const auto* lit = std::get_if<NumericGamma>(&g)) {
    if (digits > static_cast<long>(lit->digits))
      fail(ErrorKind::PrecisionExceeded, "numeric literal is only known to " + std::to_string(lit->digits) + " digits");
    mpfr_prec_t prec = num::bits_for_digits(static_cast<long>(lit->digits), 64);
    return num::exp(enclose(g, prec) * num::log_of(to_int(n), prec));
  }
  for (long guard = 32; guard <= 8192; guard *= 2) {
    mpfr_prec_t prec = num::bits_for_digits(digits, guard);
    num::ComplexBall z = num::exp(enclose(g, prec) * num::log_of(to_int(n), prec));
    num::Float limit(num::kMagPrecision);
    mpfr_mul(limit.get(), z.abs_lower().get(), num::ten_to_minus(digits).get(), MPFR_RNDD);
    if (mpfr_cmp(z.radius().get(), limit.get()) <= 0) return z;
  }
  fail(ErrorKind::InternalInconsistency, "could not evaluate " + std::to_string(n) + "^" + to_string(g));
}

std::string to_string(ProbeKind k) {
  switch (k) {
    case ProbeKind::AgreesAlgebraic: return "AgreesAlgebraic";
    case ProbeKind::AgreesNoRelation: return "AgreesNoRelation";
    case ProbeKind::Mismatch: return "Mismatch";
  }
  return "?";
}

ProbeOutcome probe_point(std::uint64_t n, const Gamma& g, const RelationQuery& q) {
  ProbeOutcome out;
  out.verdict = classify_point(canonicalize(g), n, AssumptionSet{});
  out.relation = find_integer_relation([&](long digits) { return eval_power(n, g, digits); }, q);
  const bool found = out.relation.found();
  switch (out.verdict.status) {
    case Status::Algebraic: {
      std::optional<IntPoly> w = witness_polynomial(out.verdict.witness);
      if (!found) {
        out.kind = ProbeKind::Mismatch;
        out.details = "verdict Algebraic but no relation within the caps";
      } else if (!w) {
        out.kind = ProbeKind::Mismatch;
        out.details = "witness carries no exact polynomial";
      } else if (!divides(*w, *out.relation.polynomial)) {
        out.kind = ProbeKind::Mismatch;
        out.details = to_string(*out.relation.polynomial) + " does not vanish at the witness root of " + to_string(*w);
      } else {
        out.kind = ProbeKind::AgreesAlgebraic;
      }
      break;
    }
    case Status::Transcendental:
      out.kind = found ? ProbeKind::Mismatch : ProbeKind::AgreesNoRelation;
      if (found) out.details = "verdict Transcendental but found " + to_string(*out.relation.polynomial);
      break;
    case Status::Unknown:
      out.kind = found ? ProbeKind::AgreesAlgebraic : ProbeKind::AgreesNoRelation;
      out.details = "verdict Unknown";
      break;
  }
  return out;
}

}  // namespace zg
