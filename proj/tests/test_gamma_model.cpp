#include <doctest.h>

#include <random>

#include <mpfr.h>

#include "zetagamma/errors.hpp"
#include "zetagamma/gamma_model.hpp"

using namespace zg;

namespace {

// Reference digits computed offline with an independent 60-digit logarithm
// and trigonometric evaluation.
constexpr const char* kLog3OverLog2 = "1.58496250072115618145373894394781650875981441";
constexpr const char* kSqrt2 = "1.41421356237309504880168872420969807856967188";

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InternalInconsistency;
}

// |value - decimal| <= 10^-tol_digits, computed with MPFR directly.
bool close_to(const num::RealBall& value, const char* decimal, long tol_digits) {
  mpfr_t ref, diff, tol;
  mpfr_inits2(400, ref, diff, tol, nullptr);
  mpfr_set_str(ref, decimal, 10, MPFR_RNDN);
  mpfr_sub(diff, ref, value.mid().get(), MPFR_RNDN);
  mpfr_abs(diff, diff, MPFR_RNDN);
  mpfr_set_ui(tol, 10, MPFR_RNDN);
  mpfr_pow_si(tol, tol, -tol_digits, MPFR_RNDN);
  bool ok = mpfr_cmp(diff, tol) <= 0;
  mpfr_clears(ref, diff, tol, nullptr);
  return ok;
}

}  // namespace

TEST_CASE("grammar round-trips") {
  for (const char* s : {"rat:3/5", "rat:-7/1", "alg:x^2-2@[1,2]", "alg:x^2+1@[-1,1]x[0,2]", "logratio:3/2", "const:pi",
                        "const:e", "num:1.4142~5", "alg:x^3-2@[-1,0]x[1/2,2]", "alg:x^4-10x^2+1@[3,4]"})
    CHECK(to_string(parse_gamma(s)) == s);
  CHECK(to_string(parse_gamma("rat:6/4")) == "rat:3/2");
  CHECK(to_string(parse_gamma("rat:5")) == "rat:5/1");
}

TEST_CASE("grammar rejects malformed or invalid input") {
  CHECK(kind_of([] { parse_gamma("rat:1/0"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_gamma("foo:1"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_gamma("const:tau"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_gamma("logratio:1/2"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_gamma("alg:x^2-4@[1,3]"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_gamma("alg:x^2-2@[-2,2]"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_gamma("alg:x^2-2@[2,3]"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_gamma("alg:2x^2-4@[1,2]"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_gamma("alg:x-2@[1,3]"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_gamma("alg:x^2+1@[-1,1]x[-2,2]"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_gamma("num:1.2.3~4"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_gamma("alg:x^2-2@[1,2"); }) == ErrorKind::ParseError);
}

TEST_CASE("canonicalization examples") {
  auto c = canonicalize(parse_gamma("logratio:9/4"));
  CHECK(c.canonical == parse_gamma("logratio:3/2"));
  CHECK(c.scale == 1);
  c = canonicalize(parse_gamma("logratio:8/2"));
  CHECK(c.canonical == parse_gamma("rat:1"));
  CHECK(c.scale == 3);
  c = canonicalize(parse_gamma("rat:-6/4"));
  CHECK(c.canonical == parse_gamma("rat:1"));
  CHECK(c.scale == Rational(-3, 2));
  c = canonicalize(parse_gamma("rat:0"));
  CHECK(c.canonical == parse_gamma("rat:0"));
  CHECK(c.scale == 1);
  c = canonicalize(parse_gamma("logratio:27/16"));
  CHECK(c.canonical == parse_gamma("logratio:3/2"));
  CHECK(c.scale == Rational(3, 4));
  c = canonicalize(parse_gamma("logratio:8/32"));
  CHECK(c.canonical == parse_gamma("rat:1"));
  CHECK(c.scale == Rational(3, 5));
  c = canonicalize(parse_gamma("const:pi"));
  CHECK(c.canonical == parse_gamma("const:pi"));
  CHECK(c.scale == 1);
}

TEST_CASE("canonicalize is idempotent") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::uint64_t> d(2, 5000);
  for (int i = 0; i < 300; ++i) {
    Gamma g = make_log_ratio(d(rng), d(rng));
    CanonicalGamma c = canonicalize(g);
    CanonicalGamma again = canonicalize(c.canonical);
    CHECK(again.canonical == c.canonical);
    CHECK(again.scale == 1);
  }
  for (std::uint64_t k = 1; k < 8; ++k)
    for (std::uint64_t j = 1; j < 8; ++j)
      CHECK(is_rational(canonicalize(make_log_ratio(1ULL << k, 1ULL << j))));
}

TEST_CASE("evaluation examples") {
  auto half = evaluate(parse_gamma("rat:1/2"), 10);
  CHECK(num::format_decimal(half, 10) == "0.5000000000");
  auto l = evaluate(parse_gamma("logratio:3/2"), 20);
  CHECK(num::format_decimal(l, 20) == "1.5849625007211561815");
  CHECK(close_to(evaluate(parse_gamma("logratio:3/2"), 40).re(), kLog3OverLog2, 40));
  CHECK(close_to(evaluate(parse_gamma("alg:x^2-2@[1,2]"), 40).re(), kSqrt2, 40));
  for (long digits : {5L, 30L, 300L}) {
    auto i = evaluate(parse_gamma("alg:x^2+1@[-1,1]x[0,2]"), digits);
    CHECK(i.is_exact());
    CHECK(i.re().mid().is_zero());
    CHECK(mpfr_cmp_ui(i.im().mid().get(), 1) == 0);
  }
  auto cube = evaluate(parse_gamma("alg:x^3-2@[-1,0]x[0,2]"), 30);
  CHECK(cube.im().certainly_greater(Rational(1)));
  CHECK(cube.re().certainly_less(Rational(0)));
}

TEST_CASE("numeric literals") {
  Gamma n = parse_gamma("num:1.4142~5");
  CHECK_NOTHROW(evaluate(n, 5));
  CHECK(kind_of([&] { evaluate(n, 6); }) == ErrorKind::PrecisionExceeded);
  CHECK(canonicalize(n).canonical == n);
}

TEST_CASE("numeric consistency of canonicalization") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> d(2, 100000);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int i = 0; i < 200; ++i) {
    Gamma g = (i % 2 == 0) ? make_log_ratio(d(rng), d(rng)) : make_rational_gamma(make_rational(num(rng), den(rng)));
    CanonicalGamma c = canonicalize(g);
    num::ComplexBall direct = evaluate(g, 40);
    num::ComplexBall via = enclose(c, num::bits_for_digits(40));
    num::ComplexBall diff = direct - via;
    CHECK(diff.re().contains_zero());
    CHECK(num::below_ten_to_minus(diff.radius(), 35));
  }
}

TEST_CASE("quadratic forms") {
  auto f = quadratic_form(std::get<AlgebraicGamma>(parse_gamma("alg:x^2-2@[1,2]")));
  REQUIRE(f);
  CHECK(f->d == 2);
  CHECK(f->u == 0);
  CHECK(f->v == 1);
  f = quadratic_form(std::get<AlgebraicGamma>(parse_gamma("alg:x^2-8@[-3,-2]")));
  REQUIRE(f);
  CHECK(f->d == 2);
  CHECK(f->v == -2);
  f = quadratic_form(std::get<AlgebraicGamma>(parse_gamma("alg:2x^2-2x-1@[1,2]")));  // (1 + sqrt 3) / 2
  REQUIRE(f);
  CHECK(f->d == 3);
  CHECK(f->u == Rational(1, 2));
  CHECK(f->v == Rational(1, 2));
  f = quadratic_form(std::get<AlgebraicGamma>(parse_gamma("alg:x^2+1@[-1,1]x[0,2]")));
  REQUIRE(f);
  CHECK(f->d == -1);
  CHECK(f->v == 1);
  CHECK_FALSE(quadratic_form(std::get<AlgebraicGamma>(parse_gamma("alg:x^3-2@[1,2]"))));
}
