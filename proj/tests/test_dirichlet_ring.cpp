#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zetagamma/dirichlet_ring.hpp"
#include "zetagamma/errors.hpp"

using namespace zg;

namespace {

MonomialIndex mono(std::vector<unsigned> e) { return MonomialIndex{std::move(e)}; }

ArithFunction random_function(std::mt19937_64& rng, std::size_t N) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> v;
  for (std::size_t i = 0; i < N; ++i) v.push_back(make_rational(num(rng), den(rng)));
  return ArithFunction(v);
}

}  // namespace

TEST_CASE("zeta_k values") {
  CHECK(zeta_k(0, 5).values() == std::vector<Rational>(5, Rational(1)));
  CHECK(zeta_k(1, 7)(7) == 7);
  CHECK(zeta_k(2, 5)(5) == 25);
  CHECK(zeta_k(-1, 4)(4) == Rational(1, 4));
  CHECK(zeta_k(2, 3).label() == std::optional<std::string>("zeta_2"));
}

TEST_CASE("truncation errors") {
  CHECK_THROWS_AS(zeta_k(1, 0), Error);
  try {
    (void)zeta_k(1, 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidTruncation);
  }
  try {
    (void)convolve(zeta_k(0, 4), zeta_k(0, 5));
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TruncationMismatch);
  }
}

TEST_CASE("convolution against divisor oracle") {
  ArithFunction z0 = zeta_k(0, 30), z1 = zeta_k(1, 30);
  CHECK(convolve(z0, z0)(6) == 4);
  CHECK(convolve(z0, z1)(4) == 7);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    ArithFunction f = random_function(rng, 40), g = random_function(rng, 40);
    ArithFunction h = convolve(f, g);
    for (std::size_t n = 1; n <= 40; ++n) CHECK(h(n) == oracle::convolve_at(f.values(), g.values(), n));
  }
}

TEST_CASE("convolution powers") {
  ArithFunction z0 = zeta_k(0, 24);
  CHECK(conv_pow(z0, 2)(6) == 4);
  CHECK(conv_pow(z0, 2) == convolve(z0, z0));
  CHECK(conv_pow(z0, 3)(4) == 6);
  for (std::size_t n = 1; n <= 24; ++n) {
    CHECK(conv_pow(z0, 3)(n) == oracle::ordered_factorizations(n, 3));
    CHECK(conv_pow(z0, 4)(n) == oracle::ordered_factorizations(n, 4));
  }
  CHECK(conv_pow(zeta_k(3, 9), 0) == epsilon(9));
}

TEST_CASE("ring laws on random functions") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    ArithFunction f = random_function(rng, 36), g = random_function(rng, 36), h = random_function(rng, 36);
    CHECK(convolve(f, g) == convolve(g, f));
    CHECK(convolve(convolve(f, g), h) == convolve(f, convolve(g, h)));
    CHECK(convolve(f, g + h) == convolve(f, g) + convolve(f, h));
    CHECK(convolve(epsilon(36), f) == f);
  }
}

TEST_CASE("polynomial evaluation") {
  ArithFunction z0 = zeta_k(0, 12);
  PolynomialRelation sq({{mono({2}), Rational(1)}});
  CHECK(eval_polynomial(sq, {z0})(6) == 4);
  PolynomialRelation cancel({{mono({1}), Rational(1)}, {mono({1}), Rational(-1)}});
  CHECK(cancel.empty());
  CHECK(eval_polynomial(cancel, {z0}).is_zero());
  PolynomialRelation one({{mono({0, 0}), Rational(1)}});
  CHECK(eval_polynomial(one, {z0, zeta_k(1, 12)}) == epsilon(12));
  try {
    (void)eval_polynomial(one, {z0});
    FAIL("expected arity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RelationArity);
  }
}

TEST_CASE("monomial enumeration") {
  auto ms = enumerate_monomials(2, 2);
  REQUIRE(ms.size() == 6);
  CHECK(monomial_count(2, 2) == 6);
  CHECK(monomial_count(4, 3) == 35);
  CHECK(ms.front().is_identity());
  for (std::size_t i = 1; i < ms.size(); ++i) CHECK(GradedLexLess{}(ms[i - 1], ms[i]));
}

TEST_CASE("carlitz kernel") {
  CHECK(carlitz_kernel(2, 2, 60).empty());
  CHECK(carlitz_kernel(2, 3, 64).empty());
  // a linear form in e, zeta_0..zeta_r can vanish on 1..r+1, so its cube
  // survives exactly up to (r+2)^3 - 1
  CHECK(carlitz_kernel(3, 3, 124).size() == 1);
  CHECK(carlitz_kernel(3, 3, 125).empty());
  auto k = carlitz_kernel(1, 1, 1);
  CHECK(k.size() == 2);
  CHECK(carlitz_kernel(0, 2, 1).size() == 2);
  try {
    (void)carlitz_kernel(1, 1, 0);
    FAIL("expected truncation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidTruncation);
  }
}

TEST_CASE("carlitz relations vanish and shrink with N") {
  for (unsigned r = 0; r <= 2; ++r)
    for (unsigned deg = 1; deg <= 3; ++deg)
      for (std::size_t N = 1; N <= 8; ++N) {
        std::vector<ArithFunction> gens;
        for (unsigned k = 0; k <= r; ++k) gens.push_back(zeta_k(k, N));
        auto kernel = carlitz_kernel(r, deg, N);
        for (const auto& rel : kernel) CHECK(eval_polynomial(rel, gens).is_zero());
        std::vector<ArithFunction> smaller;
        if (N > 1) {
          for (unsigned k = 0; k <= r; ++k) smaller.push_back(zeta_k(k, N - 1));
          for (const auto& rel : kernel) CHECK(eval_polynomial(rel, smaller).is_zero());
          CHECK(kernel.size() <= carlitz_kernel(r, deg, N - 1).size());
        }
      }
}

TEST_CASE("cubic truncation relation below 64") {
  // L = 2e - 6 zeta_0 + 5 zeta_1 - zeta_2 vanishes on 1, 2, 3, so L^{*3}
  // is supported on n >= 64
  for (std::size_t N : {60, 63}) {
    auto kernel = carlitz_kernel(2, 3, N);
    REQUIRE(kernel.size() == 1);
    ArithFunction L = Rational(2) * epsilon(N) + Rational(-6) * zeta_k(0, N) + Rational(5) * zeta_k(1, N) +
                      Rational(-1) * zeta_k(2, N);
    CHECK(L(1) == 0);
    CHECK(L(2) == 0);
    CHECK(L(3) == 0);
    CHECK(conv_pow(L, 3).is_zero());
    PolynomialRelation cube;
    // coefficients of -(L^3) in the zeta basis, leading term zeta_0^3 first
    const std::vector<std::pair<std::vector<unsigned>, long>> expected = {
        {{3, 0, 0}, -216}, {{2, 1, 0}, 540}, {{2, 0, 1}, -108}, {{1, 2, 0}, -450}, {{1, 1, 1}, 180},
        {{1, 0, 2}, -18},  {{0, 3, 0}, 125}, {{0, 2, 1}, -75},  {{0, 1, 2}, 15},   {{0, 0, 3}, -1},
        {{2, 0, 0}, 216},  {{1, 1, 0}, -360}, {{1, 0, 1}, 72},  {{0, 2, 0}, 150},  {{0, 1, 1}, -60},
        {{0, 0, 2}, 6},    {{1, 0, 0}, -72}, {{0, 1, 0}, 60},   {{0, 0, 1}, -12},  {{0, 0, 0}, 8}};
    for (const auto& [e, c] : expected) cube.add_term(mono(e), Rational(c));
    CHECK(kernel[0] == cube);
  }
}
