#pragma once

// Truncated arithmetic functions with exact rational values, under pointwise
// addition and Dirichlet convolution.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetagamma/numbers.hpp"

namespace zg {

class ArithFunction {
public:
  /// values[0] is f(1). Throws InvalidTruncation when `values` is empty.
  explicit ArithFunction(std::vector<Rational> values, std::optional<std::string> label = std::nullopt);

  [[nodiscard]] std::size_t truncation() const noexcept { return values_.size(); }
  /// f(n) for 1 <= n <= truncation().
  [[nodiscard]] const Rational& operator()(std::size_t n) const { return values_.at(n - 1); }
  [[nodiscard]] const std::vector<Rational>& values() const noexcept { return values_; }
  [[nodiscard]] const std::optional<std::string>& label() const noexcept { return label_; }

  [[nodiscard]] ArithFunction truncated(std::size_t n) const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const ArithFunction& a, const ArithFunction& b) { return a.values_ == b.values_; }

private:
  std::vector<Rational> values_;
  std::optional<std::string> label_;
};

ArithFunction operator+(const ArithFunction& f, const ArithFunction& g);
ArithFunction operator*(const Rational& c, const ArithFunction& f);

/// n -> n^k on 1..N; k may be negative.
ArithFunction zeta_k(long k, std::size_t n);
/// The convolution identity: 1 at n = 1, zero elsewhere.
ArithFunction epsilon(std::size_t n);
ArithFunction zero_function(std::size_t n);

ArithFunction convolve(const ArithFunction& f, const ArithFunction& g);
ArithFunction conv_pow(const ArithFunction& f, unsigned i);

/// Exponent vector (i_0, ..., i_r) of a convolution monomial.
struct MonomialIndex {
  std::vector<unsigned> exponents;

  [[nodiscard]] unsigned degree() const;
  [[nodiscard]] bool is_identity() const;

  friend bool operator==(const MonomialIndex&, const MonomialIndex&) = default;
};

/// Graded lexicographic order: lower total degree first; ties broken
/// lexicographically with the first generator most significant.
struct GradedLexLess {
  bool operator()(const MonomialIndex& a, const MonomialIndex& b) const;
};

/// All monomials in `generators` variables of total degree <= max_degree,
/// in ascending graded lexicographic order. There are
/// C(generators + max_degree, max_degree) of them.
std::vector<MonomialIndex> enumerate_monomials(std::size_t generators, unsigned max_degree);
Int monomial_count(std::size_t generators, unsigned max_degree);

class PolynomialRelation {
public:
  using Terms = std::map<MonomialIndex, Rational, GradedLexLess>;

  PolynomialRelation() = default;
  /// Sums coefficients of repeated monomials and drops zero coefficients.
  explicit PolynomialRelation(const std::vector<std::pair<MonomialIndex, Rational>>& terms);

  void add_term(const MonomialIndex& index, const Rational& coefficient);

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  /// True when the constant monomial (the identity) has a nonzero coefficient.
  [[nodiscard]] bool involves_identity() const;
  /// Human-readable form, e.g. "zeta_0^2 - zeta_1".
  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const PolynomialRelation&, const PolynomialRelation&) = default;

private:
  Terms terms_;
};

/// Sum over terms of coefficient * gens_0^{*i_0} * ... * gens_m^{*i_m}.
ArithFunction eval_polynomial(const PolynomialRelation& p, const std::vector<ArithFunction>& gens);

/// Basis of all polynomial relations of total degree <= max_degree among
/// zeta_0, ..., zeta_r that vanish on 1..N. Coefficients are primitive
/// integers with positive leading coefficient (in graded lexicographic
/// order of monomials). An empty result means no relation survives the
/// truncation; it does not prove independence.
std::vector<PolynomialRelation> carlitz_kernel(unsigned r, unsigned max_degree, std::size_t n);

std::vector<std::string> zeta_generator_names(unsigned r);

}  // namespace zg
