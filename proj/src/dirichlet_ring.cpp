#include "zetagamma/dirichlet_ring.hpp"

#include <algorithm>
#include <numeric>

#include "zetagamma/errors.hpp"
#include "zetagamma/linalg.hpp"

namespace zg {

ArithFunction::ArithFunction(std::vector<Rational> values, std::optional<std::string> label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) fail(ErrorKind::InvalidTruncation, "arithmetic function needs truncation N >= 1");
}

ArithFunction ArithFunction::truncated(std::size_t n) const {
  if (n == 0 || n > truncation())
    fail(ErrorKind::InvalidTruncation, "cannot truncate to N = " + std::to_string(n));
  return ArithFunction({values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n)}, label_);
}

bool ArithFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return q == 0; });
}

static void require_same_truncation(const ArithFunction& f, const ArithFunction& g) {
  if (f.truncation() != g.truncation())
    fail(ErrorKind::TruncationMismatch, "truncations differ: " + std::to_string(f.truncation()) +
                                            " vs " + std::to_string(g.truncation()));
}

ArithFunction operator+(const ArithFunction& f, const ArithFunction& g) {
  require_same_truncation(f, g);
  std::vector<Rational> v(f.truncation());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.values()[i] + g.values()[i];
  return ArithFunction(std::move(v));
}

ArithFunction operator*(const Rational& c, const ArithFunction& f) {
  std::vector<Rational> v(f.values());
  for (auto& x : v) x *= c;
  return ArithFunction(std::move(v));
}

ArithFunction zeta_k(long k, std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidTruncation, "zeta_k needs truncation N >= 1");
  std::vector<Rational> v(n);
  auto e = static_cast<unsigned long>(k < 0 ? -k : k);
  for (std::size_t i = 1; i <= n; ++i) {
    Int p = int_pow(Int(static_cast<unsigned long>(i)), e);
    v[i - 1] = k < 0 ? Rational(Int(1), p) : Rational(p);
  }
  return ArithFunction(std::move(v), "zeta_" + std::to_string(k));
}

ArithFunction epsilon(std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidTruncation, "epsilon needs truncation N >= 1");
  std::vector<Rational> v(n, Rational(0));
  v[0] = 1;
  return ArithFunction(std::move(v), "epsilon");
}

ArithFunction zero_function(std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidTruncation, "zero function needs truncation N >= 1");
  return ArithFunction(std::vector<Rational>(n, Rational(0)), "zero");
}

ArithFunction convolve(const ArithFunction& f, const ArithFunction& g) {
  require_same_truncation(f, g);
  const std::size_t n = f.truncation();
  std::vector<Rational> h(n, Rational(0));
  const auto& fv = f.values();
  const auto& gv = g.values();
  for (std::size_t d = 1; d <= n; ++d) {
    if (fv[d - 1] == 0) continue;
    for (std::size_t k = 1; d * k <= n; ++k) {
      if (gv[k - 1] != 0) h[d * k - 1] += fv[d - 1] * gv[k - 1];
    }
  }
  return ArithFunction(std::move(h));
}

ArithFunction conv_pow(const ArithFunction& f, unsigned i) {
  ArithFunction result = epsilon(f.truncation());
  ArithFunction base = f;
  // square-and-multiply; convolution is commutative and associative
  while (i > 0) {
    if (i & 1U) result = convolve(result, base);
    i >>= 1U;
    if (i > 0) base = convolve(base, base);
  }
  return result;
}

unsigned MonomialIndex::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0U);
}

bool MonomialIndex::is_identity() const {
  return std::all_of(exponents.begin(), exponents.end(), [](unsigned e) { return e == 0; });
}

bool GradedLexLess::operator()(const MonomialIndex& a, const MonomialIndex& b) const {
  unsigned da = a.degree();
  unsigned db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.exponents.begin(), a.exponents.end(), b.exponents.begin(),
                                      b.exponents.end());
}

std::vector<MonomialIndex> enumerate_monomials(std::size_t generators, unsigned max_degree) {
  std::vector<MonomialIndex> out;
  std::vector<unsigned> current(generators, 0);
  // depth-first over compositions of each total degree
  auto fill = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == generators) {
      current[pos] = remaining;
      out.push_back({current});
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      current[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  for (unsigned d = 0; d <= max_degree; ++d) {
    if (generators == 0) {
      if (d == 0) out.push_back({});
      continue;
    }
    fill(fill, 0, d);
  }
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

Int monomial_count(std::size_t generators, unsigned max_degree) {
  Int c;
  mpz_bin_uiui(c.get_mpz_t(), generators + max_degree, max_degree);
  return c;
}

PolynomialRelation::PolynomialRelation(const std::vector<std::pair<MonomialIndex, Rational>>& terms) {
  for (const auto& [index, coefficient] : terms) add_term(index, coefficient);
}

void PolynomialRelation::add_term(const MonomialIndex& index, const Rational& coefficient) {
  auto [it, inserted] = terms_.try_emplace(index, coefficient);
  if (!inserted) it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

bool PolynomialRelation::involves_identity() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_identity(); });
}

std::string PolynomialRelation::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest monomial first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [index, c] = *it;
    std::string mono;
    for (std::size_t j = 0; j < index.exponents.size(); ++j) {
      unsigned e = index.exponents[j];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += j < names.size() ? names[j] : "f" + std::to_string(j);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Rational mag = abs(c);
    std::string coef = zg::to_string(mag);
    std::string term;
    if (mono.empty()) term = coef;
    else if (mag == 1) term = mono;
    else term = coef + "*" + mono;
    if (out.empty()) out = c < 0 ? "-" + term : term;
    else out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

ArithFunction eval_polynomial(const PolynomialRelation& p, const std::vector<ArithFunction>& gens) {
  if (gens.empty()) fail(ErrorKind::RelationArity, "eval_polynomial needs at least one generator");
  const std::size_t n = gens.front().truncation();
  for (const auto& g : gens) require_same_truncation(gens.front(), g);

  std::vector<std::vector<ArithFunction>> powers(gens.size());
  auto power = [&](std::size_t j, unsigned e) -> const ArithFunction& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(epsilon(n));
    while (cache.size() <= e) cache.push_back(convolve(cache.back(), gens[j]));
    return cache[e];
  };

  ArithFunction total = zero_function(n);
  for (const auto& [index, c] : p.terms()) {
    if (index.exponents.size() != gens.size())
      fail(ErrorKind::RelationArity, "monomial has " + std::to_string(index.exponents.size()) +
                                         " exponents but " + std::to_string(gens.size()) + " generators were given");
    ArithFunction mono = epsilon(n);
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (index.exponents[j] > 0) mono = convolve(mono, power(j, index.exponents[j]));
    total = total + c * mono;
  }
  return total;
}

std::vector<std::string> zeta_generator_names(unsigned r) {
  std::vector<std::string> names;
  for (unsigned k = 0; k <= r; ++k) names.push_back("zeta_" + std::to_string(k));
  return names;
}

std::vector<PolynomialRelation> carlitz_kernel(unsigned r, unsigned max_degree, std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidTruncation, "carlitz_kernel needs N >= 1");
  if (max_degree == 0) fail(ErrorKind::InvalidInput, "carlitz_kernel needs max_deg >= 1");
  const std::size_t gens = r + 1;
  std::vector<MonomialIndex> monomials = enumerate_monomials(gens, max_degree);

  std::vector<std::vector<ArithFunction>> powers(gens);
  for (std::size_t j = 0; j < gens; ++j) {
    ArithFunction z = zeta_k(static_cast<long>(j), n);
    powers[j].push_back(epsilon(n));
    for (unsigned e = 1; e <= max_degree; ++e) powers[j].push_back(convolve(powers[j].back(), z));
  }

  // columns: monomials; rows: n = 1..N
  RationalMatrix m(n, std::vector<Rational>(monomials.size()));
  for (std::size_t c = 0; c < monomials.size(); ++c) {
    ArithFunction value = epsilon(n);
    for (std::size_t j = 0; j < gens; ++j)
      if (monomials[c].exponents[j] > 0) value = convolve(value, powers[j][monomials[c].exponents[j]]);
    for (std::size_t row = 0; row < n; ++row) m[row][c] = value.values()[row];
  }

  std::vector<PolynomialRelation> relations;
  for (const auto& v : rational_nullspace(m, monomials.size())) {
    PolynomialRelation rel;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) rel.add_term(monomials[c], Rational(v[c]));
    relations.push_back(std::move(rel));
  }
  return relations;
}

}  // namespace zg
