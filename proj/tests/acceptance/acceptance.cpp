// End-to-end acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes except those pinned in
// kKnownRed, which must fail on their analyzed check alone. Any other
// failure, or any criterion slower than kTimeLimit, makes the run fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <mpfr.h>

#include "oracles.hpp"
#include "zetagamma/dirichlet_ring.hpp"
#include "zetagamma/errors.hpp"
#include "zetagamma/exponent_lattice.hpp"
#include "zetagamma/relation_probe.hpp"
#include "zetagamma/verdict_engine.hpp"

using namespace zg;

namespace {

constexpr double kTimeLimit = 60.0;               // seconds per criterion
constexpr long kLogCheckDigits = 50;              // numeric log cross-check precision
constexpr long kLogCheckTolerance = 30;           // |sum a_i log x_i| < 10^-30
const Rational kLovaszDelta(99, 100);
const RelationQuery kProbeQuery{3, Int(1000), 40};
const RelationQuery kNoneFoundQuery{4, Int(10000), 40};

// Criterion 9 asks for an empty kernel at (r=2, degree 3, N=60). With the
// unit epsilon among the monomials, L = 2e - 6 zeta_0 + 5 zeta_1 - zeta_2
// satisfies L(1) = L(2) = L(3) = 0, so L^{*3} vanishes on 1..63 and the
// kernel has dimension 1 until N = 64.
const std::set<int> kKnownRed = {9};

struct Outcome {
  bool pass = true;
  bool unexpected = false;  // failed somewhere other than a pinned check
  std::string detail;
  void require(bool ok, const std::string& what, bool pinned = false) {
    if (!ok) {
      pass = false;
      unexpected = unexpected || !pinned;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

CanonicalGamma cg(const std::string& text) { return canonicalize(parse_gamma(text)); }

bool power_of(std::uint64_t n, std::uint64_t b) {
  while (n % b == 0) n /= b;
  return n == 1;
}

std::vector<std::uint64_t> range_set(std::uint64_t N, const std::function<bool(std::uint64_t)>& keep) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= N; ++n)
    if (keep(n)) out.push_back(n);
  return out;
}

ExceptionalSetReport synthetic(std::uint64_t N, const std::vector<std::uint64_t>& alg,
                               const std::vector<std::uint64_t>& trans) {
  ExceptionalSetReport r;
  r.gamma = cg("const:pi");
  r.N = N;
  r.verdicts.assign(N, Verdict{});
  for (auto n : alg) r.verdicts[n - 1] = Verdict{Status::Algebraic, Rule::R1, Rational(1), Condition::Unconditional};
  for (auto n : trans) r.verdicts[n - 1] = Verdict{Status::Transcendental, Rule::R3, {}, Condition::Unconditional};
  return r;
}

// Reports shared by criteria 1-5.
std::vector<ExceptionalSetReport> g_reports;

Outcome c1() {
  Outcome o;
  ExceptionalSetReport r = exceptional_set(cg("rat:3/5"), 200, {});
  g_reports.push_back(r);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const Verdict& v = r.at(n);
    if (v.status != Status::Algebraic || v.rule != Rule::R2 || v.condition != Condition::Unconditional)
      o.require(false, "n=" + std::to_string(n) + " is " + to_string(v.status) + "/" + to_string(v.rule));
  }
  return o;
}

Outcome c2() {
  Outcome o;
  ExceptionalSetReport r = exceptional_set(cg("alg:x^2-2@[1,2]"), 200, {});
  g_reports.push_back(r);
  o.require(r.at(1).status == Status::Algebraic, "n=1 not Algebraic");
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const Verdict& v = r.at(n);
    if (v.status != Status::Transcendental || v.rule != Rule::R3 || v.condition != Condition::Unconditional)
      o.require(false, "n=" + std::to_string(n) + " is " + to_string(v.status) + "/" + to_string(v.rule));
  }
  return o;
}

Outcome c3() {
  Outcome o;
  ExceptionalSetReport r = exceptional_set(cg("logratio:3/2"), 1000, {});
  g_reports.push_back(r);
  std::vector<std::uint64_t> powers = range_set(512, [](std::uint64_t n) { return power_of(n, 2); });
  o.require(r.algebraic_set() == powers, "Algebraic set is not {1,2,...,512}");
  for (unsigned k = 1; k <= 9; ++k) {
    std::uint64_t n = 1ULL << k;
    std::optional<IntPoly> w = witness_polynomial(r.at(n).witness);
    IntPoly want({-int_pow(Int(3), k), Int(1)});
    o.require(w && *w == want, "witness at " + std::to_string(n) + " is not x-3^" + std::to_string(k));
  }
  for (std::uint64_t n = 1; n <= 1000; ++n)
    if (!power_of(n, 2) && r.at(n).status != Status::Unknown) o.require(false, std::to_string(n) + " not Unknown");
  o.require(r.representant == Representant{2, Provenance::Conditional}, "representant is not B=2");

  ExceptionalSetReport c = exceptional_set(cg("logratio:3/2"), 1000, {false, true});
  g_reports.push_back(c);
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    if (power_of(n, 2)) continue;
    const Verdict& v = c.at(n);
    if (v.status != Status::Transcendental || v.condition != Condition::Conjecture1)
      o.require(false, std::to_string(n) + " did not flip under conjecture1");
  }
  o.require(c.algebraic_set() == powers, "Algebraic set changed under conjecture1");
  return o;
}

Outcome c4() {
  Outcome o;
  ExceptionalSetReport a = exceptional_set(cg("logratio:9/4"), 500, {});
  ExceptionalSetReport b = exceptional_set(cg("logratio:3/2"), 500, {});
  g_reports.push_back(a);
  g_reports.push_back(b);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    const Verdict& x = a.at(n);
    const Verdict& y = b.at(n);
    if (x.status != y.status || x.rule != y.rule || x.condition != y.condition)
      o.require(false, "differs at n=" + std::to_string(n));
  }
  o.require(a.representant == b.representant, "representants differ");
  return o;
}

Outcome c5() {
  Outcome o;
  o.require(g_reports.size() == 6, "criteria 1-4 reports missing");
  for (const auto& r : g_reports) o.require(check_prop3(r).ok(), "violation on " + to_string(r.gamma.canonical));
  Prop3Result bad = check_prop3(synthetic(10, {1, 2, 3, 5}, {}));
  o.require(!bad.ok() && *bad.violation == std::array<std::uint64_t, 3>{2, 3, 5}, "synthetic {1,2,3,5} not Violation(2,3,5)");
  return o;
}

Outcome c6() {
  Outcome o;
  const std::vector<std::string> gammas = {"rat:3/5",         "rat:-2/7",     "alg:x^2-2@[1,2]", "alg:x^2+1@[-1,1]x[0,2]",
                                           "alg:x^3-2@[1,2]", "logratio:3/2", "logratio:5/27",   "logratio:10/8",
                                           "logratio:7/12",   "const:pi",     "const:e",         "num:0.5772156649~10"};
  std::mt19937_64 rng(6);
  int reports = 0, violations = 0;
  for (int i = 0; i < 1000; ++i) {
    long num = static_cast<long>(rng() % 17) - 8;
    Rational Q = make_rational(num == 0 ? 1 : num, static_cast<long>(rng() % 9) + 1);
    CanonicalGamma g = scaled(cg(gammas[rng() % gammas.size()]), Q);
    std::uint64_t N = rng() % 400 + 1;
    ExceptionalSetReport r = exceptional_set(g, N, {(rng() & 1U) != 0, (rng() & 2U) != 0});
    ++reports;
    if (!closure_check(r).empty()) ++violations;
  }
  o.require(violations == 0, std::to_string(violations) + " of " + std::to_string(reports) + " reports not closed");
  auto power = closure_check(synthetic(10, {1, 2}, {4}));
  o.require(!power.empty() && power.front().rule == "power", "power fixture not detected");
  auto product = closure_check(synthetic(10, {1, 2, 6}, {3}));
  bool found = false;
  for (const auto& v : product) found = found || (v.rule == "product" && v.points == std::vector<std::uint64_t>{2, 3, 6});
  o.require(found, "product fixture not detected");
  return o;
}

Outcome c7() {
  Outcome o;
  for (const char* text : {"const:pi", "const:e"}) {
    ExceptionalSetReport r = exceptional_set(cg(text), 100, {true, false});
    o.require(r.algebraic_set() == std::vector<std::uint64_t>{1}, std::string(text) + " Algebraic set is not {1}");
    int conditional = 0;
    for (std::uint64_t n = 2; n <= 100; ++n)
      if (r.at(n).status == Status::Transcendental && r.at(n).condition == Condition::Schanuel) ++conditional;
    o.require(conditional == 99, std::string(text) + ": " + std::to_string(conditional) + " Schanuel points");
  }
  ExceptionalSetReport i = exceptional_set(cg("alg:x^2+1@[-1,1]x[0,2]"), 100, {true, false});
  o.require(i.algebraic_set() == std::vector<std::uint64_t>{1}, "i: Algebraic set is not {1}");
  for (std::uint64_t n = 2; n <= 100; ++n)
    if (i.at(n).rule != Rule::R3 || i.at(n).condition != Condition::Unconditional)
      o.require(false, "i at n=" + std::to_string(n) + " not R3/Unconditional");
  return o;
}

Outcome c8() {
  Outcome o;
  BoundCertificate c = schanuel_bound(Prop6Query{cg("const:pi"), {2, 3, 5}});
  o.require(c.bound == 2, "bound is " + std::to_string(c.bound));
  o.require(c.condition == Condition::Schanuel, "condition is not Schanuel");
  for (const auto& h : c.hypothesis_checks) o.require(h.passed && h.method == CheckMethod::Exact, h.name + " not Exact/passed");
  try {
    schanuel_bound(Prop6Query{cg("const:pi"), {2, 4}});
    o.require(false, "(2,4) accepted");
  } catch (const RejectedQuery& e) {
    bool named = false;
    for (const auto& h : e.certificate().hypothesis_checks)
      named = named || (!h.passed && h.name == "n_1..n_k multiplicatively independent");
    o.require(named, "rejection does not name the multiplicative-independence check");
  }
  return o;
}

Outcome c9() {
  Outcome o;
  std::vector<PolynomialRelation> k60 = carlitz_kernel(2, 3, 60);
  o.require(k60.empty(), "carlitz_kernel(2,3,60) has dimension " + std::to_string(k60.size()) +
                             " (L^{*3}, L = 2e - 6 zeta_0 + 5 zeta_1 - zeta_2, vanishes below 64; empty from N = 64: " +
                             (carlitz_kernel(2, 3, 64).empty() ? "yes" : "no") + ")",
            true);
  std::size_t k1 = carlitz_kernel(1, 1, 1).size();
  o.require(k1 == 2, "carlitz_kernel(1,1,1) has dimension " + std::to_string(k1));
  return o;
}

bool log_sum_small(const std::vector<std::uint64_t>& xs, const IntVector& a) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(kLogCheckDigits * 3.33) + 16;
  mpfr_t sum, t, tol;
  mpfr_inits2(prec, sum, t, tol, nullptr);
  mpfr_set_zero(sum, 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mpfr_set_ui(t, xs[i], MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    mpfr_mul_z(t, t, a[i].get_mpz_t(), MPFR_RNDN);
    mpfr_add(sum, sum, t, MPFR_RNDN);
  }
  mpfr_set_ui(tol, 10, MPFR_RNDN);
  mpfr_pow_si(tol, tol, -kLogCheckTolerance, MPFR_RNDN);
  bool ok = mpfr_cmpabs(sum, tol) < 0;
  mpfr_clears(sum, t, tol, nullptr);
  return ok;
}

Outcome c10() {
  Outcome o;
  std::mt19937_64 rng(10);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
  int dependent = 0;
  for (int i = 0; i < 500; ++i) {
    std::size_t k = 2 + rng() % 4;
    std::vector<std::uint64_t> xs;
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t x = 1;
      for (int f = 0; f < 1 + static_cast<int>(rng() % 6); ++f) x *= primes[rng() % (2 + rng() % 5)];
      xs.push_back(x);
    }
    IndependenceResult r = mult_independent(xs);
    if (r.independent) continue;
    ++dependent;
    const IntVector& a = r.certificate->exponents;
    o.require(verify_certificate(xs, *r.certificate), "certificate fails exact check");
    // independent re-check from trial factorization
    std::map<std::uint64_t, Int> total;
    for (std::size_t j = 0; j < xs.size(); ++j)
      for (auto [p, e] : oracle::trial_factor(xs[j])) total[p] += a[j] * static_cast<long>(e);
    bool zero = true;
    for (const auto& [p, e] : total) zero = zero && e == 0;
    o.require(zero, "certificate fails trial-division check");
    o.require(log_sum_small(xs, a), "log cross-check above 1e-30");
  }
  o.require(dependent >= 100, "only " + std::to_string(dependent) + " dependent tuples");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(dependent) + " dependent certificates checked";
  return o;
}

Outcome c11() {
  Outcome o;
  int mismatches = 0;
  for (const char* g : {"logratio:3/2", "logratio:3/4", "rat:1/3", "alg:x^2-2@[1,2]"})
    for (std::uint64_t n = 1; n <= 64; ++n)
      if (probe_point(n, parse_gamma(g), kProbeQuery).kind == ProbeKind::Mismatch) ++mismatches;
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  Gamma sqrt2 = parse_gamma("alg:x^2-2@[1,2]");
  RelationResult none = find_integer_relation([&](long d) { return eval_power(2, sqrt2, d); }, kNoneFoundQuery);
  o.require(!none.found(), "2^sqrt2 gave a candidate");
  Gamma lr = parse_gamma("logratio:3/2");
  RelationResult r27 = find_integer_relation([&](long d) { return eval_power(8, lr, d); }, kProbeQuery);
  o.require(r27.found() && *r27.polynomial == parse_poly("x-27"), "8^(log3/log2) did not give x-27");
  return o;
}

Outcome c12() {
  Outcome o;
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> entry(-1000000, 1000000);
  int done = 0;
  while (done < 200) {
    std::size_t dim = 2 + rng() % 7;
    IntBasis b(dim, IntVector(dim));
    for (auto& row : b)
      for (auto& x : row) x = entry(rng);
    if (oracle::gram_determinant(b) == 0) continue;
    ++done;
    IntBasis r = lll_reduce(b, kLovaszDelta);
    if (!oracle::is_lll_reduced(r, kLovaszDelta)) o.require(false, "basis " + std::to_string(done) + " not reduced");
    if (!oracle::same_lattice(b, r)) o.require(false, "basis " + std::to_string(done) + " changed lattice");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"rational exponent: all 200 points Algebraic via R2", c1},
      {"algebraic irrational exponent: only n=1 Algebraic", c2},
      {"log3/log2 at N=1000: powers of 2 with witnesses, conjecture1 flip, B=2", c3},
      {"scaling: logratio:9/4 and logratio:3/2 agree on 1..500", c4},
      {"three-point check on criteria 1-4 reports and the {1,2,3,5} fixture", c5},
      {"closure on 1000 random reports and both fixtures", c6},
      {"pi, e under Schanuel and i unconditionally give {1}", c7},
      {"prop6 bound on (2,3,5), rejection of (2,4)", c8},
      {"carlitz kernels at (2,3,60) and (1,1,1)", c9},
      {"500 multdep runs: certificates verify exactly and numerically", c10},
      {"probe agreement, 2^sqrt2 NoneFound, 8^(log3/log2) -> x-27", c11},
      {"200 random bases: size-reduced, Lovasz 0.99, same lattice", c12},
  };
  bool ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kTimeLimit) o.require(false, "took " + std::to_string(secs) + " s");
    std::printf("criterion %2d %s  %s (%.2f s)%s%s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    const bool known = kKnownRed.count(id) > 0;
    if (o.unexpected || (!o.pass && !known)) ok = false;
    if (o.pass && known) {
      std::printf("criterion %2d was expected to fail; update kKnownRed\n", id);
      ok = false;
    }
  }
  std::printf("%s\n", ok ? "acceptance: all criteria as expected" : "acceptance: unexpected result");
  return ok ? 0 : 1;
}
