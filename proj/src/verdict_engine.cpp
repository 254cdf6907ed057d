#include "zetagamma/verdict_engine.hpp"

#include <algorithm>

#include "zetagamma/exponent_lattice.hpp"
#include "zetagamma/linalg.hpp"
#include "zetagamma/relation_probe.hpp"

namespace zg {
namespace {

int strength(Condition c) {
  switch (c) {
    case Condition::Unconditional: return 2;
    case Condition::Conjecture1: return 1;
    case Condition::Schanuel: return 0;
  }
  return 0;
}

Verdict algebraic(Rule rule, Witness w, Condition c = Condition::Unconditional) {
  return {Status::Algebraic, rule, std::move(w), c};
}

Verdict transcendental(Rule rule, Condition c) { return {Status::Transcendental, rule, std::monostate{}, c}; }

bool is_power_of(std::uint64_t n, std::uint64_t base) {
  return n == 1 || perfect_power_root(n).base == base;
}

// B as far as it follows from gamma alone.
std::optional<std::uint64_t> known_base(const CanonicalGamma& g) {
  if (const auto* l = std::get_if<LogRatioGamma>(&g.canonical)) return l->b;
  if (is_algebraic_irrational(g)) return 1;
  return std::nullopt;
}

bool triple_independent(std::uint64_t x, std::uint64_t y, std::uint64_t z) {
  std::uint64_t t[] = {x, y, z};
  return mult_independent(t).independent;
}

template <typename T>
T parse_enum(const std::string& s, std::initializer_list<T> values, const char* what) {
  for (T v : values)
    if (to_string(v) == s) return v;
  fail(ErrorKind::ParseError, std::string("unknown ") + what + " '" + s + "'");
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Algebraic: return "Algebraic";
    case Status::Transcendental: return "Transcendental";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::Unconditional: return "Unconditional";
    case Condition::Conjecture1: return "Conjecture1";
    case Condition::Schanuel: return "Schanuel";
  }
  return "?";
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::None: return "none";
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
    case Rule::R4: return "R4";
    case Rule::R5: return "R5";
    case Rule::R6: return "R6";
    case Rule::R7: return "R7";
    case Rule::Up: return "R-up";
    case Rule::Down: return "R-down";
    case Rule::Product: return "R-product";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Determined: return "Determined";
    case Provenance::Conditional: return "Conditional";
    case Provenance::Undetermined: return "Undetermined";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  return parse_enum(s, {Status::Algebraic, Status::Transcendental, Status::Unknown}, "status");
}

Condition parse_condition(const std::string& s) {
  return parse_enum(s, {Condition::Unconditional, Condition::Conjecture1, Condition::Schanuel}, "condition");
}

Rule parse_rule(const std::string& s) {
  return parse_enum(s,
                    {Rule::None, Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5, Rule::R6, Rule::R7, Rule::Up,
                     Rule::Down, Rule::Product},
                    "rule");
}

Provenance parse_provenance(const std::string& s) {
  return parse_enum(s, {Provenance::Determined, Provenance::Conditional, Provenance::Undetermined}, "provenance");
}

std::string to_string(BoundRule r) {
  switch (r) {
    case BoundRule::Prop5: return "prop5";
    case BoundRule::Prop6: return "prop6";
    case BoundRule::Prop7: return "prop7";
  }
  return "?";
}

std::string to_string(CheckMethod m) { return m == CheckMethod::Exact ? "Exact" : "NumericHeuristic"; }

std::string witness_string(const Witness& w) {
  struct Printer {
    std::string operator()(std::monostate) const { return "-"; }
    std::string operator()(const Rational& r) const { return to_string(r); }
    std::string operator()(const IntPoly& p) const { return "minpoly(" + to_string(p) + ")"; }
    std::string operator()(const PowerWitness& p) const {
      std::string s = "n^" + to_string(p.q) + "=" + std::to_string(p.b) + "^" + to_string(p.p) + " value=" +
                      std::to_string(p.a) + "^" + to_string(p.value_exponent);
      const Rational& e = p.value_exponent;
      if (e.get_den() == 1 && e >= 0 && e <= 64) s += "=" + to_string(int_pow(to_int(p.a), e.get_num().get_ui()));
      return s;
    }
    std::string operator()(const DerivedWitness& d) const {
      return "(" + std::to_string(d.source) + "^gamma)^" + to_string(d.power);
    }
  };
  return std::visit(Printer{}, w);
}

std::optional<IntPoly> witness_polynomial(const Witness& w) {
  if (const auto* r = std::get_if<Rational>(&w)) return IntPoly({-r->get_num(), r->get_den()});
  if (const auto* p = std::get_if<IntPoly>(&w)) return *p;
  if (const auto* p = std::get_if<PowerWitness>(&w)) return power_minimal_polynomial(p->a, p->value_exponent);
  return std::nullopt;
}

Condition weakest(Condition a, Condition b) { return strength(a) <= strength(b) ? a : b; }

Verdict merge_verdicts(const Verdict& current, const Verdict& incoming) {
  if (incoming.status == Status::Unknown) return current;
  if (current.status == Status::Unknown) return incoming;
  if (current.status != incoming.status)
    fail(ErrorKind::InternalInconsistency, "rule " + to_string(current.rule) + " gives " + to_string(current.status) +
                                               " but rule " + to_string(incoming.rule) + " gives " +
                                               to_string(incoming.status));
  return strength(incoming.condition) > strength(current.condition) ? incoming : current;
}

Verdict classify_point(const CanonicalGamma& g, std::uint64_t n, const AssumptionSet& a) {
  if (n == 0) fail(ErrorKind::InvalidInput, "points start at n = 1");
  if (const auto* r = std::get_if<RationalGamma>(&g.canonical)) {
    Rational e = r->value * g.scale;
    return algebraic(Rule::R2, power_minimal_polynomial(n, e));
  }
  Verdict v;
  if (n == 1) return algebraic(Rule::R1, Rational(1));

  if (is_algebraic_irrational(g)) v = merge_verdicts(v, transcendental(Rule::R3, Condition::Unconditional));

  if (const auto* l = std::get_if<LogRatioGamma>(&g.canonical)) {
    PerfectPower pp = perfect_power_root(n);
    if (pp.base == l->b) {
      Rational e = Rational(pp.exponent) * g.scale;
      e.canonicalize();
      v = merge_verdicts(v, algebraic(Rule::R4, PowerWitness{l->b, Int(pp.exponent), Int(1), l->a, e}));
    }
  }

  if (a.assume_conjecture1) {
    if (auto B = known_base(g); B && !(*B > 1 && is_power_of(n, *B)))
      v = merge_verdicts(v, transcendental(Rule::R6, Condition::Conjecture1));
  }

  if (a.assume_schanuel && std::holds_alternative<NamedGamma>(g.canonical))
    v = merge_verdicts(v, transcendental(Rule::R7, Condition::Schanuel));
  return v;
}

std::vector<std::uint64_t> ExceptionalSetReport::algebraic_set() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= verdicts.size(); ++n)
    if (verdicts[n - 1].status == Status::Algebraic) out.push_back(n);
  return out;
}

std::vector<Verdict> propagate(std::vector<Verdict> verdicts, bool six_exponentials) {
  const std::uint64_t N = verdicts.size();
  bool changed = true;
  auto update = [&](std::uint64_t n, const Verdict& incoming) {
    Verdict merged = merge_verdicts(verdicts[n - 1], incoming);
    if (!(merged == verdicts[n - 1])) {
      verdicts[n - 1] = std::move(merged);
      changed = true;
    }
  };

  while (changed) {
    changed = false;
    for (std::uint64_t n = 2; n <= N; ++n) {
      const Verdict v = verdicts[n - 1];
      if (v.status == Status::Unknown) continue;
      std::uint64_t m = n;
      for (unsigned k = 2; m <= N / n; ++k) {
        m *= n;
        Witness w = v.status == Status::Algebraic ? Witness(DerivedWitness{n, Rational(k)}) : Witness{};
        update(m, Verdict{v.status, Rule::Up, w, v.condition});
      }
      if (v.status == Status::Algebraic) {
        PerfectPower pp = perfect_power_root(n);
        std::uint64_t root = 1;
        for (unsigned j = 1; j < pp.exponent; ++j) {
          root *= pp.base;
          if (pp.exponent % j == 0)
            update(root, algebraic(Rule::Down, DerivedWitness{n, make_rational(j, pp.exponent)}, v.condition));
        }
      }
    }

    std::vector<std::uint64_t> alg, trans;
    for (std::uint64_t n = 2; n <= N; ++n) {
      if (verdicts[n - 1].status == Status::Algebraic) alg.push_back(n);
      if (verdicts[n - 1].status == Status::Transcendental) trans.push_back(n);
    }
    for (std::uint64_t x : alg)
      for (std::uint64_t t : trans) {
        if (t > N / x) break;
        Condition c = weakest(verdicts[x - 1].condition, verdicts[t - 1].condition);
        update(x * t, transcendental(Rule::Product, c));
      }

    std::optional<std::pair<std::uint64_t, std::uint64_t>> pair;
    for (std::size_t i = 0; six_exponentials && i < alg.size() && !pair; ++i)
      for (std::size_t j = i + 1; j < alg.size() && !pair; ++j) {
        std::uint64_t xy[] = {alg[i], alg[j]};
        if (mult_independent(xy).independent) pair = {alg[i], alg[j]};
      }
    if (pair) {
      Condition c = weakest(verdicts[pair->first - 1].condition, verdicts[pair->second - 1].condition);
      for (std::uint64_t n = 2; n <= N; ++n)
        if (triple_independent(pair->first, pair->second, n)) update(n, transcendental(Rule::R5, c));
    }
  }
  return verdicts;
}

ExceptionalSetReport exceptional_set(const CanonicalGamma& g, std::uint64_t N, const AssumptionSet& a) {
  if (N == 0) fail(ErrorKind::InvalidInput, "N must be at least 1");
  ExceptionalSetReport report;
  report.gamma = g;
  report.N = N;
  report.assumptions = a;
  report.verdicts.reserve(N);
  for (std::uint64_t n = 1; n <= N; ++n) report.verdicts.push_back(classify_point(g, n, a));
  report.verdicts = propagate(std::move(report.verdicts), !is_rational(g));
  report.representant = exceptional_representant(report);
  return report;
}

Representant exceptional_representant(const ExceptionalSetReport& report) {
  if (is_rational(report.gamma)) return {std::nullopt, Provenance::Undetermined};
  std::vector<std::uint64_t> alg = report.algebraic_set();
  if (alg.empty() || alg.front() != 1)
    fail(ErrorKind::InternalInconsistency, "n = 1 is not marked Algebraic");
  if (alg.size() == 1)
    return {1, is_algebraic_irrational(report.gamma) ? Provenance::Determined : Provenance::Undetermined};
  std::uint64_t B = perfect_power_root(alg[1]).base;
  if (report.at(B).status != Status::Algebraic)
    fail(ErrorKind::InternalInconsistency,
         std::to_string(alg[1]) + " is Algebraic but its root " + std::to_string(B) + " is not");
  for (std::uint64_t n : alg)
    if (!is_power_of(n, B))
      fail(ErrorKind::InternalInconsistency,
           "Algebraic point " + std::to_string(n) + " is not a power of " + std::to_string(B));
  return {B, Provenance::Conditional};
}

Prop3Result check_prop3(const ExceptionalSetReport& report) {
  if (is_rational(report.gamma)) return {};
  std::vector<std::uint64_t> alg;
  for (std::uint64_t n : report.algebraic_set())
    if (n > 1) alg.push_back(n);
  if (alg.size() < 3) return {};
  ExponentMatrix m = exponent_matrix(alg);
  if (integer_rank(m.rows, m.primes.size()) < 3) return {};
  for (std::size_t i = 0; i < alg.size(); ++i)
    for (std::size_t j = i + 1; j < alg.size(); ++j) {
      std::uint64_t xy[] = {alg[i], alg[j]};
      if (!mult_independent(xy).independent) continue;
      for (std::size_t k = j + 1; k < alg.size(); ++k)
        if (triple_independent(alg[i], alg[j], alg[k])) return {std::array{alg[i], alg[j], alg[k]}};
    }
  return {};
}

std::vector<ClosureViolation> closure_check(const ExceptionalSetReport& report) {
  std::vector<ClosureViolation> out;
  const std::uint64_t N = report.verdicts.size();
  auto status = [&](std::uint64_t n) { return report.verdicts[n - 1].status; };
  if (N >= 1 && status(1) != Status::Algebraic) out.push_back({"identity", {1}});
  for (std::uint64_t n = 2; n <= N; ++n) {
    std::uint64_t m = n;
    while (m <= N / n) {
      m *= n;
      if (status(n) == Status::Algebraic && status(m) != Status::Algebraic) out.push_back({"power", {n, m}});
      if (status(n) == Status::Transcendental && status(m) != Status::Transcendental) out.push_back({"power", {n, m}});
      if (status(m) == Status::Algebraic && status(n) != Status::Algebraic) out.push_back({"root", {m, n}});
    }
  }
  std::vector<std::uint64_t> trans;
  for (std::uint64_t n = 2; n <= N; ++n)
    if (status(n) == Status::Transcendental) trans.push_back(n);
  for (std::uint64_t x = 2; x <= N; ++x) {
    if (status(x) != Status::Algebraic) continue;
    for (std::uint64_t t : trans) {
      if (t > N / x) break;
      if (status(x * t) != Status::Transcendental) out.push_back({"product", {x, t, x * t}});
    }
  }
  return out;
}

namespace {

// Exact linear-independence test when every value lies in Q(sqrt d) for one d.
std::optional<HypothesisCheck> exact_linear_check(const std::vector<Gamma>& gammas, const std::string& name) {
  std::optional<Int> d;
  std::vector<std::pair<Rational, Rational>> coords{{Rational(1), Rational(0)}};
  for (const Gamma& g : gammas) {
    CanonicalGamma cg = canonicalize(g);
    if (const auto* r = std::get_if<RationalGamma>(&cg.canonical)) {
      coords.push_back({r->value * cg.scale, Rational(0)});
      continue;
    }
    const auto* a = std::get_if<AlgebraicGamma>(&g);
    if (!a) return std::nullopt;
    std::optional<QuadraticForm> f = quadratic_form(*a);
    if (!f || (d && *d != f->d)) return std::nullopt;
    d = f->d;
    coords.push_back({f->u, f->v});
  }
  RationalMatrix rows(2, std::vector<Rational>(coords.size()));
  for (std::size_t j = 0; j < coords.size(); ++j) {
    rows[0][j] = coords[j].first;
    rows[1][j] = coords[j].second;
  }
  std::vector<IntVector> kernel = rational_nullspace(rows, coords.size());
  HypothesisCheck c{name, CheckMethod::Exact, kernel.empty(), ""};
  if (d) c.detail = "common field Q(sqrt(" + to_string(*d) + "))";
  else c.detail = "all values rational";
  if (!kernel.empty()) {
    c.detail += "; relation (";
    for (std::size_t j = 0; j < kernel[0].size(); ++j) c.detail += (j ? "," : "") + to_string(kernel[0][j]);
    c.detail += ") on (1,gamma_1,...)";
  }
  return c;
}

HypothesisCheck linear_independence_check(const std::vector<Gamma>& gammas, const std::string& name) {
  if (auto exact = exact_linear_check(gammas, name)) return *exact;
  const long k = static_cast<long>(gammas.size());
  const long digits = std::max<long>(60, 10 + 7 * k);
  std::vector<num::ComplexBall> values{num::ComplexBall(num::RealBall::from_int(1, num::bits_for_digits(digits)))};
  for (const Gamma& g : gammas) values.push_back(evaluate(g, digits + 10));
  std::optional<LinearRelation> rel = find_linear_relation(values, Int(1000000), digits);
  HypothesisCheck c{name, CheckMethod::NumericHeuristic, !rel, ""};
  c.detail = "integer-relation search, height 10^6, " + std::to_string(digits) + " digits: ";
  if (!rel) {
    c.detail += "no relation";
  } else {
    c.detail += "relation (";
    for (std::size_t j = 0; j < rel->coefficients.size(); ++j)
      c.detail += (j ? "," : "") + to_string(rel->coefficients[j]);
    c.detail += ") on (1,gamma_1,...)";
  }
  return c;
}

void require_nonempty(std::size_t k) {
  if (k == 0) fail(ErrorKind::InvalidInput, "bound query needs at least one input");
}

void require_base(std::uint64_t n) {
  if (n < 2) fail(ErrorKind::InvalidInput, "bound query needs n >= 2");
}

}  // namespace

BoundCertificate schanuel_bound(const BoundQuery& query) {
  BoundCertificate cert;
  cert.inputs = query;
  if (const auto* q = std::get_if<Prop5Query>(&query)) {
    require_base(q->n);
    require_nonempty(q->gammas.size());
    for (const Gamma& g : q->gammas)
      if (!std::holds_alternative<AlgebraicGamma>(g))
        fail(ErrorKind::InvalidInput, "prop5 takes algebraic irrationals only, got " + to_string(g));
    const std::uint64_t k = q->gammas.size();
    cert.rule = BoundRule::Prop5;
    cert.bound = k + 1;
    cert.statement = "trdeg Q(log n, n^gamma_1, ..., n^gamma_k) >= k+1";
    cert.hypothesis_checks.push_back(linear_independence_check(q->gammas, "1,gamma_1..gamma_k linearly independent over Q"));
  } else if (const auto* q6 = std::get_if<Prop6Query>(&query)) {
    require_nonempty(q6->ns.size());
    const std::uint64_t k = q6->ns.size();
    cert.rule = BoundRule::Prop6;
    cert.bound = k - 1;
    cert.statement = "trdeg Q(n_1^gamma, ..., n_k^gamma) >= k-1";
    bool transc = is_known_transcendental(q6->gamma);
    cert.hypothesis_checks.push_back({"gamma transcendental", CheckMethod::Exact, transc,
                                      to_string(q6->gamma.canonical) +
                                          (transc ? " is a log-ratio or named constant" : " is not a known transcendental")});
    IndependenceResult ind = mult_independent(q6->ns);
    std::string detail = "exponent lattice";
    if (!ind.independent) {
      detail += "; certificate (";
      const IntVector& e = ind.certificate->exponents;
      for (std::size_t j = 0; j < e.size(); ++j) detail += (j ? "," : "") + to_string(e[j]);
      detail += ")";
    }
    cert.hypothesis_checks.push_back({"n_1..n_k multiplicatively independent", CheckMethod::Exact, ind.independent, detail});
  } else {
    const auto& q7 = std::get<Prop7Query>(query);
    require_base(q7.n);
    require_nonempty(q7.gammas.size());
    const std::uint64_t k = q7.gammas.size();
    cert.rule = BoundRule::Prop7;
    cert.bound = k - 1;
    cert.statement = "trdeg Q(e^gamma_1, ..., e^gamma_k, n^gamma_1, ..., n^gamma_k) >= k-1";
    cert.interpretation = "linear independence taken over Q, with 1 outside the span of the gammas";
    cert.hypothesis_checks.push_back(
        linear_independence_check(q7.gammas, "gamma_1..gamma_k linearly independent over Q with 1 outside their span"));
  }
  for (const HypothesisCheck& c : cert.hypothesis_checks)
    if (!c.passed) throw RejectedQuery("hypothesis '" + c.name + "' failed: " + c.detail, cert);
  return cert;
}

}  // namespace zg
