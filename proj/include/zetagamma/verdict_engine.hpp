#pragma once

// Three-valued classification of n^gamma driven by a fixed rule table.
//
//   R1         n = 1: Algebraic
//   R2         gamma rational: Algebraic, witness the minimal polynomial of n^gamma
//   R3         gamma algebraic irrational, n >= 2: Transcendental (Gelfond-Schneider)
//   R4         gamma = log a / log b, n a power of b's root: Algebraic, witness n^q = b^p
//   R5         two independent Algebraic points: anything independent of both is
//              Transcendental (six exponentials)
//   R6         conjecture1 assumed, B known: n outside {B^k} is Transcendental
//   R7         Schanuel assumed, gamma a rational multiple of pi or e, n >= 2:
//              Transcendental
//   R-up       Algebraic(n) => Algebraic(n^k), Transcendental(n) => Transcendental(n^k)
//   R-down     Algebraic(n^k) => Algebraic(n)
//   R-product  Algebraic(n) and Transcendental(m) => Transcendental(nm)

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zetagamma/errors.hpp"
#include "zetagamma/gamma_model.hpp"
#include "zetagamma/numbers.hpp"
#include "zetagamma/polynomial.hpp"

namespace zg {

enum class Status { Algebraic, Transcendental, Unknown };
enum class Condition { Unconditional, Conjecture1, Schanuel };
enum class Rule { None, R1, R2, R3, R4, R5, R6, R7, Up, Down, Product };

std::string to_string(Status s);
std::string to_string(Condition c);
std::string to_string(Rule r);
Status parse_status(const std::string& s);
Condition parse_condition(const std::string& s);
Rule parse_rule(const std::string& s);

/// n^q = b^p, hence n^gamma = a^value_exponent (a, b from the canonical
/// log-ratio; value_exponent = (p/q) * scale).
struct PowerWitness {
  std::uint64_t b = 2;
  Int p, q;
  std::uint64_t a = 2;
  Rational value_exponent;
  friend bool operator==(const PowerWitness&, const PowerWitness&) = default;
};

/// n^gamma = (source^gamma)^power, obtained by propagation.
struct DerivedWitness {
  std::uint64_t source = 1;
  Rational power;
  friend bool operator==(const DerivedWitness&, const DerivedWitness&) = default;
};

using Witness = std::variant<std::monostate, Rational, IntPoly, PowerWitness, DerivedWitness>;

struct Verdict {
  Status status = Status::Unknown;
  Rule rule = Rule::None;
  Witness witness;
  Condition condition = Condition::Unconditional;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string witness_string(const Witness& w);

/// Minimal polynomial of the witnessed value when it is available exactly.
std::optional<IntPoly> witness_polynomial(const Witness& w);

struct AssumptionSet {
  bool assume_schanuel = false;
  bool assume_conjecture1 = false;
  friend bool operator==(const AssumptionSet&, const AssumptionSet&) = default;
};

/// Weaker of two conditions: a conclusion drawn from both needs both.
Condition weakest(Condition a, Condition b);

/// The stronger of two derivations for the same point. Algebraic against
/// Transcendental raises InternalInconsistency.
Verdict merge_verdicts(const Verdict& current, const Verdict& incoming);

Verdict classify_point(const CanonicalGamma& g, std::uint64_t n, const AssumptionSet& a);

enum class Provenance { Determined, Conditional, Undetermined };
std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& s);

struct Representant {
  std::optional<std::uint64_t> B;
  Provenance provenance = Provenance::Undetermined;
  friend bool operator==(const Representant&, const Representant&) = default;
};

struct ExceptionalSetReport {
  CanonicalGamma gamma;
  std::uint64_t N = 1;
  AssumptionSet assumptions;
  std::vector<Verdict> verdicts;  // verdicts[n - 1]
  std::optional<Representant> representant;

  [[nodiscard]] const Verdict& at(std::uint64_t n) const { return verdicts.at(n - 1); }
  [[nodiscard]] std::vector<std::uint64_t> algebraic_set() const;
  friend bool operator==(const ExceptionalSetReport&, const ExceptionalSetReport&) = default;
};

/// Applies R-up, R-down, R-product and R5 until nothing changes. R5 needs
/// an irrational exponent and is skipped when `six_exponentials` is false.
std::vector<Verdict> propagate(std::vector<Verdict> verdicts, bool six_exponentials = true);

ExceptionalSetReport exceptional_set(const CanonicalGamma& g, std::uint64_t N, const AssumptionSet& a);

Representant exceptional_representant(const ExceptionalSetReport& report);

struct Prop3Result {
  std::optional<std::array<std::uint64_t, 3>> violation;
  [[nodiscard]] bool ok() const { return !violation; }
};

/// Looks for a multiplicatively independent triple among Algebraic points.
/// Rational gamma is accepted without search.
Prop3Result check_prop3(const ExceptionalSetReport& report);

struct ClosureViolation {
  std::string rule;  // identity | power | root | product
  std::vector<std::uint64_t> points;
  friend bool operator==(const ClosureViolation&, const ClosureViolation&) = default;
};

std::vector<ClosureViolation> closure_check(const ExceptionalSetReport& report);

// Schanuel-conditional transcendence degree bounds.

struct Prop5Query {
  std::uint64_t n = 2;
  std::vector<Gamma> gammas;  // algebraic irrationals
};
struct Prop6Query {
  CanonicalGamma gamma;
  std::vector<std::uint64_t> ns;
};
struct Prop7Query {
  std::uint64_t n = 2;
  std::vector<Gamma> gammas;
};
using BoundQuery = std::variant<Prop5Query, Prop6Query, Prop7Query>;

enum class BoundRule { Prop5, Prop6, Prop7 };
enum class CheckMethod { Exact, NumericHeuristic };
std::string to_string(BoundRule r);
std::string to_string(CheckMethod m);

struct HypothesisCheck {
  std::string name;
  CheckMethod method = CheckMethod::Exact;
  bool passed = false;
  std::string detail;
};

struct BoundCertificate {
  BoundRule rule = BoundRule::Prop5;
  BoundQuery inputs;
  std::uint64_t bound = 0;
  std::string statement;  // which numbers the bound is about
  std::vector<HypothesisCheck> hypothesis_checks;
  Condition condition = Condition::Schanuel;
  std::string interpretation;
};

class RejectedQuery : public Error {
public:
  RejectedQuery(const std::string& msg, BoundCertificate certificate)
      : Error(ErrorKind::RejectedQuery, msg), certificate_(std::move(certificate)) {}
  [[nodiscard]] const BoundCertificate& certificate() const noexcept { return certificate_; }

private:
  BoundCertificate certificate_;
};

/// Throws RejectedQuery naming the first failed hypothesis check.
BoundCertificate schanuel_bound(const BoundQuery& query);

}  // namespace zg
