#include "zetagamma/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetagamma/dirichlet_ring.hpp"
#include "zetagamma/errors.hpp"
#include "zetagamma/exponent_lattice.hpp"
#include "zetagamma/gamma_model.hpp"
#include "zetagamma/relation_probe.hpp"
#include "zetagamma/report_json.hpp"
#include "zetagamma/verdict_engine.hpp"

namespace zg::cli {
namespace {

using Json = nlohmann::ordered_json;

int exit_code(ErrorKind k) {
  if (k == ErrorKind::RejectedQuery) return 3;
  if (k == ErrorKind::InternalInconsistency) return 4;
  return 2;
}

Json header() { return Json{{"schema", kReportSchema}}; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string tuple_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

Json int_array(const IntVector& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()));
  return a;
}

ArithFunction parse_function(const std::string& text, std::size_t N) {
  if (text == "epsilon") return epsilon(N);
  if (text.rfind("zeta:", 0) == 0) {
    Int k = parse_int(text.substr(5));
    if (!k.fits_slong_p()) fail(ErrorKind::InvalidInput, "zeta index out of range");
    return zeta_k(k.get_si(), N);
  }
  if (text.rfind("values:", 0) == 0) {
    std::vector<Rational> values;
    std::stringstream ss(text.substr(7));
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_rational(item));
    if (values.size() != N)
      fail(ErrorKind::InvalidInput, "values list has " + std::to_string(values.size()) + " entries, expected N = " +
                                        std::to_string(N));
    return ArithFunction(std::move(values), "values");
  }
  fail(ErrorKind::ParseError, "unknown function '" + text + "' (expected zeta:k, epsilon or values:v1,v2,...)");
}

AssumptionSet assumptions(bool schanuel, bool conjecture1) { return {schanuel, conjecture1}; }

Json gamma_json(const CanonicalGamma& g) {
  return {{"canonical", to_string(g.canonical)}, {"scale", to_string(g.scale)}};
}

std::string verdict_line(std::uint64_t n, const Verdict& v) {
  std::ostringstream s;
  s << "n=" << n << " status=" << to_string(v.status) << " rule=" << to_string(v.rule)
    << " condition=" << to_string(v.condition) << " witness=" << witness_string(v.witness);
  return s.str();
}

std::string representant_line(const std::optional<Representant>& r) {
  if (!r) return "B=none provenance=Undetermined";
  return "B=" + (r->B ? std::to_string(*r->B) : std::string("none")) + " provenance=" + to_string(r->provenance);
}

void print_report_table(std::ostream& out, const ExceptionalSetReport& r) {
  out << "gamma=" << to_string(r.gamma.canonical) << " scale=" << to_string(r.gamma.scale) << " N=" << r.N
      << " schanuel=" << (r.assumptions.assume_schanuel ? "true" : "false")
      << " conjecture1=" << (r.assumptions.assume_conjecture1 ? "true" : "false") << '\n';
  out << std::left << std::setw(8) << "n" << std::setw(16) << "status" << std::setw(11) << "rule" << std::setw(15)
      << "condition"
      << "witness" << '\n';
  for (std::uint64_t n = 1; n <= r.verdicts.size(); ++n) {
    const Verdict& v = r.at(n);
    out << std::setw(8) << n << std::setw(16) << to_string(v.status) << std::setw(11) << to_string(v.rule)
        << std::setw(15) << to_string(v.condition) << witness_string(v.witness) << '\n';
  }
  std::string alg;
  for (std::uint64_t n : r.algebraic_set()) alg += (alg.empty() ? "" : ",") + std::to_string(n);
  out << "algebraic={" << alg << "}\n";
  out << "representant " << representant_line(r.representant) << '\n';
}

Json check_json(const Prop3Result& p3, const std::vector<ClosureViolation>& closure) {
  Json j = header();
  j["prop3"] = {{"ok", p3.ok()}, {"triple", p3.violation ? Json(*p3.violation) : Json(nullptr)}};
  Json v = Json::array();
  for (const ClosureViolation& c : closure) v.push_back({{"rule", c.rule}, {"points", c.points}});
  j["closure"] = std::move(v);
  return j;
}

void print_check(std::ostream& out, const Prop3Result& p3, const std::vector<ClosureViolation>& closure) {
  if (p3.ok()) out << "prop3=ok\n";
  else out << "prop3=violation(" << (*p3.violation)[0] << "," << (*p3.violation)[1] << "," << (*p3.violation)[2] << ")\n";
  if (closure.empty()) {
    out << "closure=ok\n";
    return;
  }
  out << "closure=violations count=" << closure.size() << '\n';
  for (const ClosureViolation& c : closure) {
    out << "violation " << c.rule;
    for (std::uint64_t n : c.points) out << ' ' << n;
    out << '\n';
  }
}

Json certificate_json(const BoundCertificate& c) {
  Json j = header();
  j["rule"] = to_string(c.rule);
  j["bound"] = c.bound;
  j["statement"] = c.statement;
  j["condition"] = to_string(c.condition);
  Json checks = Json::array();
  for (const HypothesisCheck& h : c.hypothesis_checks)
    checks.push_back({{"name", h.name}, {"method", to_string(h.method)}, {"passed", h.passed}, {"detail", h.detail}});
  j["hypothesis_checks"] = std::move(checks);
  if (!c.interpretation.empty()) j["interpretation"] = c.interpretation;
  return j;
}

void print_certificate(std::ostream& out, const BoundCertificate& c) {
  out << "bound=" << c.bound << " condition=" << to_string(c.condition) << '\n';
  out << "rule=" << to_string(c.rule) << " statement: " << c.statement << '\n';
  for (const HypothesisCheck& h : c.hypothesis_checks)
    out << "check " << (h.passed ? "passed" : "FAILED") << " method=" << to_string(h.method) << ": " << h.name << " ("
        << h.detail << ")\n";
  if (!c.interpretation.empty()) out << "interpretation: " << c.interpretation << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<Gamma> parse_gammas(const std::vector<std::string>& texts) {
  std::vector<Gamma> out;
  for (const std::string& t : texts) out.push_back(parse_gamma(t));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and conditional arithmetic of n^gamma", "zetagamma"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  bool json = false;
  bool schanuel = false;
  bool conjecture1 = false;
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", json, "Machine-readable JSON output"); };
  auto add_assumptions = [&](CLI::App* s) {
    s->add_flag("--assume-schanuel", schanuel, "Assume Schanuel's conjecture");
    s->add_flag("--assume-conjecture1", conjecture1, "Assume the exceptional set is {B^k : k >= 0}");
  };

  // convolve
  std::vector<std::string> fns;
  std::size_t conv_N = 0;
  std::optional<unsigned> pow;
  CLI::App* convolve_cmd = app.add_subcommand("convolve", "Dirichlet convolution of truncated arithmetic functions");
  convolve_cmd->add_option("functions", fns, "Functions: zeta:k | epsilon | values:v1,v2,... (one with --pow, else two)")
      ->required()
      ->expected(1, 2);
  convolve_cmd->add_option("--N", conv_N, "Truncation N >= 1")->required();
  convolve_cmd->add_option("--pow", pow, "Convolution power i >= 0 of a single function");
  add_json(convolve_cmd);

  // carlitz
  unsigned carlitz_r = 0;
  unsigned carlitz_degree = 1;
  std::size_t carlitz_N = 0;
  CLI::App* carlitz_cmd = app.add_subcommand(
      "carlitz", "Relations among zeta_0..zeta_r surviving truncation N");
  carlitz_cmd->add_option("--r", carlitz_r, "Generators zeta_0..zeta_r")->required();
  carlitz_cmd->add_option("--degree", carlitz_degree,
                      "Maximal total degree D; C(r+1+D, D) monomials are searched")
      ->required();
  carlitz_cmd->add_option("--N", carlitz_N, "Truncation N >= 1")->required();
  add_json(carlitz_cmd);

  // multdep
  std::vector<std::uint64_t> multdep_ns;
  CLI::App* multdep_cmd = app.add_subcommand("multdep", "Exact multiplicative dependence of naturals");
  multdep_cmd->add_option("numbers", multdep_ns, "Naturals >= 1")->required();
  add_json(multdep_cmd);

  // canonicalize
  std::string gamma_text;
  std::optional<long> digits;
  CLI::App* canon_cmd = app.add_subcommand("canonicalize", "Canonical form of gamma up to rational scaling");
  canon_cmd->add_option("--gamma", gamma_text, "Exponent gamma")->required();
  canon_cmd->add_option("--digits", digits, "Also print gamma to this many significant digits");
  add_json(canon_cmd);

  // classify
  std::uint64_t point = 0;
  CLI::App* classify_cmd = app.add_subcommand("classify", "Verdict for a single n^gamma");
  classify_cmd->add_option("--gamma", gamma_text, "Exponent gamma")->required();
  classify_cmd->add_option("--n", point, "Point n >= 1")->required();
  add_assumptions(classify_cmd);
  add_json(classify_cmd);

  // exceptional-set
  std::uint64_t bound_N = 0;
  CLI::App* exset_cmd = app.add_subcommand("exceptional-set", "Verdicts for n = 1..N with the representant B");
  exset_cmd->add_option("--gamma", gamma_text, "Exponent gamma")->required();
  exset_cmd->add_option("--N", bound_N, "Range bound N >= 1")->required();
  add_assumptions(exset_cmd);
  add_json(exset_cmd);

  // representant
  std::string report_path;
  CLI::App* repr_cmd = app.add_subcommand("representant", "Exceptional representant B from the report on 1..N");
  auto* repr_gamma = repr_cmd->add_option("--gamma", gamma_text, "Exponent gamma");
  auto* repr_N = repr_cmd->add_option("--N", bound_N, "Range bound N >= 1");
  auto* repr_report = repr_cmd->add_option("--report", report_path, "Recompute from a report JSON file");
  repr_gamma->needs(repr_N);
  repr_N->needs(repr_gamma);
  repr_report->excludes(repr_gamma);
  repr_report->excludes(repr_N);
  add_assumptions(repr_cmd);
  add_json(repr_cmd);

  // check
  CLI::App* check_cmd = app.add_subcommand("check", "Three-point and closure consistency checks on a report");
  auto* check_gamma = check_cmd->add_option("--gamma", gamma_text, "Exponent gamma (report generated on the fly)");
  auto* check_N = check_cmd->add_option("--N", bound_N, "Range bound N >= 1");
  auto* check_report = check_cmd->add_option("--report", report_path, "Report JSON file");
  check_gamma->needs(check_N);
  check_N->needs(check_gamma);
  check_report->excludes(check_gamma);
  check_report->excludes(check_N);
  add_assumptions(check_cmd);
  add_json(check_cmd);

  // bound
  std::vector<std::string> bound_gammas;
  std::uint64_t bound_n = 2;
  std::vector<std::uint64_t> bound_ns;
  CLI::App* bound_cmd = app.add_subcommand("bound", "Schanuel-conditional transcendence degree bounds");
  bound_cmd->require_subcommand(1);
  CLI::App* prop5_cmd = bound_cmd->add_subcommand("prop5", "log n, n^gamma_1..n^gamma_k for algebraic gammas: bound k+1");
  prop5_cmd->add_option("--n", bound_n, "Base n >= 2")->required();
  prop5_cmd->add_option("--gamma", bound_gammas, "Algebraic irrational gamma (repeat for several)")->required();
  add_json(prop5_cmd);
  CLI::App* prop6_cmd = bound_cmd->add_subcommand("prop6", "n_1^gamma..n_k^gamma for transcendental gamma: bound k-1");
  prop6_cmd->add_option("--gamma", gamma_text, "Transcendental gamma")->required();
  prop6_cmd->add_option("--ns", bound_ns, "Comma-separated naturals n_1,..,n_k")->required()->delimiter(',');
  add_json(prop6_cmd);
  CLI::App* prop7_cmd = bound_cmd->add_subcommand("prop7", "e^gamma_i and n^gamma_i: bound k-1");
  prop7_cmd->add_option("--n", bound_n, "Base n >= 2")->required();
  prop7_cmd->add_option("--gamma", bound_gammas, "Gamma (repeat for several)")->required();
  add_json(prop7_cmd);

  // probe
  unsigned degree = 3;
  std::string height_text = "1000";
  long probe_digits = 40;
  std::optional<std::uint64_t> probe_n;
  std::optional<std::uint64_t> probe_N;
  CLI::App* probe_cmd = app.add_subcommand("probe", "Integer-relation cross-check of verdicts");
  probe_cmd->add_option("--gamma", gamma_text, "Exponent gamma")->required();
  auto* probe_n_opt = probe_cmd->add_option("--n", probe_n, "Single point n >= 1");
  auto* probe_N_opt = probe_cmd->add_option("--N", probe_N, "Probe every n = 1..N");
  probe_n_opt->excludes(probe_N_opt);
  probe_cmd->add_option("--degree", degree, "Degree cap d >= 1");
  probe_cmd->add_option("--height", height_text, "Height cap H >= 1");
  probe_cmd->add_option("--digits", probe_digits, "Working precision in digits");
  add_json(probe_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    // CLI11 checks requirements before extras; name unknown arguments first
    std::string extras;
    for (const CLI::App* a = &app; a != nullptr;) {
      for (const std::string& x : a->remaining()) extras += (extras.empty() ? "" : " ") + x;
      auto subs = a->get_subcommands();
      a = subs.empty() ? nullptr : subs.front();
    }
    if (!extras.empty()) err << "error[usage]: unknown argument(s): " << extras << '\n';
    else err << "error[usage]: " << e.what() << '\n';
    return 2;
  }

  try {
    if (convolve_cmd->parsed()) {
      if (conv_N == 0) fail(ErrorKind::InvalidTruncation, "N must be at least 1");
      ArithFunction h = [&] {
        if (pow) {
          if (fns.size() != 1) fail(ErrorKind::InvalidInput, "--pow takes exactly one function");
          return conv_pow(parse_function(fns[0], conv_N), *pow);
        }
        if (fns.size() != 2) fail(ErrorKind::InvalidInput, "convolve takes two functions");
        return convolve(parse_function(fns[0], conv_N), parse_function(fns[1], conv_N));
      }();
      if (json) {
        Json j = header();
        j["N"] = conv_N;
        Json values = Json::array();
        for (const Rational& v : h.values()) values.push_back(to_string(v));
        j["values"] = std::move(values);
        emit(out, j);
      } else {
        for (std::size_t n = 1; n <= h.truncation(); ++n) out << n << ' ' << to_string(h(n)) << '\n';
      }
      return 0;
    }

    if (carlitz_cmd->parsed()) {
      std::vector<PolynomialRelation> kernel = carlitz_kernel(carlitz_r, carlitz_degree, carlitz_N);
      Int monomials = monomial_count(carlitz_r + 1, carlitz_degree);
      std::vector<std::string> names = zeta_generator_names(carlitz_r);
      if (json) {
        Json j = header();
        j["r"] = carlitz_r;
        j["degree"] = carlitz_degree;
        j["N"] = carlitz_N;
        j["monomials"] = monomials.get_str();
        Json rels = Json::array();
        for (const PolynomialRelation& p : kernel) {
          Json terms = Json::array();
          for (const auto& [m, c] : p.terms()) terms.push_back({{"exponents", m.exponents}, {"coefficient", to_string(c)}});
          rels.push_back({{"relation", p.to_string(names)}, {"terms", std::move(terms)}});
        }
        j["kernel"] = std::move(rels);
        emit(out, j);
      } else {
        out << "monomials=" << monomials << " kernel_dimension=" << kernel.size() << '\n';
        for (const PolynomialRelation& p : kernel) out << "relation " << p.to_string(names) << " = 0\n";
      }
      return 0;
    }

    if (multdep_cmd->parsed()) {
      IndependenceResult r = mult_independent(multdep_ns);
      if (json) {
        Json j = header();
        j["numbers"] = multdep_ns;
        j["independent"] = r.independent;
        j["certificate"] = r.certificate ? int_array(r.certificate->exponents) : Json(nullptr);
        j["primes"] = r.matrix.primes;
        Json rows = Json::array();
        for (const IntVector& row : r.matrix.rows) rows.push_back(int_array(row));
        j["exponent_matrix"] = std::move(rows);
        emit(out, j);
      } else if (r.independent) {
        out << "independent\n";
      } else {
        out << "dependent certificate=" << tuple_string(r.certificate->exponents) << '\n';
      }
      return 0;
    }

    if (canon_cmd->parsed()) {
      Gamma g = parse_gamma(gamma_text);
      CanonicalGamma c = canonicalize(g);
      std::optional<std::string> value;
      if (digits) value = num::format_decimal(evaluate(g, *digits), *digits);
      if (json) {
        Json j = header();
        j["input"] = to_string(g);
        j["gamma"] = gamma_json(c);
        if (value) j["value"] = *value;
        emit(out, j);
      } else {
        out << "canonical=" << to_string(c.canonical) << " scale=" << to_string(c.scale) << '\n';
        if (value) out << "value=" << *value << '\n';
      }
      return 0;
    }

    if (classify_cmd->parsed()) {
      CanonicalGamma g = canonicalize(parse_gamma(gamma_text));
      Verdict v = classify_point(g, point, assumptions(schanuel, conjecture1));
      if (json) {
        Json j = header();
        j["gamma"] = gamma_json(g);
        j["verdict"] = Json::parse(serialize_verdict(point, v));
        emit(out, j);
      } else {
        out << verdict_line(point, v) << '\n';
      }
      return 0;
    }

    if (exset_cmd->parsed() || repr_cmd->parsed()) {
      ExceptionalSetReport r;
      if (repr_cmd->parsed() && !report_path.empty()) {
        r = parse_report(read_file(report_path));
        r.representant = exceptional_representant(r);
      } else {
        if (gamma_text.empty()) fail(ErrorKind::InvalidInput, "representant needs --gamma with --N, or --report");
        r = exceptional_set(canonicalize(parse_gamma(gamma_text)), bound_N, assumptions(schanuel, conjecture1));
      }
      const CanonicalGamma& g = r.gamma;
      if (exset_cmd->parsed()) {
        if (json) out << serialize_report(r, 2) << '\n';
        else print_report_table(out, r);
      } else if (json) {
        Json j = header();
        j["gamma"] = gamma_json(g);
        j["N"] = r.N;
        const Representant& rep = *r.representant;
        j["representant"] = {{"B", rep.B ? Json(*rep.B) : Json(nullptr)}, {"provenance", to_string(rep.provenance)}};
        emit(out, j);
      } else {
        out << representant_line(r.representant) << '\n';
      }
      return 0;
    }

    if (check_cmd->parsed()) {
      bool from_file = !report_path.empty();
      if (!from_file && gamma_text.empty()) fail(ErrorKind::InvalidInput, "check needs --gamma with --N, or --report");
      ExceptionalSetReport r = from_file ? parse_report(read_file(report_path))
                                         : exceptional_set(canonicalize(parse_gamma(gamma_text)), bound_N,
                                                           assumptions(schanuel, conjecture1));
      Prop3Result p3 = check_prop3(r);
      std::vector<ClosureViolation> closure = closure_check(r);
      if (json) emit(out, check_json(p3, closure));
      else print_check(out, p3, closure);
      if (!from_file && (!p3.ok() || !closure.empty()))
        fail(ErrorKind::InternalInconsistency, "engine-generated report fails its own consistency checks");
      return 0;
    }

    if (bound_cmd->parsed()) {
      BoundQuery q = [&]() -> BoundQuery {
        if (prop5_cmd->parsed()) return Prop5Query{bound_n, parse_gammas(bound_gammas)};
        if (prop6_cmd->parsed()) return Prop6Query{canonicalize(parse_gamma(gamma_text)), bound_ns};
        return Prop7Query{bound_n, parse_gammas(bound_gammas)};
      }();
      try {
        BoundCertificate c = schanuel_bound(q);
        if (json) emit(out, certificate_json(c));
        else print_certificate(out, c);
        return 0;
      } catch (const RejectedQuery& e) {
        Json j = certificate_json(e.certificate());
        j["rejected"] = true;
        if (json) emit(out, j);
        else print_certificate(out, e.certificate());
        throw;
      }
    }

    if (probe_cmd->parsed()) {
      Gamma g = parse_gamma(gamma_text);
      RelationQuery q{degree, parse_int(height_text), probe_digits};
      if (!probe_n && !probe_N) fail(ErrorKind::InvalidInput, "probe needs --n or --N");
      std::uint64_t lo = probe_n ? *probe_n : 1;
      std::uint64_t hi = probe_n ? *probe_n : *probe_N;
      if (lo == 0) fail(ErrorKind::InvalidInput, "points start at n = 1");
      std::size_t mismatches = 0;
      Json rows = Json::array();
      for (std::uint64_t n = lo; n <= hi; ++n) {
        ProbeOutcome o = probe_point(n, g, q);
        if (o.kind == ProbeKind::Mismatch) ++mismatches;
        std::string relation = o.relation.found() ? to_string(*o.relation.polynomial) : "none";
        std::string residual = o.relation.found() ? num::format_magnitude(o.relation.residual) : "-";
        if (json) {
          rows.push_back({{"n", n},
                          {"status", to_string(o.verdict.status)},
                          {"rule", to_string(o.verdict.rule)},
                          {"outcome", to_string(o.kind)},
                          {"relation", o.relation.found() ? Json(relation) : Json(nullptr)},
                          {"residual", o.relation.found() ? Json(residual) : Json(nullptr)},
                          {"escalated", o.relation.escalated},
                          {"details", o.details}});
        } else {
          out << "n=" << n << " status=" << to_string(o.verdict.status) << " rule=" << to_string(o.verdict.rule)
              << " outcome=" << to_string(o.kind) << " relation=" << relation << " residual=" << residual;
          if (!o.details.empty()) out << " (" << o.details << ")";
          out << '\n';
        }
      }
      if (json) {
        Json j = header();
        j["gamma"] = to_string(g);
        j["query"] = {{"degree", degree}, {"height", to_string(q.height_cap)}, {"digits", probe_digits}};
        j["points"] = std::move(rows);
        j["mismatches"] = mismatches;
        emit(out, j);
      } else if (probe_N) {
        out << "mismatches=" << mismatches << '\n';
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error[" << error_kind_name(e.kind()) << "]: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 2;
}

}  // namespace zg::cli
