#include "zetagamma/report_json.hpp"

#include <cstdint>
#include <limits>

#include <json.hpp>

#include "zetagamma/errors.hpp"

namespace zg {
namespace {

using Json = nlohmann::ordered_json;

Json int_json(const Int& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return Json(z.get_si());
  return Json(z.get_str());
}

Json nat_json(std::uint64_t v) {
  if (v <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return Json(static_cast<std::int64_t>(v));
  return Json(std::to_string(v));
}

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::ParseError, "report: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) bad(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

Int int_value(const Json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return to_int(v.get<std::uint64_t>());
    return Int(static_cast<long>(v.get<std::int64_t>()));
  }
  if (v.is_string()) return parse_int(v.get<std::string>());
  bad("expected an integer");
}

std::uint64_t nat_value(const Json& v) {
  Int z = int_value(v);
  if (!fits_u64(z)) bad("expected a natural number below 2^64");
  return to_u64(z);
}

Rational rational_field(const Json& j, const char* key) { return parse_rational(str_field(j, key)); }

Json witness_json(const Witness& w) {
  struct Visitor {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(const Rational& r) const { return {{"kind", "value"}, {"value", to_string(r)}}; }
    Json operator()(const IntPoly& p) const { return {{"kind", "minpoly"}, {"poly", to_string(p)}}; }
    Json operator()(const PowerWitness& p) const {
      return {{"kind", "power"},       {"b", nat_json(p.b)}, {"p", int_json(p.p)}, {"q", int_json(p.q)},
              {"a", nat_json(p.a)}, {"value_exponent", to_string(p.value_exponent)}};
    }
    Json operator()(const DerivedWitness& d) const {
      return {{"kind", "derived"}, {"source", nat_json(d.source)}, {"power", to_string(d.power)}};
    }
  };
  return std::visit(Visitor{}, w);
}

Witness parse_witness(const Json& j) {
  if (j.is_null()) return std::monostate{};
  std::string kind = str_field(j, "kind");
  if (kind == "value") return rational_field(j, "value");
  if (kind == "minpoly") return parse_poly(str_field(j, "poly"));
  if (kind == "power")
    return PowerWitness{nat_value(field(j, "b")), int_value(field(j, "p")), int_value(field(j, "q")),
                        nat_value(field(j, "a")), rational_field(j, "value_exponent")};
  if (kind == "derived") return DerivedWitness{nat_value(field(j, "source")), rational_field(j, "power")};
  bad("unknown witness kind '" + kind + "'");
}

Json verdict_json(std::uint64_t n, const Verdict& v) {
  return {{"n", nat_json(n)},
          {"status", to_string(v.status)},
          {"rule", to_string(v.rule)},
          {"witness", witness_json(v.witness)},
          {"condition", to_string(v.condition)}};
}

}  // namespace

std::string serialize_verdict(std::uint64_t n, const Verdict& v) { return verdict_json(n, v).dump(); }

std::string serialize_report(const ExceptionalSetReport& report, int indent) {
  Json j;
  j["schema"] = kReportSchema;
  j["gamma"] = {{"canonical", to_string(report.gamma.canonical)}, {"scale", to_string(report.gamma.scale)}};
  j["N"] = nat_json(report.N);
  j["assumptions"] = {{"schanuel", report.assumptions.assume_schanuel},
                      {"conjecture1", report.assumptions.assume_conjecture1}};
  Json verdicts = Json::array();
  for (std::uint64_t n = 1; n <= report.verdicts.size(); ++n) verdicts.push_back(verdict_json(n, report.verdicts[n - 1]));
  j["verdicts"] = std::move(verdicts);
  if (report.representant) {
    const Representant& r = *report.representant;
    j["representant"] = {{"B", r.B ? nat_json(*r.B) : Json(nullptr)}, {"provenance", to_string(r.provenance)}};
  } else {
    j["representant"] = nullptr;
  }
  return j.dump(indent);
}

ExceptionalSetReport parse_report(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
  if (str_field(j, "schema") != kReportSchema) bad("unsupported schema '" + str_field(j, "schema") + "'");
  ExceptionalSetReport r;
  const Json& g = field(j, "gamma");
  r.gamma.canonical = parse_gamma(str_field(g, "canonical"));
  r.gamma.scale = rational_field(g, "scale");
  if (r.gamma.scale == 0) bad("scale must be nonzero");
  r.N = nat_value(field(j, "N"));
  if (r.N == 0) bad("N must be at least 1");
  const Json& a = field(j, "assumptions");
  r.assumptions.assume_schanuel = bool_field(a, "schanuel");
  r.assumptions.assume_conjecture1 = bool_field(a, "conjecture1");
  const Json& vs = field(j, "verdicts");
  if (!vs.is_array() || vs.size() != r.N) bad("verdicts must list exactly N entries");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Json& v = vs[i];
    if (nat_value(field(v, "n")) != i + 1) bad("verdicts must be listed for n = 1..N in order");
    Verdict out;
    out.status = parse_status(str_field(v, "status"));
    out.rule = parse_rule(str_field(v, "rule"));
    out.witness = parse_witness(field(v, "witness"));
    out.condition = parse_condition(str_field(v, "condition"));
    r.verdicts.push_back(std::move(out));
  }
  const Json& rep = field(j, "representant");
  if (!rep.is_null()) {
    Representant out;
    const Json& B = field(rep, "B");
    if (!B.is_null()) out.B = nat_value(B);
    out.provenance = parse_provenance(str_field(rep, "provenance"));
    r.representant = out;
  }
  return r;
}

}  // namespace zg
