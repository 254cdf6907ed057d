#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetagamma/cli.hpp"
#include "zetagamma/dirichlet_ring.hpp"
#include "zetagamma/errors.hpp"
#include "zetagamma/exponent_lattice.hpp"
#include "zetagamma/gamma_model.hpp"
#include "zetagamma/polynomial.hpp"
#include "zetagamma/relation_probe.hpp"
#include "zetagamma/report_json.hpp"
#include "zetagamma/verdict_engine.hpp"

namespace py = pybind11;
using namespace zg;

namespace {

py::int_ to_py(const Int& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Int from_py(const py::int_& z) { return Int(py::str(z).cast<std::string>()); }

py::dict verdict_dict(std::uint64_t n, const Verdict& v) {
  py::dict d;
  d["n"] = n;
  d["status"] = to_string(v.status);
  d["rule"] = to_string(v.rule);
  d["condition"] = to_string(v.condition);
  d["witness"] = witness_string(v.witness);
  return d;
}

ExceptionalSetReport run_set(const std::string& gamma, std::uint64_t N, bool schanuel, bool conjecture1) {
  return exceptional_set(canonicalize(parse_gamma(gamma)), N, AssumptionSet{schanuel, conjecture1});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::handle error_type = py::exception<Error>(m, "Error").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(e.what());
      exc.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });

  m.def("mult_independent", [](const std::vector<std::uint64_t>& ns) -> py::object {
    IndependenceResult r = mult_independent(ns);
    if (r.independent) return py::none();
    py::list cert;
    for (const Int& e : r.certificate->exponents) cert.append(to_py(e));
    return std::move(cert);
  });

  m.def("factor", [](std::uint64_t n) {
    py::list out;
    for (const auto& [p, e] : factor(n).factors) out.append(py::make_tuple(p, e));
    return out;
  });

  m.def("canonicalize", [](const std::string& gamma) {
    CanonicalGamma c = canonicalize(parse_gamma(gamma));
    return py::make_tuple(to_string(c.canonical), to_string(c.scale));
  });

  m.def(
      "classify",
      [](const std::string& gamma, std::uint64_t n, bool schanuel, bool conjecture1) {
        return verdict_dict(n, classify_point(canonicalize(parse_gamma(gamma)), n, AssumptionSet{schanuel, conjecture1}));
      },
      py::arg("gamma"), py::arg("n"), py::arg("assume_schanuel") = false, py::arg("assume_conjecture1") = false);

  m.def(
      "exceptional_set_json",
      [](const std::string& gamma, std::uint64_t N, bool schanuel, bool conjecture1) {
        return serialize_report(run_set(gamma, N, schanuel, conjecture1));
      },
      py::arg("gamma"), py::arg("N"), py::arg("assume_schanuel") = false, py::arg("assume_conjecture1") = false);

  m.def("check_report", [](const std::string& json) {
    ExceptionalSetReport r = parse_report(json);
    py::dict d;
    Prop3Result p3 = check_prop3(r);
    d["prop3"] = p3.violation ? py::cast(*p3.violation) : py::none();
    py::list closure;
    for (const auto& v : closure_check(r)) closure.append(py::make_tuple(v.rule, v.points));
    d["closure"] = closure;
    return d;
  });

  m.def("representant", [](const std::string& json) {
    Representant rep = exceptional_representant(parse_report(json));
    return py::make_tuple(rep.B ? py::cast(*rep.B) : py::none(), to_string(rep.provenance));
  });

  m.def(
      "probe",
      [](const std::string& gamma, std::uint64_t n, unsigned degree, const py::int_& height) {
        RelationQuery q;
        q.degree_cap = degree;
        q.height_cap = from_py(height);
        ProbeOutcome o = probe_point(n, parse_gamma(gamma), q);
        py::dict d;
        d["outcome"] = to_string(o.kind);
        d["verdict"] = verdict_dict(n, o.verdict);
        if (o.relation.polynomial) {
          py::list coeffs;
          for (const Int& c : o.relation.polynomial->coeffs) coeffs.append(to_py(c));
          d["relation"] = coeffs;
        } else {
          d["relation"] = py::none();
        }
        return d;
      },
      py::arg("gamma"), py::arg("n"), py::arg("degree") = 8, py::arg("height") = 1000);

  m.def("carlitz_kernel_dimension", [](unsigned r, unsigned degree, std::size_t N) {
    return carlitz_kernel(r, degree, N).size();
  });
}
