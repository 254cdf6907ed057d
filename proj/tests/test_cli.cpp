#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zetagamma/cli.hpp"
#include "zetagamma/report_json.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = zg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("zetagamma_test_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("documented invocations") {
  Run m = run({"multdep", "4", "8"});
  CHECK(m.code == 0);
  CHECK(m.out == "dependent certificate=(3,-2)\n");
  CHECK(run({"multdep", "2", "3", "5"}).out == "independent\n");

  Run es = run({"exceptional-set", "--gamma", "logratio:3/2", "--N", "100", "--json"});
  REQUIRE(es.code == 0);
  auto j = nlohmann::json::parse(es.out);
  std::vector<int> alg;
  for (const auto& v : j["verdicts"])
    if (v["status"] == "Algebraic") alg.push_back(v["n"].get<int>());
  CHECK(alg == std::vector<int>{1, 2, 4, 8, 16, 32, 64});
  CHECK(j["representant"]["B"] == 2);
  CHECK(zg::parse_report(es.out).algebraic_set().size() == 7);

  Run b = run({"bound", "prop6", "--gamma", "const:pi", "--ns", "2,3,5"});
  CHECK(b.code == 0);
  CHECK(first_line(b.out) == "bound=2 condition=Schanuel");
}

TEST_CASE("text output") {
  CHECK(run({"convolve", "zeta:0", "zeta:0", "--N", "6"}).out == "1 1\n2 2\n3 2\n4 3\n5 2\n6 4\n");
  CHECK(run({"convolve", "zeta:1", "--pow", "0", "--N", "3"}).out == "1 1\n2 0\n3 0\n");
  CHECK(first_line(run({"carlitz", "--r", "1", "--degree", "1", "--N", "1"}).out) == "monomials=3 kernel_dimension=2");
  CHECK(run({"canonicalize", "--gamma", "logratio:9/4"}).out == "canonical=logratio:3/2 scale=1\n");
  CHECK(run({"classify", "--gamma", "logratio:3/2", "--n", "8"}).out ==
        "n=8 status=Algebraic rule=R4 condition=Unconditional witness=n^1=2^3 value=3^3=27\n");
  CHECK(run({"classify", "--gamma", "const:pi", "--n", "5", "--assume-schanuel"}).out ==
        "n=5 status=Transcendental rule=R7 condition=Schanuel witness=-\n");
  CHECK(run({"classify", "--gamma", "const:pi", "--n", "5"}).out ==
        "n=5 status=Unknown rule=none condition=Unconditional witness=-\n");
  CHECK(run({"representant", "--gamma", "logratio:3/2", "--N", "100"}).out == "B=2 provenance=Conditional\n");
  CHECK(run({"representant", "--gamma", "alg:x^2-2@[1,2]", "--N", "10"}).out == "B=1 provenance=Determined\n");
  CHECK(run({"check", "--gamma", "logratio:3/2", "--N", "50"}).out == "prop3=ok\nclosure=ok\n");

  Run table = run({"exceptional-set", "--gamma", "logratio:3/2", "--N", "10"});
  CHECK(table.out.find("algebraic={1,2,4,8}") != std::string::npos);
  CHECK(table.out.find("representant B=2 provenance=Conditional") != std::string::npos);

  Run c1 = run({"exceptional-set", "--gamma", "logratio:3/2", "--N", "10", "--assume-conjecture1", "--json"});
  auto j = nlohmann::json::parse(c1.out);
  CHECK(j["verdicts"][2]["status"] == "Transcendental");
  CHECK(j["verdicts"][2]["condition"] == "Conjecture1");
  CHECK(j["assumptions"]["conjecture1"] == true);

  Run probe = run({"probe", "--gamma", "logratio:3/2", "--n", "8"});
  CHECK(probe.out.find("outcome=AgreesAlgebraic relation=x-27") != std::string::npos);
  for (const char* g : {"logratio:3/2", "logratio:3/4", "rat:1/3", "alg:x^2-2@[1,2]"}) {
    Run sweep = run({"probe", "--gamma", g, "--N", "64"});
    CHECK(sweep.code == 0);
    CHECK(sweep.out.find("mismatches=0\n") != std::string::npos);
  }
  Run none = run({"probe", "--gamma", "alg:x^2-2@[1,2]", "--n", "2", "--degree", "4", "--height", "10000"});
  CHECK(none.out.find("relation=none") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  Run unknown = run({"classify", "--gamma", "rat:1/2", "--n", "3", "--bogus"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err == "error[usage]: unknown argument(s): --bogus\n");
  CHECK(run({"classify", "--bogus"}).err == "error[usage]: unknown argument(s): --bogus\n");
  CHECK(run({"classify", "--gamma", "rat:1/2"}).code == 2);
  CHECK(run({"exceptional-set", "--gamma", "rat:1/2", "--N", "abc"}).code == 2);
  CHECK(run({"exceptional-set", "--gamma", "rat:1/2", "--N", "0"}).code == 2);
  Run parse = run({"classify", "--gamma", "rat:1/0", "--n", "2"});
  CHECK(parse.code == 2);
  CHECK(parse.err.rfind("error[parse-error]: ", 0) == 0);
  CHECK(run({"check", "--gamma", "rat:1/2"}).code == 2);
  CHECK(run({"check", "--report", "/nonexistent/report.json"}).code == 2);
  CHECK(run({"bound"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  Run rejected = run({"bound", "prop6", "--gamma", "const:pi", "--ns", "2,4"});
  CHECK(rejected.code == 3);
  CHECK(rejected.err.rfind("error[rejected-query]: hypothesis 'n_1..n_k multiplicatively independent' failed", 0) == 0);
  Run rj = run({"bound", "prop6", "--gamma", "const:pi", "--ns", "2,4", "--json"});
  CHECK(rj.code == 3);
  CHECK(nlohmann::json::parse(rj.out)["rejected"] == true);
  CHECK(run({"bound", "prop5", "--n", "2", "--gamma", "alg:x^2-2@[1,2]", "--gamma", "alg:x^2-8@[2,3]"}).code == 3);
  CHECK(run({"bound", "prop5", "--n", "2", "--gamma", "alg:x^2-2@[1,2]"}).code == 0);
}

TEST_CASE("report files") {
  std::string good = run({"exceptional-set", "--gamma", "logratio:3/2", "--N", "100", "--json"}).out;
  auto good_path = write_temp("good.json", good);
  CHECK(run({"check", "--report", good_path.string()}).out == "prop3=ok\nclosure=ok\n");
  CHECK(run({"representant", "--report", good_path.string()}).out == "B=2 provenance=Conditional\n");

  // {1, 4, 16, ...} with 2 Unknown breaks downward closure
  auto j = nlohmann::ordered_json::parse(good);
  j["verdicts"][1]["status"] = "Unknown";
  j["verdicts"][1]["rule"] = "none";
  j["verdicts"][1]["witness"] = nullptr;
  auto bad_path = write_temp("bad.json", j.dump());
  Run checked = run({"check", "--report", bad_path.string()});
  CHECK(checked.code == 0);
  CHECK(checked.out.find("violation root 4 2\n") != std::string::npos);
  Run rep = run({"representant", "--report", bad_path.string()});
  CHECK(rep.code == 4);
  CHECK(rep.err.rfind("error[internal-inconsistency]: ", 0) == 0);

  auto junk = write_temp("junk.json", "{\"schema\": 3}");
  CHECK(run({"check", "--report", junk.string()}).code == 2);
  std::filesystem::remove(good_path);
  std::filesystem::remove(bad_path);
  std::filesystem::remove(junk);
}

TEST_CASE("repeat invocations are byte-identical") {
  const std::vector<std::vector<std::string>> commands = {
      {"exceptional-set", "--gamma", "logratio:10/8", "--N", "300", "--json"},
      {"exceptional-set", "--gamma", "const:e", "--N", "50", "--assume-schanuel"},
      {"multdep", "12", "18", "1000000007", "8"},
      {"bound", "prop7", "--n", "3", "--gamma", "const:pi", "--gamma", "const:e", "--json"},
      {"probe", "--gamma", "logratio:3/4", "--N", "20", "--json"},
      {"carlitz", "--r", "2", "--degree", "3", "--N", "60", "--json"},
      {"classify", "--gamma", "rat:1/0", "--n", "2"},
  };
  for (const auto& c : commands) {
    Run a = run(c);
    Run b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}
