#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qwb/cli/commands.hpp"
#include "qwb/cli/parse.hpp"
#include "qwb/cli/suites.hpp"
#include "support.hpp"

using namespace qwb;
using namespace qwb::cli;
using namespace qwb::test;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qwb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t error_position(const std::string& text, const TablePtr& t) {
  try {
    parse_expression(text, t);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("expression parser") {
  Canon c;
  CHECK(parse_expression("q^3", c.t) == pow(c.q, 3));
  CHECK(parse_expression("1/2*(p^2+q^2)", c.t) == (c.p * c.p + c.q * c.q) * HbarScalar(rat(1, 2)));
  const PhasePoly ih = parse_expression("i*hbar", c.t);
  CHECK(ih.is_constant());
  CHECK(ih == c.c(hb(I())));
  CHECK(parse_expression("-q - -p", c.t) == c.p - c.q);
  CHECK(parse_expression("-q^2", c.t) == -(c.q * c.q));
  CHECK(parse_expression(" 3/6 * q * ( p + 2 ) ", c.t) == c.q * (c.p + c.c(2)) * HbarScalar(rat(1, 2)));
  CHECK(parse_expression("hbar^2*q^0", c.t) == c.c(hb(1, 2)));
  CHECK(parse_expression("(q+p)^2", c.t) == c.q * c.q + c.q * c.p * HbarScalar(2) + c.p * c.p);

  auto t2 = VariableTable::canonical(2);
  CHECK(parse_expression("q1*p2 - q2", t2) ==
        PhasePoly::variable(t2, "q1") * PhasePoly::variable(t2, "p2") - PhasePoly::variable(t2, "q2"));
  auto tz = VariableTable::complex(1);
  CHECK(parse_expression("z*zb", tz) == PhasePoly::variable(tz, "z") * PhasePoly::variable(tz, "zb"));

  CHECK(error_position("q^", c.t) == 2);
  CHECK(error_position("q + x", c.t) == 4);
  CHECK(error_position("(q + p", c.t) == 6);
  CHECK(error_position("q $ p", c.t) == 2);
  CHECK(error_position("1/0", c.t) == 2);
  CHECK(error_position("q p", c.t) == 2);
  CHECK(error_position("", c.t) == 0);
  CHECK_THROWS_WITH_AS(parse_expression("q2", c.t), doctest::Contains("unknown variable"), ParseError);
}

TEST_CASE("operator parser and table inference") {
  const auto QP = parse_operator("Q*P", 1);
  CHECK(QP == CanonicalOperator::q(1) * CanonicalOperator::p(1));
  CHECK(parse_operator("P*Q", 1) == QP - CanonicalOperator::scalar(1, hb(I())));
  CHECK(parse_operator("p2*q1", 2) == CanonicalOperator::q(2, 0) * CanonicalOperator::p(2, 1));
  CHECK_THROWS_AS(parse_operator("Q3", 2), ParseError);

  CHECK(infer_table({"q*p"})->dof() == 1);
  CHECK(infer_table({"q1*p3"})->dof() == 3);
  CHECK(infer_table({"z2*zb1"})->chart() == Chart::complex);
  CHECK(infer_table({"q"}, 2)->dof() == 2);
}

TEST_CASE("suite reports") {
  RunConfig cfg = RunConfig::fast_defaults();
  const RunReport moyal = run_suite("moyal", cfg);
  REQUIRE(moyal.suites.size() == 1);
  CHECK(moyal.passed());
  bool found = false;
  for (const auto& c : moyal.suites[0].checks) {
    CHECK(!c.anchor.empty());
    if (c.name == "groenewold witness") {
      found = true;
      CHECK(c.witness == "-3/2*hbar^2");
    }
  }
  CHECK(found);
  const nlohmann::json j = moyal.to_json();
  CHECK(j["config"]["fast"] == true);
  CHECK(j["config"]["tolerance"] == 1e-4);
  CHECK_FALSE(j["suites"][0]["checks"][0].contains("runtime_ms"));
  // Ids follow the check order so sorting by id reproduces the report order.
  std::vector<std::string> ids;
  for (const auto& c : j["suites"][0]["checks"]) ids.push_back(c["id"]);
  CHECK(std::is_sorted(ids.begin(), ids.end()));

  cfg.timings = true;
  CHECK(run_suite("kgeom", cfg).to_json()["suites"][0]["checks"][0].contains("runtime_ms"));
  CHECK_THROWS_AS(run_suite("nope", cfg), std::invalid_argument);
  CHECK(suite_names().size() == 6);
}

TEST_CASE("command line") {
  auto r = invoke({"star", "q", "p"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["star"]["text"] == "q*p + 1/2*i*hbar");

  r = invoke({"moyal-bracket", "q^3", "p^3"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["witness"] == "-3/2*hbar^2");
  CHECK(j["poisson_bracket"] == "9*q^2*p^2");

  r = invoke({"weyl", "q*p"});
  CHECK(nlohmann::json::parse(r.out)["operator"] == "Q*P - 1/2*i*hbar");
  r = invoke({"wigner-map", "P*Q"});
  CHECK(nlohmann::json::parse(r.out)["symbol"]["text"] == "q*p - 1/2*i*hbar");

  r = invoke({"star", "q^", "p"});
  CHECK(r.code == 2);
  CHECK(r.err.find("column 3") != std::string::npos);
  CHECK(invoke({"run", "bogus"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--hbar", "zero", "groenewold"}).code == 2);
  CHECK(invoke({"--format", "csv", "zeta"}).code == 2);
  CHECK(invoke({"car", "--modes", "13"}).code == 2);

  r = invoke({"--hbar", "1/2", "circle", "--lambda", "1/2", "--window", "1"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["spectrum"][1]["eigenvalue"] == "1/2*hbar");
  CHECK(j["spectrum"][1]["at_hbar"] == "1/4");

  r = invoke({"wigner", "--state", "0", "--grid", "2:3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("x,p,F\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 10);

  r = invoke({"sphere", "--N", "3"});
  CHECK(std::abs(nlohmann::json::parse(r.out)["value"].get<double>() - 3) < 1e-9);

  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "qwb_test_path.json";
  std::ofstream(path) << R"({"points": [[2, 0], [0, 2], [-2, 0], [0, -2]]})";
  r = invoke({"loop", "--path", path.string()});
  CHECK(nlohmann::json::parse(r.out)["winding"] == 1);
  CHECK(invoke({"loop", "--path", (dir / "missing.json").string()}).code == 2);

  r = invoke({"kgeom"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["status"] == "pass");
}

TEST_CASE("configuration sources") {
  const auto cfg_path = std::filesystem::temp_directory_path() / "qwb_test.ini";
  std::ofstream(cfg_path) << "hbar=1/2\ncutoff=4\n";
  auto r = invoke({"--config", cfg_path.string(), "su2"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["cutoff"] == 4);
  CHECK(j["blocks"][1]["casimir"] == "3/16");

  // Flags override the file.
  r = invoke({"--config", cfg_path.string(), "--cutoff", "3", "su2"});
  CHECK(nlohmann::json::parse(r.out)["cutoff"] == 3);

  std::ofstream(cfg_path) << "not a key value line\n";
  CHECK(invoke({"--config", cfg_path.string(), "groenewold"}).code == 2);

  ::setenv("QWB_HBAR", "2", 1);
  r = invoke({"circle", "--lambda", "0", "--window", "1"});
  CHECK(nlohmann::json::parse(r.out)["spectrum"][2]["at_hbar"] == "2");
  r = invoke({"--hbar", "3", "circle", "--lambda", "0", "--window", "1"});
  CHECK(nlohmann::json::parse(r.out)["spectrum"][2]["at_hbar"] == "3");
  ::unsetenv("QWB_HBAR");
}

TEST_CASE("reports are deterministic") {
  const auto a = invoke({"run", "numlab", "--fast"});
  const auto b = invoke({"run", "numlab", "--fast"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["config"]["grid_points"] == 61);
  CHECK(j["config"]["sphere_resolution"] == 8);
  const auto c = invoke({"--seed", "7", "run", "moyal", "--fast"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["config"]["seed"] == 7);
}
