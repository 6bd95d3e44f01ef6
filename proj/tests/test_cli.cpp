#include "cli.hpp"
#include "report.hpp"

#include "adet/errors.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace adet;
using namespace adet::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_csv(const std::string& body) {
  const std::string path = "adet_test_matrix_" + std::to_string(std::hash<std::string>{}(body)) + ".csv";
  std::ofstream(path) << body;
  return path;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("decompose n=2 l=1") {
  const Result r = call({"decompose", "--n", "2", "--l", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["lambda"] == json::array({2}));
  CHECK(j["rows"][0]["generic_multiplicity"] == 1);
  CHECK(j["rows"][1]["lambda"] == json::array({1, 1}));
  CHECK(j["rows"][1]["generic_multiplicity"] == 1);
  CHECK(j["rows"][1]["trace"] == json::array({"1", "-1"}));
}

TEST_CASE("decompose n=2 l=2 at alpha=-1") {
  const Result r = call({"decompose", "--n", "2", "--l", "2", "--alpha", "-1", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["alpha_specializations"][0]["alpha"] == "-1");
  CHECK(j["alpha_specializations"][0]["multiplicities"] == json::array({0, 0, 1}));
  CHECK(j["rows"][2]["lambda"] == json::array({2, 2}));
}

TEST_CASE("decompose n=1 l=3") {
  const Result r = call({"decompose", "--n", "1", "--l", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "lambda,kostka,generic_multiplicity,trace\n\"3\",1,1,\"1\"\n");
}

TEST_CASE("decompose with the oracle reports agreement") {
  const Result r = call({"decompose", "--n", "3", "--l", "1", "--oracle", "--alpha", "1/2", "--alpha", "-1/2",
                         "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["oracle"]["agrees"] == true);
  CHECK(j["oracle"]["generic"] == json::array({1, 2, 1}));
  CHECK(j["alpha_specializations"][0]["multiplicities"] == json::array({1, 2, 0}));
  CHECK(j["alpha_specializations"][1]["multiplicities"] == json::array({0, 2, 1}));
}

TEST_CASE("report JSON round-trips") {
  const DecompositionReport rep = build_report(3, 2, {Rational(-1), Rational(1, 2)}, true, false, 10);
  CHECK(report_from_json(json::parse(to_json(rep).dump())) == rep);
  const DecompositionReport with_oracle = build_report(2, 2, {Rational(2)}, false, true, 10);
  REQUIRE(with_oracle.oracle.has_value());
  CHECK(report_from_json(json::parse(to_json(with_oracle).dump())) == with_oracle);
  CHECK_THROWS_AS(report_from_json(json::parse(R"({"n": 2})")), ParseError);
  CHECK_THROWS_AS(report_from_json(json::parse(R"({"n":2,"l":1,"rows":[{"lambda":[1,2],"kostka":1,
      "generic_multiplicity":1,"trace":["1"]}]})")), ParseError);
}

TEST_CASE("report invariants") {
  const DecompositionReport rep = build_report(3, 2, {}, false, false, 10);
  REQUIRE(rep.rows.size() == 7);
  for (std::size_t i = 1; i < rep.rows.size(); ++i) CHECK(rep.rows[i - 1].lambda > rep.rows[i].lambda);
  for (const ReportRow& row : rep.rows) {
    CHECK(row.generic_multiplicity <= row.kostka);
    CHECK(row.lambda.length() <= 3);
    CHECK(row.lambda.size() == 6);
  }
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args = {"decompose", "--n", "3", "--l", "2", "--alpha", "2", "--format", "json"};
  CHECK(call(args).out == call(args).out);
  const std::vector<std::string> text = {"decompose", "--n", "2", "--l", "3", "--matrices"};
  CHECK(call(text).out == call(text).out);
}

TEST_CASE("transition subcommand") {
  const Result r = call({"transition", "--n", "2", "--l", "2", "--lambda", "3,1", "--check", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["matrix"] == json::parse(R"([[["1","0","-1"]]])"));
  CHECK(j["generic_rank"] == 1);
  for (const auto& [name, ok] : j["checks"].items()) CHECK_MESSAGE(ok == true, name);

  const Result c = call({"transition", "--n", "3", "--l", "1", "--lambda", "1,1,1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("[1 + -3*a + 2*a^2]") != std::string::npos);
  CHECK(call({"transition", "--n", "2", "--l", "2", "--lambda", "2,1,1"}).code == 2);
}

TEST_CASE("trace subcommand prints both hook forms on request") {
  const Result r = call({"trace", "--n", "2", "--l", "3", "--lambda", "5,1", "--paper-variant"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("corrected form") != std::string::npos);
  CHECK(r.out.find("displayed form") != std::string::npos);
  CHECK(r.out.find("[matches]") != std::string::npos);
  CHECK(r.out.find("[differs]") != std::string::npos);
}

TEST_CASE("zonal subcommand") {
  const Result r = call({"zonal", "--n", "2", "--l", "3", "--lambda", "4,2", "--s", "2", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-1/9\n", 0) == 0);
  const Result id = call({"zonal", "--n", "2", "--l", "2", "--lambda", "2,2", "--perm", "1,2,3,4"});
  CHECK(id.out == "1\n");
  CHECK(call({"zonal", "--n", "2", "--l", "2", "--lambda", "2,2", "--perm", "1,2,3"}).code == 2);
}

TEST_CASE("adet subcommand") {
  const std::string path = temp_csv("1,2\n3,4\n");
  CHECK(call({"adet", "--matrix", path, "--alpha", "-1"}).out == "-2\n");
  CHECK(call({"adet", "--matrix", path, "--alpha", "1"}).out == "10\n");
  CHECK(call({"adet", "--matrix", path, "--alpha", "1/2"}).out == "7\n");
  std::remove(path.c_str());

  const std::string bad = temp_csv("1,2,3\n4,5,6\n");
  CHECK(call({"adet", "--matrix", bad, "--alpha", "1"}).code == 2);
  std::remove(bad.c_str());
  const std::string junk = temp_csv("1,x\n3,4\n");
  CHECK(call({"adet", "--matrix", junk, "--alpha", "1"}).code == 2);
  std::remove(junk.c_str());
  CHECK(call({"adet", "--matrix", "does-not-exist.csv", "--alpha", "1"}).code == 2);
}

TEST_CASE("verify suites") {
  CHECK(call({"verify", "gkp", "--max-l", "10"}).code == 0);
  CHECK(call({"verify", "n2-theorem", "--max-l", "6"}).code == 0);
  CHECK(call({"verify", "oracle", "--cases", "2,1;2,2;3,1"}).code == 0);
  CHECK(call({"verify", "jacobi"}).code == 0);
  CHECK(call({"verify", "frobenius"}).code == 0);
  const Result j = call({"verify", "hook-trace", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(json::parse(j.out)["pass"] == true);
  for (const std::string& s : suite_names()) {
    const auto results = run_suite(s, VerifyOptions{});
    CHECK_MESSAGE(!results.empty(), s);
    for (const CaseResult& c : results) CHECK_MESSAGE(c.pass, (s + ": " + c.name + " " + c.detail));
  }
  CHECK(call({"verify", "nope"}).code == 2);
  CHECK_THROWS_AS(run_suite("nope", VerifyOptions{}), UnknownSuite);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"decompose", "--n", "2"}).code == 2);
  CHECK(call({"decompose", "--n", "2", "--l", "1", "--format", "xml"}).code == 2);
  CHECK(call({"decompose", "--n", "2", "--l", "1", "--alpha", "1/0"}).code == 2);
  CHECK(call({"decompose", "--n", "4", "--l", "3"}).code == 2);
  CHECK(call({"decompose", "--n", "4", "--l", "3", "--max-size", "11"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  const Result help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("decompose") != std::string::npos);
}

TEST_CASE("case and matrix parsing") {
  CHECK(parse_cases("2,1;2,2;3,1") == std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}});
  CHECK(parse_cases(" 2 , 3 ") == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK_THROWS_AS(parse_cases("2"), ParseError);
  CHECK_THROWS_AS(parse_cases("a,b"), ParseError);
  CHECK_THROWS_AS(parse_cases(""), ParseError);
  CHECK_THROWS_AS(parse_cases("0,2"), ParseError);
  const RatMatrix m = parse_matrix_csv("1/2, -3\n\n0,4/6\n");
  CHECK(m == RatMatrix(2, 2, {Rational(1, 2), -3, 0, Rational(2, 3)}));
  CHECK_THROWS_AS(parse_matrix_csv("1,2\n3\n"), SizeMismatch);
}

TEST_CASE("diagonalizability helpers") {
  const RatMatrix jordan(2, 2, {1, 1, 0, 1});
  CHECK(characteristic_polynomial(jordan) == PolyQ({1, -2, 1}));
  CHECK_FALSE(is_diagonalizable(jordan));
  CHECK(is_diagonalizable(RatMatrix::identity(3)));
  CHECK(is_diagonalizable(RatMatrix(2, 2, {0, -1, 1, 0})));
  const RatMatrix m(3, 3, {2, 1, 0, 0, 2, 0, 0, 0, 3});
  CHECK(characteristic_polynomial(m) == PolyQ({-12, 16, -7, 1}));
  CHECK_FALSE(is_diagonalizable(m));
  const Result r = call({"explore-diagonalizable", "--n", "2", "--l", "2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).size() == 3);
}

} // TEST_SUITE
