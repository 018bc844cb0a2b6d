#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "evenzeta/cli.hpp"

using namespace evenzeta;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    out.push_back(line);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("compute as csv") {
  const Outcome o = invoke({"compute", "--max-l", "2", "--format", "csv"});
  CHECK(o.code == 0);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "l,q,decimal");
  CHECK(rows[1].rfind("1,1/6,1.6449", 0) == 0);
  CHECK(rows[2].rfind("2,1/90,1.0823", 0) == 0);
  // default precision: 30 fractional digits
  CHECK(rows[1] == "1,1/6,1.644934066848226436472415166646");
}

TEST_CASE("compute as json") {
  const Outcome o = invoke({"compute", "--max-l", "4", "--precision", "8", "--format", "json"});
  CHECK(o.code == 0);
  const auto doc = nlohmann::json::parse(o.out);
  REQUIRE(doc.size() == 4);
  CHECK(doc[2]["l"] == 3);
  CHECK(doc[2]["q"] == "1/945");
  CHECK(doc[0]["decimal"] == "1.64493406");
}

TEST_CASE("crosscheck") {
  const Outcome o = invoke({"crosscheck", "--max-l", "50"});
  CHECK(o.code == 0);
  CHECK(o.out.find("4 routes agree for l=1..50") != std::string::npos);
}

TEST_CASE("verify-lemmas lemma 4") {
  CHECK(invoke({"verify-lemmas", "--which", "4", "--n-max", "30"}).code == 0);
}

TEST_CASE("every subcommand emits strict JSON and consistent CSV") {
  const std::vector<std::vector<std::string>> commands = {
      {"crosscheck", "--max-l", "8"},
      {"verify-identity", "--max-l", "6"},
      {"verify-wz", "--pair", "complex2", "--k-max", "4"},
      {"verify-lemmas", "--n-max", "5"},
      {"verify-decomposition", "--l-max", "1"},
  };
  for (const auto& base : commands) {
    auto json_args = base;
    json_args.insert(json_args.end(), {"--format", "json"});
    const Outcome j = invoke(json_args);
    CHECK(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    REQUIRE(doc.is_array());
    std::size_t cases = 0;
    for (const auto& report : doc) {
      for (const char* key : {"name", "cases", "max_residual", "tolerance", "pass"}) {
        CHECK(report.contains(key));
      }
      CHECK(report["pass"] == true);
      cases += report["cases"].size();
    }

    auto csv_args = base;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    const Outcome c = invoke(csv_args);
    CHECK(c.code == 0);
    const auto rows = lines(c.out);
    CHECK(rows.size() == cases + 1);
    CHECK(rows[0] == "name,input,residual,tolerance,pass");
  }
}

TEST_CASE("identical arguments give identical bytes") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify-lemmas", "--which", "3", "--n-max", "4", "--seed", "99"},
        std::vector<std::string>{"verify-decomposition", "--format", "json"},
        std::vector<std::string>{"compute", "--max-l", "12"}}) {
    const Outcome a = invoke(args);
    const Outcome b = invoke(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  CHECK(invoke({"verify-lemmas", "--which", "3", "--n-max", "2", "--seed", "1"}).out !=
        invoke({"verify-lemmas", "--which", "3", "--n-max", "2", "--seed", "2"}).out);
  CHECK(invoke({"verify-lemmas", "--which", "3", "--n-max", "2", "--seed", "0x5EED"}).out ==
        invoke({"verify-lemmas", "--which", "3", "--n-max", "2"}).out);
}

TEST_CASE("zero tolerance forces a failing exit") {
  CHECK(invoke({"verify-lemmas", "--which", "4", "--n-max", "3", "--tol", "0"}).code == 1);
  CHECK(invoke({"verify-wz", "--pair", "f4g4", "--tol-fd", "0"}).code == 1);
  CHECK(invoke({"verify-decomposition", "--tol", "0"}).code == 1);
  const Outcome o = invoke({"verify-lemmas", "--which", "4", "--n-max", "3", "--tol", "0", "--format", "json"});
  CHECK(nlohmann::json::parse(o.out)[0]["pass"] == false);
}

TEST_CASE("usage errors exit 2") {
  for (const std::vector<std::string>& args : {
           std::vector<std::string>{},
           std::vector<std::string>{"frobnicate"},
           std::vector<std::string>{"compute", "--bogus"},
           std::vector<std::string>{"compute", "--max-l", "0"},
           std::vector<std::string>{"compute", "--precision", "1001"},
           std::vector<std::string>{"compute", "--format", "xml"},
           std::vector<std::string>{"verify-lemmas", "--which", "7"},
           std::vector<std::string>{"verify-lemmas", "--quad-tol", "0"},
           std::vector<std::string>{"verify-wz", "--pair", "nope"},
           std::vector<std::string>{"verify-wz", "--step", "0.1"},
       }) {
    const Outcome o = invoke(args);
    CHECK(o.code == 2);
    CHECK_FALSE(o.err.empty());
    CHECK(o.out.empty());
  }
}

TEST_CASE("help exits 0") {
  const Outcome o = invoke({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("verify-decomposition") != std::string::npos);
  const Outcome sub = invoke({"verify-lemmas", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("1e-8") != std::string::npos);
}

TEST_CASE("empty report list") {
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cli::emit_and_status({}, OutputFormat::Json, out, err) == 2);
  CHECK(err.str() == "no checks requested\n");
  CHECK(out.str().empty());
}

TEST_CASE("report serialization") {
  VerificationReport ok("lemma4_kernel_integral", 1e-8);
  ok.add("n=1", 4.4408920985006262e-16);
  VerificationReport broken("broken", 1.0);
  broken.add_failure("x=\"1\"", "quadrature gave up");

  std::ostringstream json;
  emit_reports({ok, broken}, OutputFormat::Json, json);
  const auto doc = nlohmann::json::parse(json.str());
  CHECK(doc[0]["pass"] == true);
  CHECK(doc[0]["cases"][0]["residual"].get<double>() == 4.4408920985006262e-16);
  CHECK(doc[1]["pass"] == false);
  CHECK(doc[1]["max_residual"].is_null());
  CHECK(doc[1]["cases"][0]["input"] == "x=\"1\"");
  CHECK(json.str().find("4.4408920985006262e-16") != std::string::npos);

  std::ostringstream csv;
  emit_reports({ok, broken}, OutputFormat::Csv, csv);
  const auto rows = lines(csv.str());
  REQUIRE(rows.size() == 3);
  CHECK(rows[1] == "lemma4_kernel_integral,n=1,4.4408920985006262e-16,1e-08,true");
  CHECK(rows[2] == "broken,\"x=\"\"1\"\"\",inf,1,false");

  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("--out duplicates the report") {
  const std::string path = "cli_test_out.json";
  std::remove(path.c_str());
  const Outcome o = invoke({"verify-identity", "--max-l", "3", "--format", "json", "--out", path});
  CHECK(o.code == 0);
  CHECK(read_file(path) == o.out);
  std::remove(path.c_str());
  CHECK(invoke({"compute", "--out", "/nonexistent-dir/x.txt"}).code == 2);
}

TEST_CASE("golden fixtures") {
  const std::string dir = EVENZETA_GOLDEN_DIR;
  CHECK(invoke({"compute", "--max-l", "5", "--format", "csv"}).out == read_file(dir + "/compute_csv.txt"));
  CHECK(invoke({"crosscheck", "--max-l", "10"}).out == read_file(dir + "/crosscheck_text.txt"));
  CHECK(invoke({"verify-identity", "--max-l", "5", "--format", "json"}).out ==
        read_file(dir + "/identity_json.txt"));
}
