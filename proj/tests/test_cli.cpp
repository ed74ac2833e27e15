#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

using namespace weilheis;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result verify(std::vector<std::string> args) {
  args.insert(args.begin(), "verify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("genericity task") {
  const Result r = verify({"--task", "genericity", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["pass"] == true);
  const Json& rep = j["reports"][0];
  CHECK(rep["dims"]["roots_complement"] == 18);
  for (const auto& v : rep["dims"]["values"]) CHECK(v["val"] == "-1/2");

  const Result bad = verify({"--task", "genericity", "--generic-element", "scaled", "--format", "json"});
  CHECK(bad.code == 1);
  CHECK_FALSE(Json::parse(bad.out)["reports"][0]["witnesses"].empty());
}

TEST_CASE("counterexample and misprint tasks") {
  const Result c = verify({"--task", "counterexample", "--p", "3", "--format", "json"});
  CHECK(c.code == 0);
  CHECK(Json::parse(c.out)["reports"][0]["dims"]["invariants_character_sum"] == 0);

  const Result m = verify({"--task", "misprint", "--p", "3", "--dim", "2", "--vplus", "1", "--format", "json"});
  CHECK(m.code == 0);
  CHECK_FALSE(Json::parse(m.out)["reports"][0]["witnesses"].empty());
}

TEST_CASE("json output is byte-deterministic and round-trips") {
  const std::vector<std::string> args{"--task", "weil", "--p", "3", "--dim", "4", "--format", "json", "--seed", "5"};
  // Keep it quick: the sampled path on Sp4(F3).
  const Result a = verify(args), b = verify(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["reports"][0]["runtime_ms"] == 0);
  CHECK(to_json(from_json(j["reports"][0])).dump() == j["reports"][0].dump());
  CHECK(verify({"--task", "weil", "--p", "3", "--dim", "4", "--format", "json", "--seed", "6"}).code == 0);
}

TEST_CASE("text output and --out") {
  const Result t = verify({"--task", "svn", "--p", "5"});
  CHECK(t.code == 0);
  CHECK(t.out.find("PASS  svn") == 0);
  CHECK(t.out.find("checked: ") != std::string::npos);
  CHECK(t.out.find("1/1 passed") != std::string::npos);

  const std::string path = "test_cli_out.json";
  const Result f = verify({"--task", "sign", "--p", "3", "--format", "json", "--out", path});
  CHECK(f.code == 0);
  CHECK(f.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  CHECK(j["reports"][0]["dims"]["eigenvalue"] == "-1");
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2 with distinct messages") {
  const Result unknown = verify({"--task", "nope"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("unknown task") != std::string::npos);

  const Result even = verify({"--task", "svn", "--p", "4"});
  CHECK(even.code == 2);
  CHECK(even.err.find("odd prime") != std::string::npos);
  CHECK(verify({"--task", "svn", "--p", "2"}).code == 2);

  const Result cap = verify({"--task", "weil", "--dim", "4", "--max-group-order", "1000"});
  CHECK(cap.code == 2);
  CHECK(cap.err.find("group too large") != std::string::npos);

  const Result odd_dim = verify({"--task", "svn", "--dim", "3"});
  CHECK(odd_dim.code == 2);
  CHECK(odd_dim.err.find("invalid configuration") != std::string::npos);

  CHECK(verify({"--task", "gerardin", "--vplus", "2"}).code == 2);
  CHECK(verify({"--task", "svn", "--cc-unit", "3"}).code == 2);
  CHECK(verify({"--format", "xml"}).code == 2);
  CHECK(verify({"--no-such-flag"}).code == 2);
  CHECK(verify({"--help"}).code == 0);
}
