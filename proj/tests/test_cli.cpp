#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sgalg/cli.hpp"
#include "sgalg/error.hpp"

using namespace sgalg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sgalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

ErrorCode parse_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("inline generator syntax") {
  auto one = parse_inline("8,11,18");
  CHECK(one.generators.size() == 3);
  CHECK(one.generators[1] == IntegerVector{11});
  auto two = parse_inline("6,1;6,3; 7,2");
  CHECK(two.generators.size() == 3);
  CHECK(two.generators[2] == IntegerVector{7, 2});
  CHECK(parse_code([] { parse_inline("1,2;3"); }) == ErrorCode::ParseError);
  CHECK(parse_code([] { parse_inline("1,x"); }) == ErrorCode::ParseError);
  CHECK(parse_code([] { parse_inline(""); }) == ErrorCode::ParseError);
}

TEST_CASE("JSON input") {
  auto in = parse_json(R"({"generators": [[3,1,1,1],[1,3,1,1],[1,1,3,1],[1,1,1,3],[2,0,4,0],[4,0,2,0],[1,1,2,2]],
                          "E": [0,1,2,3,4,5]})");
  CHECK(in.generators.size() == 7);
  CHECK(in.generators.front().size() == 4);
  REQUIRE(in.E);
  CHECK(in.E->size() == 6);
  CHECK(parse_code([] { parse_json(R"({"generators": [[1,2],[3]]})"); }) == ErrorCode::ParseError);
  try {
    parse_json("{\"generators\":\n  [1, 2,, 3]}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("frobenius and apery subcommands") {
  CHECK(run_cli({"frobenius", "--gens", "8,11,18"}).out == "39\n");
  CHECK(run_cli({"apery", "--gens", "2,3"}).out == "0, 3\n");
  CHECK(run_cli({"oracle-apery", "--gens", "8,11,18"}).out == "0, 11, 18, 22, 29, 33, 36, 47\n");
}

TEST_CASE("groebner output names variables") {
  Run r = run_cli({"groebner", "--gens", "8,11,18"});
  CHECK(r.code == 0);
  CHECK(r.out == "Z1^2*Z2 - Y1^5\nZ1^4 - Z2^2*Y1\nZ2^3 - Z1^2*Y1^4\n");
}

TEST_CASE("JSON output is byte-stable without timing") {
  Run a = run_cli({"presentation", "--gens", "4,0;3,1;1,3;0,4", "--json", "--no-timing"});
  Run b = run_cli({"presentation", "--gens", "4,0;3,1;1,3;0,4", "--json", "--no-timing"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["command"] == "presentation");
  CHECK(doc["result"]["beta1"] == 1);
  CHECK_FALSE(doc.contains("timing_ms"));
  // the input echo parses back to the same generators
  auto again = parse_json(doc["input"].dump());
  CHECK(again.generators == parse_inline("4,0;3,1;1,3;0,4").generators);
  Run timed = run_cli({"frobenius", "--gens", "8,11,18", "--json"});
  CHECK(nlohmann::json::parse(timed.out).contains("timing_ms"));
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"frobenius", "--gens", "4,6"}).code == 2);
  CHECK(run_cli({"apery", "--gens", "1,-1"}).code == 2);
  CHECK(run_cli({"apery", "--gens", "1,0;0,1", "-E", "0"}).code == 2);
  CHECK(run_cli({"apery", "--gens", "1,2;3"}).code == 2);
  CHECK(run_cli({"cm-check", "--gens", "1,0,0;0,1,0;1,0,1;0,1,1;1,1,1", "-E", "0,1,2,3"}).code == 2);
  CHECK(run_cli({"frobenius"}).code == 2);
  CHECK(run_cli({"nosuchcommand"}).code == 2);
  CHECK(run_cli({"q-set", "--gens", "8,11,18", "--q-cap", "3"}).code == 4);
  CHECK(run_cli({"betti", "--gens", "4,0;3,1;1,3;0,4", "--degree", "6,6", "--index", "0"}).out == "1\n");
  Run err = run_cli({"frobenius", "--gens", "4,6"});
  CHECK(err.err.find("NotNumerical") != std::string::npos);
  for (auto c : {ErrorCode::NotPointed, ErrorCode::InvalidPartition, ErrorCode::NotNumerical,
                 ErrorCode::NotSimplicial, ErrorCode::ParseError})
    CHECK(exit_code_for(c) == 2);
  CHECK(exit_code_for(ErrorCode::VerificationFailed) == 3);
  CHECK(exit_code_for(ErrorCode::PartitionNotConic) == 4);
  CHECK(exit_code_for(ErrorCode::TooManyVertices) == 4);
  CHECK(exit_code_for(ErrorCode::CapExceeded) == 4);
}

TEST_CASE("verify and nerve-check succeed on the curve") {
  CHECK(run_cli({"verify", "--gens", "4,0;3,1;1,3;0,4"}).code == 0);
  CHECK(run_cli({"verify", "--gens", "4,0;3,1;1,3;0,4", "--bound", "7/2"}).code == 0);
  CHECK(run_cli({"nerve-check", "--gens", "4,0;3,1;1,3;0,4", "--degree", "6,6"}).code == 0);
  CHECK(run_cli({"transfer-check", "--gens", "4,0;3,1;1,3;0,4", "--degree", "8,8", "--index", "1"}).code == 0);
  CHECK(run_cli({"transfer-check", "--gens", "4,0;3,1;1,3;0,4", "--degree", "7,5", "--index", "1"}).code == 0);
  CHECK(run_cli({"transfer-check", "--gens", "3,1,1,1;1,3,1,1;1,1,3,1;1,1,1,3;2,0,4,0;4,0,2,0;1,1,2,2", "-E",
                 "0,1,2,3,4,5", "--degree", "6,2,7,3", "--index", "0"})
            .code == 3);
  CHECK(run_cli({"regularity", "--gens", "2,0;1,1;0,2"}).code == 0);
  CHECK(run_cli({"betti", "--gens", "4,0;3,1;1,3;0,4", "--degree", "6"}).code == 2);
}

TEST_CASE("fixture corpus matches the expected outputs") {
  namespace fs = std::filesystem;
  const fs::path root(SGALG_FIXTURES);
  int compared = 0;
  for (const auto& entry : fs::directory_iterator(root / "expected")) {
    // <fixture>.<command>.json
    const std::string file = entry.path().stem().string();
    const auto dot = file.find('.');
    const std::string fixture = file.substr(0, dot), command = file.substr(dot + 1);
    std::ifstream f(entry.path());
    std::stringstream expected;
    expected << f.rdbuf();
    Run r = run_cli({command, "--input", (root / (fixture + ".json")).string(), "--json", "--no-timing"});
    INFO(file);
    CHECK(r.code == 0);
    CHECK(r.out == expected.str());
    ++compared;
  }
  CHECK(compared >= 30);
}

TEST_CASE("fixtures round-trip through the input echo") {
  namespace fs = std::filesystem;
  for (const auto& entry : fs::directory_iterator(fs::path(SGALG_FIXTURES))) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream f(entry.path());
    std::stringstream text;
    text << f.rdbuf();
    SemigroupInput in = parse_json(text.str());
    Run r = run_cli({"q-set", "--input", entry.path().string(), "--json", "--no-timing"});
    INFO(entry.path().string());
    REQUIRE(r.code == 0);
    SemigroupInput again = parse_json(nlohmann::json::parse(r.out)["input"].dump());
    CHECK(again.generators == in.generators);
    CHECK(again.E == in.E);
    CHECK(again.tie_break == in.tie_break);
    CHECK(again.field_char == in.field_char);
  }
}
