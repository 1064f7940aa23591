#include <doctest.h>

#include <sstream>

#include "garside/cli.hpp"
#include "garside/serialize.hpp"

using garside::Json;
using garside::cli::run;

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

const std::string kPsi2 = "(2 1)^7 (4)^6 3 (4)^3";

}  // namespace

TEST_CASE("word syntax") {
  using garside::cli::expand_word;
  CHECK(expand_word("1 -2 3") == std::vector<int>{1, -2, 3});
  CHECK(expand_word("  1,2 ,+3 ") == std::vector<int>{1, 2, 3});
  CHECK(expand_word("(1 2)^2") == std::vector<int>{1, 2, 1, 2});
  CHECK(expand_word("(1 2)^-2") == std::vector<int>{-2, -1, -2, -1});
  CHECK(expand_word("((1)^2 -3)^2") == std::vector<int>{1, 1, -3, 1, 1, -3});
  CHECK(expand_word("(1)^0 2") == std::vector<int>{2});
  CHECK(expand_word("").empty());
  CHECK_THROWS_AS(expand_word("1 x"), garside::cli::UsageError);
  CHECK_THROWS_AS(expand_word("(1 2"), garside::cli::UsageError);
  CHECK_THROWS_AS(expand_word("1 0"), garside::cli::UsageError);
  CHECK_THROWS_AS(garside::cli::parse_word(3, "3"), std::invalid_argument);
}

TEST_CASE("nf prints the normal form of psi_2") {
  const auto r = call({"nf", "-n", "5", kPsi2});
  CHECK(r.code == 0);
  CHECK(r.out.find("inf 0  sup 7  canonical length 7") != std::string::npos);
  const auto j = call({"nf", "-n", "5", kPsi2, "--format", "json"});
  const Json doc = Json::parse(j.out);
  CHECK(doc["result"]["normal_form"]["factors"].size() == 7);
  CHECK(doc["result"]["normal_form"]["inf"] == 0);
}

TEST_CASE("empty word is the identity") {
  const auto r = call({"nf", "-n", "5", ""});
  CHECK(r.code == 0);
  CHECK(r.out.find("identity") != std::string::npos);
}

TEST_CASE("family report as json") {
  const auto r = call({"paper", "--k", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["result"]["pass"] == true);
  for (const auto& c : doc["result"]["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("exit codes") {
  CHECK(call({"nf", "-n", "5", "1 x"}).code == 2);
  CHECK(call({"nf", "5"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"nf", "-n", "5", "9"}).code == 1);
  CHECK(call({"paper", "--k", "1"}).code == 1);
  CHECK(call({"orbit", "-n", "5", "1"}).code == 2);
  const auto capped = call({"sss", "-n", "5", kPsi2, "--cap", "5"});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("resource limit") != std::string::npos);
  CHECK(call({"transport", "-n", "5", "1 3", "1 1"}).code == 1);
  CHECK(call({"bgn", "-n", "5", "1", "--curve", "1,5"}).code == 1);
}

TEST_CASE("every subcommand has help") {
  for (const std::string cmd : {"nf", "inv", "mul", "conj", "cycle", "decycle", "slide", "rigid", "sss", "sc",
                                "transport", "curves", "bgn", "classify", "paper", "bench"}) {
    const auto r = call({cmd, "--help"});
    CAPTURE(cmd);
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
  }
}

TEST_CASE("every subcommand round-trips through --verify") {
  const std::vector<std::vector<std::string>> invocations{
      {"nf", "-n", "5", kPsi2},
      {"inv", "-n", "5", kPsi2},
      {"mul", "-n", "4", "1 -2", "3 2"},
      {"conj", "-n", "5", kPsi2, "1"},
      {"cycle", "-n", "5", kPsi2},
      {"decycle", "-n", "5", kPsi2},
      {"slide", "-n", "5", kPsi2},
      {"rigid", "-n", "5", kPsi2},
      {"sss", "-n", "4", "1 2 -3"},
      {"sc", "-n", "5", kPsi2},
      {"transport", "-n", "4", "1 2 -3", ""},
      {"curves", "-n", "5", "1 3"},
      {"bgn", "-n", "5", kPsi2, "--no-exit"},
      {"classify", "-n", "4", "1 -3"},
      {"paper", "--k", "2"},
      {"bench", "--kmin", "2", "--kmax", "2"},
  };
  for (auto args : invocations) {
    args.push_back("--verify");
    args.push_back("--format");
    args.push_back("json");
    const auto r = call(args);
    CAPTURE(args.front());
    CHECK(r.code == 0);
    CHECK(r.err.find("verify: ok") != std::string::npos);
    CHECK_NOTHROW((void)Json::parse(r.out));
  }
}

TEST_CASE("json output is byte-stable across runs and job counts") {
  const auto a = call({"sss", "-n", "5", kPsi2, "--format", "json"});
  const auto b = call({"sss", "-n", "5", kPsi2, "--format", "json", "--jobs", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["result"]["size"] == 424);
  CHECK(call({"sc", "-n", "5", kPsi2, "--format", "json"}).out == call({"sc", "-n", "5", kPsi2, "--format", "json"}).out);
}

TEST_CASE("dot and csv outputs") {
  const auto dot = call({"sc", "-n", "5", kPsi2, "--dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph SC {", 0) == 0);
  const auto csv = call({"bench", "--kmin", "2", "--kmax", "3"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("k,canonical_length,sss_size,sc_size,wall_time_ms\n2,7,424,14,", 0) == 0);
  CHECK(csv.out.find("\n3,11,,22,") != std::string::npos);
}

TEST_CASE("bgn and classify text output") {
  const auto bgn = call({"bgn", "-n", "5", kPsi2, "--curve", "1,2"});
  CHECK(bgn.code == 0);
  CHECK(bgn.out.find("curve [1,2]") != std::string::npos);
  const auto cls = call({"classify", "-n", "5", "1"});
  CHECK(cls.code == 0);
  CHECK(cls.out.rfind("ReducibleCertified", 0) == 0);
}
