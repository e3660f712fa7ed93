#include <doctest.h>

#include "staircase/cli.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <sstream>

using namespace staircase;

namespace {

CommandResult run(std::vector<std::string> args) {
  args.push_back("--no-timestamp");
  return run_command(args);
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("table prints the k = 3 reference counts") {
  const CommandResult r = run({"table", "--k", "3", "--n-max", "7"});
  REQUIRE(r.status == 0);
  const auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[1].find("7     35    181    933   4811  24807 127913") != std::string::npos);
  CHECK(lines[2].find("90135") != std::string::npos);
  CHECK(lines[3].find("67489") != std::string::npos);
  const CommandResult oracle = run({"table", "--k", "3", "--n-max", "5", "--method", "oracle"});
  const CommandResult transfer = run({"table", "--k", "3", "--n-max", "5"});
  CHECK(data_lines(oracle.out) == data_lines(transfer.out));
}

TEST_CASE("count") {
  CHECK(data_lines(run({"count", "--family", "kg", "--k", "1", "--n", "5"}).out) == std::vector<std::string>{"1"});
  for (const char* f : {"path", "cycle", "grid", "rt", "kg"})
    for (int k = 1; k <= 3; ++k)
      for (int n = 3; n <= 5; ++n) {
        const std::vector<std::string> base{"count", "--family", f, "--k", std::to_string(k), "--n", std::to_string(n)};
        auto oracle = base;
        oracle.insert(oracle.end(), {"--method", "oracle"});
        CHECK(data_lines(run(oracle).out) == data_lines(run(base).out));
      }
  const auto refined = data_lines(run({"count", "--family", "kg", "--k", "3", "--n", "2", "--refined"}).out);
  CHECK(refined.size() == 7);
  CHECK(refined[2] == "21 4");
  CHECK(run({"count", "--family", "path", "--k", "3", "--n", "2", "--refined"}).status == kExitUsage);
}

TEST_CASE("csv and json encodings") {
  const CommandResult csv = run({"count", "--family", "grid", "--k", "3", "--n", "7", "--format", "csv"});
  CHECK(csv.out == "family,k,n,count\ngrid,3,7,127913\n");
  const CommandResult table = run({"table", "--k", "3", "--n-max", "2", "--format", "csv"});
  CHECK(table.out.rfind("family,k,n,count\ngrid,3,1,7\ngrid,3,2,35\n", 0) == 0);
  const CommandResult j = run({"count", "--family", "rt", "--k", "3", "--n", "5", "--format", "json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["result"]["count"] == 3809);
  CHECK(parsed["config"]["precision"] == 60);
  CHECK_FALSE(parsed["config"].contains("generated"));
}

TEST_CASE("gf json output round-trips") {
  const CommandResult r = run({"gf", "--family", "grid", "--k", "3", "--format", "json"});
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(r.out).dump(2) + "\n" == r.out);
  CHECK(nlohmann::json::parse(r.out)["result"]["text"] == "x*(7 - x^2) / (1 - 5*x - x^2 + x^3)");
}

TEST_CASE("gf --check-printed exits 1 on a discrepancy") {
  const CommandResult kg = run({"gf", "--family", "kg", "--k", "3", "--check-printed"});
  CHECK(kg.status == kExitFailedCheck);
  CHECK(kg.out.find("status: discrepant") != std::string::npos);
  CHECK(run({"gf", "--family", "grid", "--k", "3", "--check-printed"}).status == 0);
  CHECK(run({"gf", "--family", "grid", "--k", "4", "--check-printed"}).status == kExitUsage);
}

TEST_CASE("recurrence") {
  const CommandResult r = run({"recurrence", "--family", "kg", "--k", "3"});
  CHECK(data_lines(r.out)[0] == "a(n) = 4*a(n-1) + 3*a(n-2)");
  CHECK(run({"recurrence", "--family", "kg", "--k", "6", "--terms", "9"}).status == kExitFailedCheck);
}

TEST_CASE("bfile") {
  const CommandResult r = run({"bfile", "--family", "kg", "--k", "3", "--n-max", "4"});
  CHECK(data_lines(r.out) == std::vector<std::string>{"1 7", "2 31", "3 145", "4 673"});
  CHECK(r.out.back() == '\n');
}

TEST_CASE("verify exit status follows the checks") {
  const CommandResult r = run({"verify", "--suite", "chebyshev"});
  CHECK(r.status == 0);
  CHECK(r.out.find("8 of 8 checks passed") != std::string::npos);
  const CommandResult far = run({"verify", "--suite", "theorems", "--k", "3", "--x", "1/5"});
  CHECK(far.status == kExitFailedCheck);
  const CommandResult j = run({"verify", "--suite", "lemmas", "--k", "2", "--n-max", "6", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["result"]["reports"].size() == 3);
}

TEST_CASE("usage errors") {
  const CommandResult unknown = run({"count", "--family", "torus", "--k", "3", "--n", "2"});
  CHECK(unknown.status == kExitUsage);
  CHECK_FALSE(unknown.err.empty());
  CHECK(run({"count", "--family", "kg", "--k", "3", "--n", "2", "--bogus"}).status == kExitUsage);
  CHECK(run({"frobnicate"}).status == kExitUsage);
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"count", "--family", "cycle", "--k", "3", "--n", "2"}).status == kExitUsage);
  CHECK(run({"verify", "--format", "csv"}).status == kExitUsage);
}

TEST_CASE("oracle budget points to the transfer method") {
  const CommandResult r =
      run({"count", "--family", "grid", "--k", "3", "--n", "9", "--method", "oracle", "--budget", "100"});
  CHECK(r.status == kExitUsage);
  CHECK(r.err.find("--method transfer") != std::string::npos);
}

TEST_CASE("help lists the family notation") {
  const CommandResult r = run_command({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("KG_{2,n}") != std::string::npos);
  CHECK(r.out.find("P_2 x P_n") != std::string::npos);
}

TEST_CASE("output is deterministic and records precision") {
  const std::vector<std::string> args{"verify", "--suite", "examples"};
  CHECK(run(args).out == run(args).out);
  CHECK(run({"table", "--k", "3", "--n-max", "3", "--precision", "80"}).out.find("precision=80") != std::string::npos);
  setenv("STAIRCASE_PRECISION", "70", 1);
  CHECK(run({"table", "--k", "3", "--n-max", "3"}).out.find("precision=70") != std::string::npos);
  CHECK(run({"table", "--k", "3", "--n-max", "3", "--precision", "90"}).out.find("precision=90") != std::string::npos);
  setenv("STAIRCASE_PRECISION", "many", 1);
  CHECK(run({"table", "--k", "3", "--n-max", "3"}).status == kExitUsage);
  unsetenv("STAIRCASE_PRECISION");
  CHECK(run_command({"table", "--k", "3", "--n-max", "3"}).out.find("# generated ") != std::string::npos);
}

}
