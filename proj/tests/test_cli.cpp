#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "stabkit/cli.hpp"
#include "stabkit/errors.hpp"
#include "stabkit/serialize.hpp"

using namespace stabkit;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) result.push_back(line);
  }
  return result;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> result;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) result.push_back(f);
  return result;
}

}  // namespace

TEST_CASE("parse_range") {
  CHECK(cli::parse_range("3") == std::vector<unsigned>{3});
  CHECK(cli::parse_range("1..4") == std::vector<unsigned>{1, 2, 3, 4});
  CHECK_THROWS_AS(cli::parse_range("4..1"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_range("a..b"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_range(""), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_range("1..2..3"), InvalidArgument);
}

TEST_CASE("frame-potential CSV for qubits") {
  const auto r = invoke({"frame-potential", "--d", "2", "--n", "1..3", "--t", "2..4", "--format", "csv"});
  REQUIRE(r.code == cli::kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "d,n,t,D,recursion,combinatorial,decimal,bruteforce,fixed_state,welch,is_design");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    REQUIRE(f.size() == 11);
    CHECK(f[4] == f[5]);
    const bool design = f[2] != "4";
    CHECK(f[10] == (design ? "true" : "false"));
    if (design) CHECK(f[5] == f[9]);
  }
  CHECK(fields(rows[2])[4] == "1/4");
}

TEST_CASE("frame-potential for a qutrit at t = 3") {
  const auto r = invoke({"frame-potential", "--d", "3", "--n", "1", "--t", "3", "--format", "csv"});
  REQUIRE(r.code == cli::kExitOk);
  const auto f = fields(lines(r.out).at(1));
  CHECK(f[4] == "1/9");
  CHECK(f[9] == "1/10");
  CHECK(f[10] == "false");
}

TEST_CASE("frame-potential at t = 1 is 1/D") {
  const auto r = invoke({"frame-potential", "--d", "2", "--n", "1", "--t", "1", "--format", "csv"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(fields(lines(r.out).at(1))[4] == "1/2");
}

TEST_CASE("frame-potential JSON matches CSV and round trips") {
  const std::vector<std::string> base{"frame-potential", "--d", "2..3", "--n", "1..2", "--t", "1..4"};
  auto csv_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto csv = invoke(csv_args);
  const auto json = invoke(json_args);
  REQUIRE(csv.code == 0);
  REQUIRE(json.code == 0);
  const auto rows = lines(csv.out);
  const auto doc = nlohmann::json::parse(json.out);
  REQUIRE(doc.size() + 1 == rows.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto f = fields(rows[i + 1]);
    const auto report = serialize::report_from_json(doc[i]);
    CHECK(std::to_string(report.d) == f[0]);
    CHECK(std::to_string(report.n) == f[1]);
    CHECK(std::to_string(report.t) == f[2]);
    CHECK(doc[i].at("recursion") == f[4]);
    CHECK(doc[i].at("welch") == f[9]);
    CHECK((report.is_design ? "true" : "false") == f[10]);
    CHECK(serialize::report_to_json(report) == doc[i]);
  }
}

TEST_CASE("frame-potential output is independent of the thread count") {
  const std::vector<std::string> base{"frame-potential", "--d", "2", "--n", "1..3", "--t", "1..5", "--format", "csv"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto many = base;
  many.insert(many.end(), {"--threads", "7"});
  CHECK(invoke(one).out == invoke(many).out);
}

TEST_CASE("frame-potential caps and usage errors") {
  CHECK(invoke({"frame-potential", "--d", "2", "--n", "4", "--t", "2", "--method", "bruteforce"}).code ==
        cli::kExitCap);
  const auto all = invoke({"frame-potential", "--d", "2", "--n", "4", "--t", "2", "--format", "csv"});
  CHECK(all.code == cli::kExitOk);
  CHECK(invoke({"frame-potential", "--d", "4", "--n", "1", "--t", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"frame-potential", "--d", "2", "--n", "3..1", "--t", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"frame-potential", "--d", "2", "--n", "1", "--t", "0"}).code == cli::kExitUsage);
  CHECK(invoke({"frame-potential", "--d", "2", "--n", "1", "--t", "2", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(invoke({"no-such-command"}).code == cli::kExitUsage);
}

TEST_CASE("enumerate") {
  const auto lag = invoke({"enumerate", "lagrangians", "--d", "2", "--n", "2"});
  REQUIRE(lag.code == 0);
  CHECK(lines(lag.out).size() == 15);
  const auto states = invoke({"enumerate", "states", "--d", "2", "--n", "1", "--amplitudes"});
  REQUIRE(states.code == 0);
  const auto state_lines = lines(states.out);
  CHECK(state_lines.size() == 6);
  for (const auto& line : state_lines) {
    const auto j = nlohmann::json::parse(line);
    CHECK(serialize::amplitudes_from_json(j).has_value());
    CHECK(serialize::state_from_json(j).n() == 1);
  }
  const auto spectrum = invoke({"enumerate", "spectrum", "--d", "2", "--n", "2", "--format", "csv"});
  REQUIRE(spectrum.code == 0);
  const auto rows = lines(spectrum.out);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    CHECK(f[3] == f[4]);
    CHECK(f.back() == "true");
  }
  CHECK(invoke({"enumerate", "states", "--d", "2", "--n", "3", "--state-cap", "100"}).code == cli::kExitCap);
}

TEST_CASE("verify") {
  const auto ok = invoke({"verify", "--d", "2", "--n", "1", "--t-max", "3"});
  CHECK(ok.code == cli::kExitOk);
  const auto out = lines(ok.out);
  REQUIRE_FALSE(out.empty());
  CHECK(out.back().rfind("summary: ", 0) == 0);
  CHECK(out.front().rfind("verify ", 0) == 0);
  for (std::size_t i = 1; i + 1 < out.size(); ++i) CHECK(out[i].rfind("PASS", 0) == 0);
  CHECK(invoke({"verify", "--d", "3", "--n", "1"}).code == cli::kExitOk);
  CHECK(invoke({"verify", "--d", "4", "--n", "1"}).code == cli::kExitUsage);
  CHECK(invoke({"verify", "--d", "2", "--n", "9"}).code == cli::kExitCap);
  CHECK(invoke({"verify", "--d", "2", "--n", "2", "--state-cap", "10"}).code == cli::kExitCap);
}

TEST_CASE("--output writes the file") {
  const auto path = std::filesystem::temp_directory_path() / "stabkit_cli_output_test.csv";
  std::filesystem::remove(path);
  const auto r = invoke({"frame-potential", "--d", "2", "--n", "1", "--t", "2", "--format", "csv", "--output",
                         path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  const auto direct = invoke({"frame-potential", "--d", "2", "--n", "1", "--t", "2", "--format", "csv"});
  CHECK(content.str() == direct.out);
  std::filesystem::remove(path);
}

TEST_CASE("STABKIT_THREADS fallback") {
  ::setenv("STABKIT_THREADS", "abc", 1);
  CHECK(invoke({"frame-potential", "--d", "2", "--n", "1", "--t", "2"}).code == cli::kExitUsage);
  ::setenv("STABKIT_THREADS", "2", 1);
  CHECK(invoke({"frame-potential", "--d", "2", "--n", "1", "--t", "2"}).code == cli::kExitOk);
  ::unsetenv("STABKIT_THREADS");
}
