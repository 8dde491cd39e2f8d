// Copyright 2026 The opk authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "opk/json_io.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("OPK_CLI");
  REQUIRE(cli != nullptr);
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/opk_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("cli smoke", "[cli]") {
  if (std::getenv("OPK_CLI") == nullptr) {
    WARN("OPK_CLI not set; skipping CLI tests");
    return;
  }

  SECTION("k0 reports the block count") {
    std::string path = write_temp("c2.json", R"({"field":"C","blocks":[1,1]})");
    RunResult r = run_cli("k0 " + path);
    REQUIRE(r.exit_code == 0);
    opk::Json j = opk::Json::parse(r.out);
    REQUIRE(j["k0_rank"] == 2);
    REQUIRE(j["basis"].size() == 2);
  }
  SECTION("cup agrees with the oracle on the emitted report") {
    std::string path = write_temp("c2.json", R"({"field":"C","blocks":[1,1]})");
    RunResult r = run_cli("cup " + path + " --x 2,-1 --y 3,2");
    REQUIRE(r.exit_code == 0);
    opk::Json j = opk::Json::parse(r.out);
    REQUIRE(j["cup"] == opk::Json::array({6, -2}));
    REQUIRE(j["cup"] == j["oracle"]);
  }
  SECTION("check suites pass and reports are deterministic") {
    RunResult a = run_cli("check matops --trials 25 --seed 7");
    RunResult b = run_cli("check matops --trials 25 --seed 7");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);
    opk::Json j = opk::Json::parse(a.out);
    REQUIRE(j["pass"] == true);
    for (const auto& law : j["laws"]) REQUIRE(law["pass"] == true);
  }
  SECTION("bott subcommand runs the grid") {
    RunResult r = run_cli("bott --grid 7");
    REQUIRE(r.exit_code == 0);
    opk::Json j = opk::Json::parse(r.out);
    REQUIRE(j["pass"] == true);
  }
  SECTION("input errors exit with code two") {
    std::string path = write_temp("bad.json", "not json at all");
    REQUIRE(run_cli("k0 " + path).exit_code == 2);
    REQUIRE(run_cli("k0 /definitely/not/there.json").exit_code == 2);
    std::string neg = write_temp("neg.json", R"({"field":"C","blocks":[0]})");
    REQUIRE(run_cli("k0 " + neg).exit_code == 2);
  }
}
