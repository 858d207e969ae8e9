// Copyright 2026 The findep Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(FINDEP_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, ExactCycle) {
  const CliRun r = run("exact cycle --n 3 --q 3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  ASSERT_EQ(j["distribution"].size(), 6u);
  for (const auto& e : j["distribution"]) {
    EXPECT_EQ(e["num"], "1");
    EXPECT_EQ(e["den"], "6");
  }
}

TEST(Cli, ExactLineCsv) {
  const CliRun r = run("exact line --n 2 --k 1 --q 4 --format csv");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "state,num,den");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_NE(line.find(",1,12"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 12);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("exact cycle --n 3 --q 2").code, 2);
  EXPECT_EQ(run("exact cycle --q 3").code, 2);
  EXPECT_EQ(run("exact torus --n 3 --q 3").code, 2);
  EXPECT_EQ(run("exact cycle --n 3 --q 3 --format xml").code, 2);
  EXPECT_EQ(run("verify nosuchsuite").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, BudgetExceeded) {
  EXPECT_EQ(run("exact cycle --n 8 --q 4 --budget 1000").code, 3);
  EXPECT_EQ(run("exact cycle --n 8 --q 4", "FINDEP_BUDGET=1000").code, 3);
  EXPECT_EQ(run("exact cycle --n 5 --q 3 --budget 1000", "FINDEP_BUDGET=10").code, 0);
}

TEST(Cli, OutFile) {
  const std::string path = testing::TempDir() + "findep_cli_out.json";
  ASSERT_EQ(run("exact cycle --n 3 --q 4 --out " + path).code, 0);
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j["distribution"].size(), 24u);
  std::remove(path.c_str());
}

TEST(Cli, SamplesAreDeterministic) {
  const CliRun a = run("sample necklace --n 7 --q 3 --reps 200 --seed 5");
  const CliRun b = run("sample necklace --n 7 --q 3 --reps 200 --seed 5 --threads 2");
  const CliRun c = run("sample necklace --n 7 --q 3 --reps 200 --seed 6");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  const CliRun e1 = run("sample eden --n 6 --q 4 --reps 50 --seed 9 --format json");
  const CliRun e2 = run("sample eden --n 6 --q 4 --reps 50", "FINDEP_SEED=9 FINDEP_FORMAT=json");
  ASSERT_EQ(e1.code, 0);
  EXPECT_EQ(e1.out, e2.out);
  EXPECT_EQ(nlohmann::json::parse(e1.out)["samples"].size(), 50u);
}

TEST(Cli, SampleGoodnessOfFit) {
  const CliRun n = run("sample necklace --n 5 --q 3 --reps 100000 --seed 7 --gof");
  ASSERT_EQ(n.code, 0) << n.out;
  EXPECT_TRUE(nlohmann::json::parse(n.out)["gof"]["pass"].get<bool>());
  const CliRun e = run("sample eden --n 6 --q 4 --reps 100000 --seed 7 --gof");
  ASSERT_EQ(e.code, 0) << e.out;
  EXPECT_EQ(run("sample eden --n 2 --q 4").code, 2);
}

TEST(Cli, VerifySuites) {
  const CliRun p = run("verify partition --max-n 7");
  ASSERT_EQ(p.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(p.out)["passed"].get<bool>());

  const CliRun b = run("verify blockfactor-stat");
  ASSERT_EQ(b.code, 0);
  const auto details = nlohmann::json::parse(b.out)["results"][0]["details"];
  EXPECT_EQ(details["both_star"], "1/6");
  EXPECT_EQ(details["two_block_factor"], "1/4");

  const CliRun k = run("verify kdep --n 5 --q 3 --k 1");
  EXPECT_EQ(k.code, 1);
  const auto kj = nlohmann::json::parse(k.out);
  EXPECT_FALSE(kj["passed"].get<bool>());
  EXPECT_EQ(kj["results"][0]["details"]["cases"][0]["counterexample"]["S1"], nlohmann::json::array({1}));
  EXPECT_EQ(kj["results"][0]["details"]["cases"][0]["counterexample"]["S2"], nlohmann::json::array({3}));
  EXPECT_EQ(run("verify kdep --n 5 --q 3").code, 2);
}

TEST(Cli, EdenSnapshot) {
  const CliRun r = run("eden-snapshot --n 6 --q 4 --seed 3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["outer"].size(), 6u);
  EXPECT_EQ(j["cluster_size"], 4);
}
