// Copyright 2026 The submodbb Authors
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

// Drives the submodbb executable as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "submodbb/instances.hpp"
#include "test_util.hpp"

#ifndef SUBMODBB_CLI_PATH
#error "SUBMODBB_CLI_PATH must name the CLI executable"
#endif

namespace submodbb {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Output {
  int status = -1;
  std::string out;
};

Output Cli(const std::string& args) {
  const std::string cmd = std::string(SUBMODBB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  Output o;
  if (pipe == nullptr) return o;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) o.out.append(buf, got);
  const int raw = ::pclose(pipe);
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("submodbb_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    tiny_ = (dir_ / "tiny.json").string();
    SaveInstance(testing::TinyLoc(), tiny_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::string tiny_;
};

TEST_F(CliTest, GenerateUsesDefaults) {
  const Output o = Cli("generate --type cov --n 30 --k 8 --seed 1 --out " + Path("cov.json"));
  ASSERT_EQ(o.status, 0) << o.out;
  const json doc = json::parse(Slurp(Path("cov.json")));
  EXPECT_EQ(doc["m"], 31);
  EXPECT_EQ(doc["cover_prob"], 0.07);
  EXPECT_EQ(doc["type"], "weighted_coverage");

  ASSERT_EQ(Cli("generate --type loc --n 3 --m 2 --k 2 --seed 7 --out " + Path("loc.json")).status, 0);
  const json loc = json::parse(Slurp(Path("loc.json")));
  EXPECT_EQ(loc["g"].size(), 2u);
  EXPECT_EQ(loc["g"][0].size(), 3u);
}

TEST_F(CliTest, GenerateUsageErrors) {
  EXPECT_NE(Cli("generate --type loc --k 2 --seed 1 --out " + Path("x.json")).status, 0);
  EXPECT_NE(Cli("generate --type tree --n 3 --k 2 --seed 1 --out " + Path("x.json")).status, 0);
  EXPECT_NE(Cli("generate --type loc --n 3 --k 5 --seed 1 --out " + Path("x.json")).status, 0);
}

TEST_F(CliTest, SolveBruteAndGreedyOnTinyLoc) {
  for (const char* alg : {"brute", "greedy"}) {
    const Output o = Cli(std::string("solve --instance ") + tiny_ + " --algorithm " + alg);
    ASSERT_EQ(o.status, 0) << o.out;
    const json doc = json::parse(o.out);
    EXPECT_NEAR(doc["value"].get<double>(), 1.1, 1e-12);
    EXPECT_EQ(doc["solution"], json::parse("[1,2]"));
  }
  EXPECT_NE(Cli("solve --instance " + tiny_ + " --algorithm simplex").status, 0);
  EXPECT_NE(Cli("solve --instance " + Path("missing.json") + " --algorithm cg").status, 0);
}

TEST_F(CliTest, IcgWithLambdaZeroMatchesCg) {
  ASSERT_EQ(Cli("generate --type loc --n 14 --k 4 --seed 3 --out " + Path("i.json")).status, 0);
  const json cg = json::parse(Cli("solve --instance " + Path("i.json") + " --algorithm cg").out);
  const json icg = json::parse(
      Cli("solve --instance " + Path("i.json") + " --algorithm icg --lambda 0 --seed 9").out);
  EXPECT_EQ(cg["value"], icg["value"]);
  EXPECT_EQ(cg["stats"]["bip_solves"], icg["stats"]["bip_solves"]);
}

TEST_F(CliTest, ResultDocumentIsDeterministic) {
  ASSERT_EQ(Cli("generate --type cov --n 20 --k 5 --seed 4 --cover-prob 0.1 --out " +
                Path("d.json")).status, 0);
  for (const char* alg : {"bb-icg-plus", "icg", "astar-dom"}) {
    const std::string base = "solve --instance " + Path("d.json") + " --algorithm " + alg +
                             " --seed 11 --lambda 30 --out ";
    ASSERT_EQ(Cli(base + Path("a.json")).status, 0);
    ASSERT_EQ(Cli(base + Path("b.json")).status, 0);
    json a = json::parse(Slurp(Path("a.json")));
    json b = json::parse(Slurp(Path("b.json")));
    a["stats"].erase("wall_time_s");
    b["stats"].erase("wall_time_s");
    EXPECT_EQ(a.dump(1), b.dump(1)) << alg;
  }
}

TEST_F(CliTest, TimeLimitGivesDistinctExitCode) {
  ASSERT_EQ(Cli("generate --type loc --n 80 --k 10 --seed 1 --out " + Path("big.json")).status, 0);
  const Output o = Cli("solve --instance " + Path("big.json") +
                       " --algorithm astar-mod --time-limit 0.05");
  EXPECT_EQ(o.status, 3) << o.out;
  const json doc = json::parse(o.out);
  EXPECT_TRUE(doc["time_limit_hit"].get<bool>());
  EXPECT_FALSE(doc["proven_optimal"].get<bool>());
}

TEST_F(CliTest, Verify) {
  const Output ok = Cli("verify --instance " + tiny_);
  EXPECT_EQ(ok.status, 0) << ok.out;
  EXPECT_NE(ok.out.find("all properties hold"), std::string::npos);

  std::ofstream(Path("neg.json"))
      << R"({"type":"weighted_coverage","n":2,"m":2,"k":1,"cover":[[1],[2]],"weights":[0.5,-0.1]})";
  const Output bad = Cli("verify --instance " + Path("neg.json"));
  EXPECT_NE(bad.status, 0);
  EXPECT_NE(bad.out.find("weights"), std::string::npos) << bad.out;

  ASSERT_EQ(Cli("generate --type loc --n 30 --k 5 --seed 1 --out " + Path("n30.json")).status, 0);
  const Output refused = Cli("verify --instance " + Path("n30.json"));
  EXPECT_NE(refused.status, 0);
  EXPECT_NE(refused.out.find("cap"), std::string::npos) << refused.out;
}

TEST_F(CliTest, BenchWritesCsv) {
  std::ofstream(Path("bench.json")) << R"({
    "classes": [{"type": "loc", "n": 12, "k": 3, "instances": 2, "base_seed": 5}],
    "algorithms": ["brute", "bb-icg", "lazy-greedy"], "time_limit_s": 60})";
  const Output o = Cli("bench --config " + Path("bench.json") + " --out-dir " + Path("out"));
  ASSERT_EQ(o.status, 0) << o.out;
  const std::string csv = Slurp(dir_ / "out" / "results.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "type,n,k,algorithm,runs,solved,mean_time_s,mean_nodes,mean_bip_solves,"
            "mean_oracle_distinct");
  EXPECT_NE(csv.find("loc,12,3,brute,2,2,"), std::string::npos);
  EXPECT_NE(csv.find("loc,12,3,bb-icg,2,2,"), std::string::npos);
  EXPECT_EQ(std::distance(fs::directory_iterator(dir_ / "out" / "runs"), fs::directory_iterator()), 6);
}

}  // namespace
}  // namespace submodbb
