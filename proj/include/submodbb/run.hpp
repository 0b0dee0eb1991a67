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

// Algorithm dispatch, result documents and the benchmark harness behind the
// command-line tool.

#ifndef SUBMODBB_RUN_HPP_
#define SUBMODBB_RUN_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "submodbb/instances.hpp"
#include "submodbb/oracle.hpp"
#include "submodbb/result.hpp"

namespace submodbb {

enum class Algorithm {
  kGreedy,
  kLazyGreedy,
  kAStarMod,
  kAStarDom,
  kCg,
  kIcg,
  kBbIcg,
  kBbIcgPlus,
  kBrute,
};

const std::vector<Algorithm>& AllAlgorithms();
std::string_view AlgorithmName(Algorithm a);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
// Exact methods certify optimality; greedy and lazy-greedy do not.
bool IsExact(Algorithm a);

// Refuses (std::invalid_argument) above this many candidate subsets.
inline constexpr double kBruteForceSubsetCap = 2e8;

/// Enumerates every S with |S| <= k in (size, lexicographic) order and keeps
/// the first maximum.
OptResult BruteForceMaximize(const SubmodularOracle& oracle, int k,
                             const Limits& limits = {});

struct RunConfig {
  Algorithm algorithm = Algorithm::kBbIcgPlus;
  int lambda = -1;  // < 0 selects 10 * k
  std::uint64_t seed = 0;
  double time_limit_s = 3600.0;
  bool memo = false;
  std::optional<std::size_t> memo_cap;
};

struct RunResult {
  std::string algorithm;
  std::string instance_path;
  std::optional<std::uint64_t> instance_seed;
  std::uint64_t seed = 0;
  int lambda = 0;  // effective value
  int k = 0;
  double value = 0.0;  // f(solution), recomputed on the bare oracle
  Solution solution;
  bool proven_optimal = false;
  bool time_limit_hit = false;
  RunStats stats;
};

/// Runs one algorithm with a counting (and optionally memoizing) wrapper
/// around the instance oracle.
RunResult RunAlgorithm(const Instance& instance, const RunConfig& config,
                       const std::string& instance_path = "");

nlohmann::json ToJson(const RunResult& result);
// Indented JSON with sorted keys and a trailing newline.
std::string SerializeRunResult(const RunResult& result);

// Exit status for `solve`: 0 when finished, kExitTimeLimit when the time
// limit cut an exact method short.
inline constexpr int kExitTimeLimit = 3;
int ExitCodeFor(const RunResult& result, Algorithm algorithm);

// ---------------------------------------------------------------------------
// Benchmark harness.

struct BenchClass {
  std::string type;  // "loc" or "cov"
  int n = 0;
  int m = 0;
  int k = 0;
  double cover_prob = kDefaultCoverProb;
  std::vector<std::uint64_t> seeds;
};

struct BenchConfig {
  std::vector<BenchClass> classes;
  std::vector<Algorithm> algorithms;
  int lambda = -1;
  double time_limit_s = 3600.0;
  int threads = 0;  // 0 selects the hardware concurrency
  bool memo = false;
};

/// Config document:
///   {"classes": [{"type": "loc", "n": 30 | [30, 35] | {"from": 30, "to": 40,
///     "step": 5}, "m": optional (default n+1), "k": 5 | [5, 8],
///     "cover_prob": 0.07, "instances": 5, "base_seed": 1,
///     "seeds": optional explicit list}],
///    "algorithms": [...], "lambda": ..., "time_limit_s": ..., "threads": ...,
///    "memo": false}
/// Without "seeds", instance t of a class uses DeriveSeed(base_seed, class
/// index, t). Throws InstanceError naming the offending field.
BenchConfig ParseBenchConfig(const nlohmann::json& doc);
BenchConfig LoadBenchConfig(const std::filesystem::path& path);

std::uint64_t DeriveSeed(std::uint64_t base_seed, std::size_t class_index,
                         std::size_t instance_index);

inline constexpr std::string_view kBenchCsvHeader =
    "type,n,k,algorithm,runs,solved,mean_time_s,mean_nodes,mean_bip_solves,"
    "mean_oracle_distinct";

/// Aggregates archived per-run documents into the CSV (header included).
/// Rows follow first appearance of (type, n, k, algorithm) in `runs`.
std::string AggregateCsv(const std::vector<nlohmann::json>& runs);

struct BenchSummary {
  std::size_t runs = 0;
  std::size_t failures = 0;
  std::filesystem::path csv_path;
};

/// Runs the cross product on a thread pool. Writes instances/, runs/ and
/// results.csv under out_dir. A failing run is archived with an "error"
/// field and the harness continues.
BenchSummary RunBench(const BenchConfig& config,
                      const std::filesystem::path& out_dir);

}  // namespace submodbb

#endif  // SUBMODBB_RUN_HPP_
