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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "submodbb/instances.hpp"
#include "submodbb/oracle.hpp"
#include "submodbb/run.hpp"

namespace {

using namespace submodbb;

constexpr int kExitFailure = 1;
constexpr int kExitViolation = 4;

int Generate(const std::string& type, int n, std::optional<int> m, int k,
             std::uint64_t seed, double cover_prob, const std::string& out) {
  const int clients = m.value_or(n + 1);
  Instance inst = type == "loc"
                      ? Instance(GenerateLoc(n, clients, k, seed))
                      : Instance(GenerateCov(n, clients, k, cover_prob, seed));
  SaveInstance(inst, out);
  return 0;
}

int Solve(const std::string& instance_path, const std::string& algorithm_name,
          const RunConfig& base_config, const std::string& out) {
  const auto algorithm = ParseAlgorithm(algorithm_name);
  if (!algorithm) {
    std::cerr << "unknown algorithm '" << algorithm_name << "'\n";
    return kExitFailure;
  }
  const Instance inst = LoadInstance(instance_path);
  RunConfig config = base_config;
  config.algorithm = *algorithm;
  const RunResult result = RunAlgorithm(inst, config, instance_path);
  const std::string doc = SerializeRunResult(result);
  if (out.empty()) {
    std::cout << doc;
  } else {
    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot write " + out);
    file << doc;
  }
  return ExitCodeFor(result, *algorithm);
}

int Verify(const std::string& instance_path, int cap) {
  const Instance inst = LoadInstance(instance_path);
  const auto oracle = MakeOracle(inst);
  if (oracle->n() > cap) {
    std::cerr << "refusing to verify: n = " << oracle->n()
              << " exceeds the enumeration cap " << cap
              << " (raise it with --cap; the check visits all 2^n subsets)\n";
    return kExitFailure;
  }
  const OracleReport report = VerifyOracle(*oracle, cap);
  std::cout << "normalized:     " << (report.is_normalized ? "yes" : "no") << "\n"
            << "non-decreasing: " << (report.is_nondecreasing ? "yes" : "no") << "\n"
            << "submodular:     " << (report.is_submodular ? "yes" : "no") << "\n";
  if (report.counterexample) {
    std::cout << "counterexample: S = " << report.counterexample->first.ToString()
              << ", T = " << report.counterexample->second.ToString() << "\n";
  }
  std::cout << (report.message.empty()
                    ? (report.ok() ? "all properties hold" : "property violated")
                    : report.message)
            << "\n";
  return report.ok() ? 0 : kExitViolation;
}

int Bench(const std::string& config_path, const std::string& out_dir) {
  const BenchConfig config = LoadBenchConfig(config_path);
  const BenchSummary summary = RunBench(config, out_dir);
  std::cout << "runs: " << summary.runs << ", failures: " << summary.failures
            << "\ncsv: " << summary.csv_path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximization of monotone submodular functions under a "
               "cardinality constraint"};
  app.require_subcommand(1);

  std::string type;
  int n = 0;
  std::optional<int> m;
  int k = 0;
  std::uint64_t gen_seed = 0;
  double cover_prob = kDefaultCoverProb;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a seeded benchmark instance");
  gen->add_option("--type", type, "Objective type")
      ->required()
      ->check(CLI::IsMember({"loc", "cov"}));
  gen->add_option("--n", n, "Number of elements")->required()->check(CLI::PositiveNumber);
  gen->add_option("--m", m, "Clients (loc) or items (cov); default n+1");
  gen->add_option("--k", k, "Cardinality budget")->required();
  gen->add_option("--seed", gen_seed, "Generator seed")->required();
  gen->add_option("--cover-prob", cover_prob, "Coverage probability (cov)")
      ->capture_default_str();
  gen->add_option("--out", gen_out, "Output path")->required();

  std::string instance_path;
  std::string algorithm;
  RunConfig run_config;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("--instance", instance_path, "Instance file")->required();
  solve->add_option("--algorithm", algorithm,
                    "greedy|lazy-greedy|astar-mod|astar-dom|cg|icg|bb-icg|"
                    "bb-icg-plus|brute")
      ->required();
  solve->add_option("--lambda", run_config.lambda,
                    "Samples per ICG iteration (default 10k)");
  solve->add_option("--seed", run_config.seed, "Solver seed")->capture_default_str();
  solve->add_option("--time-limit", run_config.time_limit_s, "Seconds")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  solve->add_flag("--memo", run_config.memo, "Memoize oracle values");
  solve->add_option("--out", solve_out, "Write the result here instead of stdout");

  std::string bench_config;
  std::string bench_out = "bench_out";
  auto* bench = app.add_subcommand("bench", "Run a benchmark configuration");
  bench->add_option("--config", bench_config, "Config file")->required();
  bench->add_option("--out-dir", bench_out, "Output directory")->capture_default_str();

  std::string verify_path;
  int cap = kDefaultVerifyCap;
  auto* verify = app.add_subcommand("verify", "Exhaustively check oracle properties");
  verify->add_option("--instance", verify_path, "Instance file")->required();
  verify->add_option("--cap", cap, "Largest n to enumerate")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return Generate(type, n, m, k, gen_seed, cover_prob, gen_out);
    if (*solve) return Solve(instance_path, algorithm, run_config, solve_out);
    if (*bench) return Bench(bench_config, bench_out);
    if (*verify) return Verify(verify_path, cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
