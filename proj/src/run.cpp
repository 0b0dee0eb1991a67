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

#include "submodbb/run.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "submodbb/astar.hpp"
#include "submodbb/bb.hpp"
#include "submodbb/cg.hpp"
#include "submodbb/greedy.hpp"
#include "submodbb/random.hpp"

namespace submodbb {

using nlohmann::json;

namespace {

struct AlgorithmInfo {
  Algorithm id;
  std::string_view name;
  bool exact;
};

constexpr AlgorithmInfo kAlgorithms[] = {
    {Algorithm::kGreedy, "greedy", false},
    {Algorithm::kLazyGreedy, "lazy-greedy", false},
    {Algorithm::kAStarMod, "astar-mod", true},
    {Algorithm::kAStarDom, "astar-dom", true},
    {Algorithm::kCg, "cg", true},
    {Algorithm::kIcg, "icg", true},
    {Algorithm::kBbIcg, "bb-icg", true},
    {Algorithm::kBbIcgPlus, "bb-icg-plus", true},
    {Algorithm::kBrute, "brute", true},
};

const AlgorithmInfo& Info(Algorithm a) {
  for (const auto& info : kAlgorithms) {
    if (info.id == a) return info;
  }
  throw std::logic_error("unknown algorithm id");
}

double Binomial(int n, int r) {
  double c = 1.0;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

}  // namespace

const std::vector<Algorithm>& AllAlgorithms() {
  static const std::vector<Algorithm> all = [] {
    std::vector<Algorithm> v;
    for (const auto& info : kAlgorithms) v.push_back(info.id);
    return v;
  }();
  return all;
}

std::string_view AlgorithmName(Algorithm a) { return Info(a).name; }

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (const auto& info : kAlgorithms) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

bool IsExact(Algorithm a) { return Info(a).exact; }

OptResult BruteForceMaximize(const SubmodularOracle& oracle, int k,
                             const Limits& limits) {
  const int n = oracle.n();
  if (k < 0) throw std::invalid_argument("brute force: k must be >= 0");
  k = std::min(k, n);
  double subsets = 0.0;
  for (int r = 0; r <= k; ++r) subsets += Binomial(n, r);
  if (subsets > kBruteForceSubsetCap) {
    throw std::invalid_argument("brute force: " + std::to_string(subsets) +
                                " subsets exceed the enumeration cap");
  }
  const Deadline deadline(limits.time_limit_s);
  OptResult result;
  result.value = oracle.Value(Solution{});
  std::uint64_t visited = 1;
  for (int r = 1; r <= k; ++r) {
    std::vector<int> idx(r);
    for (int t = 0; t < r; ++t) idx[t] = t;
    while (true) {
      Solution s;
      for (int e : idx) s.Insert(e);
      const double v = oracle.Value(s);
      if (v > result.value) {
        result.value = v;
        result.best = s;
      }
      if (++visited % 4096 == 0 && deadline.Expired()) {
        result.limit_hit = true;
        result.stats.nodes_processed = visited;
        result.stats.wall_time_s = deadline.Elapsed();
        return result;
      }
      int t = r - 1;
      while (t >= 0 && idx[t] == n - r + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int u = t + 1; u < r; ++u) idx[u] = idx[u - 1] + 1;
    }
  }
  result.proven_optimal = true;
  result.stats.nodes_processed = visited;
  result.stats.wall_time_s = deadline.Elapsed();
  return result;
}

RunResult RunAlgorithm(const Instance& instance, const RunConfig& config,
                       const std::string& instance_path) {
  const std::unique_ptr<SubmodularOracle> base = MakeOracle(instance);
  std::unique_ptr<MemoOracle> memo;
  if (config.memo) memo = WithMemo(*base, config.memo_cap);
  CountingOracle counter(memo ? static_cast<const SubmodularOracle&>(*memo) : *base);

  const int k = InstanceK(instance);
  const int lambda = config.lambda < 0 ? DefaultLambda(k) : config.lambda;
  const Limits limits{config.time_limit_s, std::nullopt};
  const Deadline clock(std::numeric_limits<double>::infinity());
  const Solution ground = Solution::Full(counter.n());

  OptResult opt;
  switch (config.algorithm) {
    case Algorithm::kGreedy:
    case Algorithm::kLazyGreedy: {
      const GreedyTrace trace = config.algorithm == Algorithm::kGreedy
                                    ? Greedy(counter, k, Solution{}, ground)
                                    : LazyGreedy(counter, k, Solution{}, ground);
      opt.best = trace.final_set;
      opt.value = trace.final_value;
      break;
    }
    case Algorithm::kAStarMod:
    case Algorithm::kAStarDom: {
      const Solution initial = LazyGreedy(counter, k, Solution{}, ground).final_set;
      opt = AStarSolve(counter, k,
                       config.algorithm == Algorithm::kAStarMod ? Heuristic::kMod
                                                                : Heuristic::kDom,
                       initial, limits);
      break;
    }
    case Algorithm::kCg: {
      const Solution initial = LazyGreedy(counter, k, Solution{}, ground).final_set;
      opt = CgSolve(counter, k, initial, limits).result;
      break;
    }
    case Algorithm::kIcg: {
      const Solution initial = LazyGreedy(counter, k, Solution{}, ground).final_set;
      opt = IcgSolve(counter, k, lambda, config.seed, initial, limits).result;
      break;
    }
    case Algorithm::kBbIcg:
    case Algorithm::kBbIcgPlus: {
      BbOptions options;
      options.variant = config.algorithm == Algorithm::kBbIcg ? BbVariant::kIcg
                                                              : BbVariant::kIcgPlus;
      options.lambda = lambda;
      options.seed = config.seed;
      opt = BbSolve(counter, k, options, limits);
      break;
    }
    case Algorithm::kBrute:
      opt = BruteForceMaximize(counter, k, limits);
      break;
  }

  RunResult out;
  out.algorithm = std::string(AlgorithmName(config.algorithm));
  out.instance_path = instance_path;
  out.instance_seed = InstanceSeed(instance);
  out.seed = config.seed;
  out.lambda = lambda;
  out.k = k;
  out.solution = opt.best;
  out.value = base->Value(opt.best);
  out.proven_optimal = opt.proven_optimal;
  out.time_limit_hit = opt.limit_hit;
  out.stats = std::move(opt.stats);
  out.stats.wall_time_s = clock.Elapsed();
  out.stats.oracle_distinct = counter.counter().distinct_evals;
  out.stats.oracle_total = counter.counter().total_requests;
  return out;
}

namespace {

json FiniteOrNull(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json ToJson(const RunResult& r) {
  json trace = json::array();
  for (const TracePoint& p : r.stats.bound_trace) {
    trace.push_back({p.index, FiniteOrNull(p.upper), p.incumbent});
  }
  json instance = {{"path", r.instance_path}};
  instance["seed"] = r.instance_seed ? json(*r.instance_seed) : json(nullptr);
  return {
      {"algorithm", r.algorithm},
      {"instance", instance},
      {"seed", r.seed},
      {"lambda", r.lambda},
      {"k", r.k},
      {"value", r.value},
      {"solution", r.solution.ToOneBased()},
      {"proven_optimal", r.proven_optimal},
      {"time_limit_hit", r.time_limit_hit},
      {"stats",
       {{"wall_time_s", r.stats.wall_time_s},
        {"nodes_processed", r.stats.nodes_processed},
        {"bip_solves", r.stats.bip_solves},
        {"oracle_distinct", r.stats.oracle_distinct},
        {"oracle_total", r.stats.oracle_total},
        {"bound_trace", trace}}},
  };
}

std::string SerializeRunResult(const RunResult& result) {
  return ToJson(result).dump(1) + "\n";
}

int ExitCodeFor(const RunResult& result, Algorithm algorithm) {
  return IsExact(algorithm) && result.time_limit_hit ? kExitTimeLimit : 0;
}

// ---------------------------------------------------------------------------

std::uint64_t DeriveSeed(std::uint64_t base_seed, std::size_t class_index,
                         std::size_t instance_index) {
  return Mix64(Mix64(base_seed) ^ Mix64(class_index + 0x632be59bd9b4e019ULL) ^
               Mix64(instance_index));
}

namespace {

[[noreturn]] void ConfigError(const std::string& field, const std::string& what) {
  throw InstanceError("field '" + field + "': " + what);
}

std::vector<int> IntList(const json& v, const std::string& field) {
  std::vector<int> out;
  if (v.is_number_integer()) {
    out.push_back(v.get<int>());
  } else if (v.is_array()) {
    for (const json& x : v) {
      if (!x.is_number_integer()) ConfigError(field, "expected integers");
      out.push_back(x.get<int>());
    }
  } else if (v.is_object()) {
    if (!v.contains("from") || !v.contains("to")) {
      ConfigError(field, "range needs 'from' and 'to'");
    }
    const int from = v.at("from").get<int>();
    const int to = v.at("to").get<int>();
    const int step = v.value("step", 1);
    if (step < 1) ConfigError(field, "step must be >= 1");
    for (int x = from; x <= to; x += step) out.push_back(x);
  } else {
    ConfigError(field, "expected an integer, a list or a range");
  }
  if (out.empty()) ConfigError(field, "empty");
  return out;
}

template <typename T>
T Get(const json& doc, const char* name, const std::string& prefix, T fallback) {
  if (!doc.contains(name)) return fallback;
  try {
    return doc.at(name).get<T>();
  } catch (const json::exception& e) {
    ConfigError(prefix + name, e.what());
  }
}

}  // namespace

BenchConfig ParseBenchConfig(const json& doc) {
  if (!doc.is_object()) throw InstanceError("bench config must be an object");
  BenchConfig config;
  config.lambda = Get<int>(doc, "lambda", "", -1);
  config.time_limit_s = Get<double>(doc, "time_limit_s", "", 3600.0);
  config.threads = Get<int>(doc, "threads", "", 0);
  config.memo = Get<bool>(doc, "memo", "", false);
  if (!(config.time_limit_s > 0)) ConfigError("time_limit_s", "must be positive");
  if (config.threads < 0) ConfigError("threads", "must be >= 0");

  for (const auto& name : Get<std::vector<std::string>>(doc, "algorithms", "", {})) {
    const auto a = ParseAlgorithm(name);
    if (!a) ConfigError("algorithms", "unknown algorithm '" + name + "'");
    config.algorithms.push_back(*a);
  }

  if (!doc.contains("classes") || !doc.at("classes").is_array()) {
    ConfigError("classes", "expected an array");
  }
  std::size_t class_index = 0;
  for (std::size_t c = 0; c < doc.at("classes").size(); ++c) {
    const json& cls = doc.at("classes")[c];
    const std::string prefix = "classes[" + std::to_string(c) + "].";
    if (!cls.is_object()) ConfigError(prefix.substr(0, prefix.size() - 1), "expected an object");
    const auto type = Get<std::string>(cls, "type", prefix, "");
    if (type != "loc" && type != "cov") ConfigError(prefix + "type", "expected 'loc' or 'cov'");
    if (!cls.contains("n")) ConfigError(prefix + "n", "missing");
    if (!cls.contains("k")) ConfigError(prefix + "k", "missing");
    const std::vector<int> ns = IntList(cls.at("n"), prefix + "n");
    const std::vector<int> ks = IntList(cls.at("k"), prefix + "k");
    const auto seeds = Get<std::vector<std::uint64_t>>(cls, "seeds", prefix, {});
    const int instances = Get<int>(cls, "instances", prefix, 5);
    const auto base_seed = Get<std::uint64_t>(cls, "base_seed", prefix, 1);
    if (seeds.empty() && instances < 1) ConfigError(prefix + "instances", "must be >= 1");
    for (int n : ns) {
      for (int k : ks) {
        BenchClass bc;
        bc.type = type;
        bc.n = n;
        bc.m = Get<int>(cls, "m", prefix, n + 1);
        bc.k = k;
        bc.cover_prob = Get<double>(cls, "cover_prob", prefix, kDefaultCoverProb);
        if (n < 1) ConfigError(prefix + "n", "must be >= 1");
        if (k < 1 || k > n) ConfigError(prefix + "k", "must satisfy 1 <= k <= n");
        if (bc.m < 1) ConfigError(prefix + "m", "must be >= 1");
        if (!(bc.cover_prob >= 0 && bc.cover_prob <= 1)) {
          ConfigError(prefix + "cover_prob", "must lie in [0, 1]");
        }
        if (!seeds.empty()) {
          bc.seeds = seeds;
        } else {
          for (int t = 0; t < instances; ++t) {
            bc.seeds.push_back(DeriveSeed(base_seed, class_index, t));
          }
        }
        config.classes.push_back(std::move(bc));
        ++class_index;
      }
    }
  }
  return config;
}

BenchConfig LoadBenchConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open bench config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InstanceError(std::string("malformed bench config: ") + e.what());
  }
  return ParseBenchConfig(doc);
}

namespace {

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

std::string AggregateCsv(const std::vector<json>& runs) {
  using Key = std::tuple<std::string, int, int, std::string>;
  struct Acc {
    std::size_t runs = 0;
    std::size_t solved = 0;
    std::size_t ok = 0;
    double time = 0, nodes = 0, bips = 0, distinct = 0;
  };
  std::vector<Key> order;
  std::map<Key, Acc> acc;
  for (const json& r : runs) {
    const Key key{r.at("type").get<std::string>(), r.at("n").get<int>(),
                  r.at("k").get<int>(), r.at("algorithm").get<std::string>()};
    auto [it, inserted] = acc.try_emplace(key);
    if (inserted) order.push_back(key);
    Acc& a = it->second;
    ++a.runs;
    if (r.contains("error")) continue;
    ++a.ok;
    const auto alg = ParseAlgorithm(std::get<3>(key));
    const bool exact = alg && IsExact(*alg);
    if (!r.at("time_limit_hit").get<bool>() &&
        (!exact || r.at("proven_optimal").get<bool>())) {
      ++a.solved;
    }
    const json& s = r.at("stats");
    a.time += s.at("wall_time_s").get<double>();
    a.nodes += s.at("nodes_processed").get<double>();
    a.bips += s.at("bip_solves").get<double>();
    a.distinct += s.at("oracle_distinct").get<double>();
  }
  std::ostringstream out;
  out << kBenchCsvHeader << "\n";
  for (const Key& key : order) {
    const Acc& a = acc.at(key);
    out << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key)
        << ',' << std::get<3>(key) << ',' << a.runs << ',' << a.solved;
    if (a.ok == 0) {
      out << ",,,,\n";
      continue;
    }
    const double d = static_cast<double>(a.ok);
    out << ',' << FormatDouble(a.time / d) << ',' << FormatDouble(a.nodes / d)
        << ',' << FormatDouble(a.bips / d) << ',' << FormatDouble(a.distinct / d)
        << "\n";
  }
  return out.str();
}

BenchSummary RunBench(const BenchConfig& config,
                      const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir / "instances");
  fs::create_directories(out_dir / "runs");

  struct Job {
    const BenchClass* cls;
    std::uint64_t seed;
    Algorithm algorithm;
    fs::path instance_path;
  };
  std::vector<Job> jobs;
  std::map<fs::path, Instance> instances;
  for (const BenchClass& cls : config.classes) {
    for (std::uint64_t seed : cls.seeds) {
      const std::string stem = cls.type + "_n" + std::to_string(cls.n) + "_m" +
                               std::to_string(cls.m) + "_k" + std::to_string(cls.k) +
                               "_s" + std::to_string(seed);
      const fs::path path = out_dir / "instances" / (stem + ".json");
      if (!instances.contains(path)) {
        Instance inst = cls.type == "loc"
                            ? Instance(GenerateLoc(cls.n, cls.m, cls.k, seed))
                            : Instance(GenerateCov(cls.n, cls.m, cls.k, cls.cover_prob, seed));
        SaveInstance(inst, path);
        instances.emplace(path, std::move(inst));
      }
      for (Algorithm a : config.algorithms) jobs.push_back({&cls, seed, a, path});
    }
  }

  std::vector<json> docs(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> failures{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const Job& job = jobs[j];
      json doc;
      try {
        RunConfig rc;
        rc.algorithm = job.algorithm;
        rc.lambda = config.lambda;
        rc.seed = job.seed;
        rc.time_limit_s = config.time_limit_s;
        rc.memo = config.memo;
        doc = ToJson(RunAlgorithm(instances.at(job.instance_path), rc,
                                  job.instance_path.string()));
      } catch (const std::exception& e) {
        ++failures;
        doc = {{"algorithm", std::string(AlgorithmName(job.algorithm))},
               {"instance", {{"path", job.instance_path.string()}, {"seed", job.seed}}},
               {"error", e.what()}};
      }
      doc["type"] = job.cls->type;
      doc["n"] = job.cls->n;
      doc["k"] = job.cls->k;
      const fs::path run_path =
          out_dir / "runs" /
          (job.instance_path.stem().string() + "_" + doc["algorithm"].get<std::string>() +
           ".json");
      std::ofstream(run_path) << doc.dump(1) << "\n";
      docs[j] = std::move(doc);
    }
  };
  std::size_t threads = config.threads > 0 ? static_cast<std::size_t>(config.threads)
                                           : std::max(1u, std::thread::hardware_concurrency());
  threads = std::max<std::size_t>(1, std::min(threads, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  BenchSummary summary;
  summary.runs = jobs.size();
  summary.failures = failures;
  summary.csv_path = out_dir / "results.csv";
  std::ofstream(summary.csv_path) << AggregateCsv(docs);
  return summary;
}

}  // namespace submodbb
