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

#include "submodbb/cg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace submodbb {

bool SolutionPool::AddToQ(const SubmodularOracle& oracle, const Solution& s) {
  if (q_index_.contains(s)) return false;
  AddToQplus(oracle, s);
  q_index_.emplace(s, q_.size());
  q_.push_back(s);
  s.ForEach([&](Element e) { ++counts_[e]; });
  return true;
}

bool SolutionPool::AddToQplus(const SubmodularOracle& oracle,
                              const Solution& s) {
  if (qplus_index_.contains(s)) return false;
  rows_.push_back(ConstraintRow::FromOracle(oracle, s));
  qplus_index_.emplace(s, qplus_.size());
  qplus_.push_back(s);
  return true;
}

bool SolutionPool::InQ(const Solution& s) const { return q_index_.contains(s); }

std::vector<double> SolutionPool::OccurrenceRates() const {
  const long total = std::accumulate(counts_.begin(), counts_.end(), 0L);
  if (total == 0) {
    throw std::logic_error("occurrence rates undefined: Q holds no elements");
  }
  std::vector<double> rates(n_);
  for (int i = 0; i < n_; ++i) {
    rates[i] = static_cast<double>(counts_[i]) / static_cast<double>(total);
  }
  return rates;
}

std::vector<Solution> SubIcg(const SolutionPool& pool,
                             std::span<const Solution> tight_sources,
                             const Solution& y, int k, int lambda, Rng& rng) {
  std::vector<Solution> out;
  if (lambda <= 0 || tight_sources.empty()) return out;
  const std::vector<double> rates = pool.OccurrenceRates();
  std::unordered_set<Solution, SolutionHash> seen;
  const int max_draws = std::max(10 * lambda, 100);

  struct Keyed {
    double r;
    Element id;
  };
  std::vector<Keyed> keyed;
  for (int draw = 0; draw < max_draws && static_cast<int>(out.size()) < lambda;
       ++draw) {
    const Solution& source = tight_sources[rng.Below(tight_sources.size())];
    const Solution merged = source | y;
    Solution pick;
    if (merged.Size() <= k) {
      pick = merged;
    } else {
      keyed.clear();
      merged.ForEach([&](Element e) { keyed.push_back({rates[e] * rng.Uniform01(), e}); });
      std::partial_sort(keyed.begin(), keyed.begin() + k, keyed.end(),
                        [](const Keyed& a, const Keyed& b) {
                          if (a.r != b.r) return a.r > b.r;
                          return a.id < b.id;
                        });
      for (int t = 0; t < k; ++t) pick.Insert(keyed[t].id);
    }
    if (seen.insert(pick).second) out.push_back(pick);
  }
  return out;
}

IcgEngine::IcgEngine(const SubmodularOracle& oracle, int k, int lambda,
                     std::uint64_t seed, const Solution& initial)
    : oracle_(oracle), k_(k), lambda_(lambda), rng_(seed), pool_(oracle.n()) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
  if (!initial.FitsIn(oracle.n()) || initial.Size() > k) {
    throw std::invalid_argument("initial solution is infeasible");
  }
  pool_.AddToQ(oracle_, initial);
}

BipSolution IcgEngine::Solve(const Solution& fixed_out, const Solution& fixed_in,
                             std::optional<Deadline::Clock::time_point> deadline) {
  ++bip_solves_;
  return SolveBip({pool_.rows(), oracle_.n(), k_, fixed_out, fixed_in}, deadline);
}

std::vector<Solution> IcgEngine::Expand(const BipSolution& sol) {
  // Tight rows refer to Q+ as it was when sol was computed; only stored
  // solutions from Q are eligible unless none of them is tight.
  std::vector<Solution> tight_q;
  std::vector<Solution> tight_other;
  for (std::size_t idx : sol.tight_rows) {
    const Solution& s = pool_.qplus()[idx];
    (pool_.InQ(s) ? tight_q : tight_other).push_back(s);
  }
  pool_.AddToQ(oracle_, sol.y);
  if (lambda_ == 0) return {};
  const auto& sources = tight_q.empty() ? tight_other : tight_q;
  std::vector<Solution> generated =
      SubIcg(pool_, sources, sol.y, k_, lambda_, rng_);
  for (const Solution& s : generated) pool_.AddToQplus(oracle_, s);
  return generated;
}

namespace {

struct Incumbent {
  Solution best;
  double value;

  bool Offer(const Solution& s, double v) {
    if (v > value + kEps) {
      best = s;
      value = v;
      return true;
    }
    return false;
  }
};

}  // namespace

CgResult IcgSolve(const SubmodularOracle& oracle, int k, int lambda,
                  std::uint64_t seed, const Solution& initial,
                  const Limits& limits) {
  const Deadline deadline(limits.time_limit_s);
  IcgEngine engine(oracle, k, lambda, seed, initial);
  Incumbent inc{initial, oracle.Value(initial)};

  CgResult out;
  auto& result = out.result;
  auto& trace = out.trace;
  for (std::uint64_t t = 1;; ++t) {
    if (deadline.Expired() ||
        (limits.node_limit && t > *limits.node_limit)) {
      result.limit_hit = true;
      break;
    }
    const BipSolution sol = engine.Solve({}, {}, deadline.end());
    if (!sol.complete) {
      result.limit_hit = true;
      break;
    }
    inc.Offer(sol.y, oracle.Value(sol.y));
    auto record = [&] {
      trace.iterations.push_back({sol.z, inc.value, engine.pool().q().size(),
                                  engine.pool().qplus().size(), sol.y});
      result.stats.bound_trace.push_back({t, sol.z, inc.value});
    };
    if (sol.z <= inc.value + kEps || engine.pool().InQ(sol.y)) {
      // y already stored means its own row is in the program, so z <= f(y);
      // the first test catches this except under rounding noise.
      record();
      result.proven_optimal = true;
      break;
    }
    const std::vector<Solution> generated = engine.Expand(sol);
    for (const Solution& s : generated) inc.Offer(s, oracle.Value(s));
    record();
  }
  trace.bip_solves = engine.bip_solves();
  result.best = inc.best;
  result.value = inc.value;
  result.stats.bip_solves = engine.bip_solves();
  result.stats.wall_time_s = deadline.Elapsed();
  return out;
}

// Plain constraint generation, kept separate from the ICG loop so the two
// can be cross-checked.
CgResult CgSolve(const SubmodularOracle& oracle, int k, const Solution& initial,
                 const Limits& limits) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (!initial.FitsIn(oracle.n()) || initial.Size() > k) {
    throw std::invalid_argument("initial solution is infeasible");
  }
  const Deadline deadline(limits.time_limit_s);
  SolutionPool pool(oracle.n());
  pool.AddToQ(oracle, initial);
  Incumbent inc{initial, oracle.Value(initial)};

  CgResult out;
  auto& result = out.result;
  auto& trace = out.trace;
  for (std::uint64_t t = 1;; ++t) {
    if (deadline.Expired() || (limits.node_limit && t > *limits.node_limit)) {
      result.limit_hit = true;
      break;
    }
    ++trace.bip_solves;
    const BipSolution sol =
        SolveBip({pool.rows(), oracle.n(), k, {}, {}}, deadline.end());
    if (!sol.complete) {
      result.limit_hit = true;
      break;
    }
    inc.Offer(sol.y, oracle.Value(sol.y));
    const bool done = sol.z <= inc.value + kEps || pool.InQ(sol.y);
    if (!done) pool.AddToQ(oracle, sol.y);
    trace.iterations.push_back(
        {sol.z, inc.value, pool.q().size(), pool.qplus().size(), sol.y});
    result.stats.bound_trace.push_back({t, sol.z, inc.value});
    if (done) {
      result.proven_optimal = true;
      break;
    }
  }
  result.best = inc.best;
  result.value = inc.value;
  result.stats.bip_solves = trace.bip_solves;
  result.stats.wall_time_s = deadline.Elapsed();
  return out;
}


}  // namespace submodbb
