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

#include "submodbb/bb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "submodbb/bounds.hpp"
#include "submodbb/cg.hpp"
#include "submodbb/greedy.hpp"

namespace submodbb {

Element BranchElement(const SubmodularOracle& oracle, const Solution& fixed_out,
                      const Solution& fixed_in) {
  const std::vector<Element> free =
      (Solution::Full(oracle.n()) - fixed_out - fixed_in).Elements();
  if (free.empty()) throw std::invalid_argument("branch: no free element");
  std::vector<double> values(free.size());
  oracle.ValuesWith(fixed_in, free, values);
  std::size_t best = 0;
  for (std::size_t t = 1; t < free.size(); ++t) {
    if (values[t] > values[best]) best = t;
  }
  return free[best];
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const SubmodularOracle& oracle, int k, const BbOptions& options,
                 const Limits& limits,
                 const std::function<void(const NodeEvent&)>& observer)
      : oracle_(oracle),
        k_(k),
        options_(options),
        limits_(limits),
        observer_(observer),
        deadline_(limits.time_limit_s),
        ground_(Solution::Full(oracle.n())) {}

  OptResult Run() {
    const GreedyTrace greedy = LazyGreedy(oracle_, k_, Solution{}, ground_);
    result_.best = greedy.final_set;
    result_.value = greedy.final_value;
    const int lambda = options_.lambda < 0 ? DefaultLambda(k_) : options_.lambda;
    IcgEngine engine(oracle_, k_, lambda, options_.seed, greedy.final_set);

    if (WarmStart(engine)) {
      result_.proven_optimal = true;
      return Finish(engine);
    }

    std::vector<BbNode> stack;
    stack.push_back(BbNode{});
    while (!stack.empty()) {
      if (deadline_.Expired() || (limits_.node_limit &&
                                  result_.stats.nodes_processed >= *limits_.node_limit)) {
        result_.limit_hit = true;
        return Finish(engine);
      }
      const BbNode node = stack.back();
      stack.pop_back();
      ++result_.stats.nodes_processed;
      if (!Process(engine, node, stack)) {
        result_.limit_hit = true;
        return Finish(engine);
      }
    }
    result_.proven_optimal = true;
    return Finish(engine);
  }

 private:
  void Offer(const Solution& s, double v, double bound) {
    if (v > result_.value + kEps) {
      result_.best = s;
      result_.value = v;
      result_.stats.bound_trace.push_back(
          {result_.stats.nodes_processed, bound, result_.value});
    }
  }

  void Emit(const BbNode& node, NodeOutcome outcome, double bound) {
    if (observer_) observer_({node, outcome, bound, result_.value});
  }

  // The first k ICG iterations. Returns true if they already prove optimality.
  bool WarmStart(IcgEngine& engine) {
    for (int t = 0; t < k_; ++t) {
      if (deadline_.Expired()) return false;
      const BipSolution sol = engine.Solve({}, {}, deadline_.end());
      if (!sol.complete) return false;
      Offer(sol.y, oracle_.Value(sol.y), sol.z);
      if (sol.z <= result_.value + kEps) return true;
      for (const Solution& s : engine.Expand(sol)) {
        Offer(s, oracle_.Value(s), sol.z);
      }
    }
    return false;
  }

  // Returns false if a deadline interrupted the node's reduced program.
  bool Process(IcgEngine& engine, const BbNode& node, std::vector<BbNode>& stack) {
    const bool plus = options_.variant == BbVariant::kIcgPlus;
    const Solution free = ground_ - node.fixed_out - node.fixed_in;
    double dom_bound = std::numeric_limits<double>::infinity();
    if (plus) {
      if (options_.ls_every <= 1 ||
          result_.stats.nodes_processed % static_cast<std::uint64_t>(options_.ls_every) == 1) {
        const Solution s = LocalSearch(oracle_, k_, node.fixed_out, node.fixed_in);
        Offer(s, oracle_.Value(s), node.inherited_bound);
      }
      const BoundContext ctx{node.fixed_in, free, k_ - node.fixed_in.Size()};
      dom_bound = UpperValue(oracle_, ctx, Heuristic::kDom);
    }
    if (std::min(dom_bound, node.inherited_bound) <= result_.value + kEps) {
      Emit(node, NodeOutcome::kPrunedInherited, std::nan(""));
      return true;
    }
    if (node.fixed_in.Size() >= k_ || free.Empty()) {
      Offer(node.fixed_in, oracle_.Value(node.fixed_in), node.inherited_bound);
      Emit(node, NodeOutcome::kLeaf, std::nan(""));
      return true;
    }

    const BipSolution sol =
        engine.Solve(node.fixed_out, node.fixed_in, deadline_.end());
    if (!sol.complete) return false;
    const std::vector<Solution> generated = engine.Expand(sol);
    Offer(sol.y, oracle_.Value(sol.y), sol.z);
    for (const Solution& s : generated) Offer(s, oracle_.Value(s), sol.z);

    if (std::min(dom_bound, sol.z) <= result_.value + kEps) {
      Emit(node, NodeOutcome::kPrunedSolved, sol.z);
      return true;
    }
    const Element branch = BranchElement(oracle_, node.fixed_out, node.fixed_in);
    stack.push_back({node.fixed_out.With(branch), node.fixed_in, sol.z});
    stack.push_back({node.fixed_out, node.fixed_in.With(branch), sol.z});
    Emit(node, NodeOutcome::kBranched, sol.z);
    return true;
  }

  OptResult Finish(const IcgEngine& engine) {
    result_.stats.bip_solves = engine.bip_solves();
    result_.stats.wall_time_s = deadline_.Elapsed();
    return result_;
  }

  const SubmodularOracle& oracle_;
  int k_;
  BbOptions options_;
  Limits limits_;
  const std::function<void(const NodeEvent&)>& observer_;
  Deadline deadline_;
  Solution ground_;
  OptResult result_;
};

}  // namespace

OptResult BbSolve(const SubmodularOracle& oracle, int k, const BbOptions& options,
                  const Limits& limits,
                  const std::function<void(const NodeEvent&)>& observer) {
  if (k < 1) throw std::invalid_argument("branch-and-bound: k must be >= 1");
  if (k > oracle.n()) throw std::invalid_argument("branch-and-bound: k exceeds n");
  return BranchAndBound(oracle, k, options, limits, observer).Run();
}

}  // namespace submodbb
