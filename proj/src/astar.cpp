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

#include "submodbb/astar.hpp"

#include <queue>
#include <stdexcept>
#include <vector>

#include "submodbb/greedy.hpp"

namespace submodbb {

namespace {

struct Node {
  Solution set;
  double value;  // f(set)
  double fbar;   // f(set) + h(set), cached at insertion
};

// Max-heap order: larger fbar, then larger f, then lexicographically smaller.
struct LowerPriority {
  bool operator()(const Node& a, const Node& b) const {
    if (a.fbar != b.fbar) return a.fbar < b.fbar;
    if (a.value != b.value) return a.value < b.value;
    return a.set.LexCompare(b.set) > 0;
  }
};

// {j : max(s) < j < n}
Solution Successors(const Solution& s, int n) {
  Solution c;
  for (Element j = s.Max() + 1; j < n; ++j) c.Insert(j);
  return c;
}

}  // namespace

OptResult AStarSolve(const SubmodularOracle& oracle, int k, Heuristic heuristic,
                     const Solution& initial, const Limits& limits) {
  const int n = oracle.n();
  if (k < 1) throw std::invalid_argument("A*: k must be >= 1");
  if (!initial.FitsIn(n) || initial.Size() > k) {
    throw std::invalid_argument("A*: initial solution is infeasible");
  }
  const Deadline deadline(limits.time_limit_s);

  OptResult result;
  result.best = initial;
  result.value = oracle.Value(initial);
  auto& stats = result.stats;

  std::priority_queue<Node, std::vector<Node>, LowerPriority> open;
  {
    const BoundContext root{Solution{}, Successors(Solution{}, n), k};
    open.push({Solution{}, 0.0, UpperValue(oracle, root, heuristic)});
  }

  std::vector<double> child_values(n);
  while (!open.empty()) {
    if (deadline.Expired() ||
        (limits.node_limit && stats.nodes_processed >= *limits.node_limit)) {
      result.limit_hit = true;
      break;
    }
    const Node node = open.top();
    open.pop();
    ++stats.nodes_processed;
    if (node.fbar <= result.value + kEps) continue;

    const Solution cands = Successors(node.set, n);
    const GreedyTrace completion = LazyGreedy(oracle, k, node.set, cands);
    if (completion.final_value > result.value + kEps) {
      result.best = completion.final_set;
      result.value = completion.final_value;
      stats.bound_trace.push_back({stats.nodes_processed, node.fbar, result.value});
    }

    if (node.set.Size() >= k) continue;
    const std::vector<Element> js = cands.Elements();
    oracle.ValuesWith(node.set, js,
                      std::span<double>(child_values.data(), js.size()));
    const int child_budget = k - node.set.Size() - 1;
    for (std::size_t t = 0; t < js.size(); ++t) {
      const Solution child = node.set.With(js[t]);
      const BoundContext ctx{child, Successors(child, n), child_budget};
      const double fbar =
          child_values[t] + HeuristicValue(oracle, ctx, heuristic);
      if (fbar > result.value + kEps) open.push({child, child_values[t], fbar});
    }
  }
  result.proven_optimal = open.empty() && !result.limit_hit;
  stats.wall_time_s = deadline.Elapsed();
  return result;
}

}  // namespace submodbb
