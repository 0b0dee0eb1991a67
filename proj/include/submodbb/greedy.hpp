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

#ifndef SUBMODBB_GREEDY_HPP_
#define SUBMODBB_GREEDY_HPP_

#include <vector>

#include "submodbb/oracle.hpp"
#include "submodbb/solution.hpp"

namespace submodbb {

struct GreedyTrace {
  std::vector<Element> order;
  // Marginal gain of order[t] with respect to base + order[0..t).
  std::vector<double> gains;
  Solution final_set;
  double final_value = 0.0;
};

/// Adds the candidate of largest marginal gain (smallest id on ties) until
/// the solution has k members or the candidates run out. Zero-gain
/// candidates are still added while budget remains.
GreedyTrace Greedy(const SubmodularOracle& oracle, int k, const Solution& base,
                   const Solution& candidates);

/// Same trace as Greedy, but skips re-evaluating candidates whose stale gain
/// (an upper bound by submodularity) cannot beat the current best.
GreedyTrace LazyGreedy(const SubmodularOracle& oracle, int k,
                       const Solution& base, const Solution& candidates);

/// Greedy from fixed_in over N \ (fixed_out + fixed_in), then best-improvement
/// swaps S - {i} + {j} with i in S \ fixed_in and j outside S + fixed_out,
/// until no swap improves f by more than kEps.
Solution LocalSearch(const SubmodularOracle& oracle, int k,
                     const Solution& fixed_out, const Solution& fixed_in);

}  // namespace submodbb

#endif  // SUBMODBB_GREEDY_HPP_
