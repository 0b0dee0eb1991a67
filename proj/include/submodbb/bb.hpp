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

#ifndef SUBMODBB_BB_HPP_
#define SUBMODBB_BB_HPP_

#include <cstdint>
#include <functional>
#include <limits>

#include "submodbb/oracle.hpp"
#include "submodbb/result.hpp"
#include "submodbb/solution.hpp"

namespace submodbb {

enum class BbVariant { kIcg, kIcgPlus };

struct BbOptions {
  BbVariant variant = BbVariant::kIcg;
  int lambda = -1;  // < 0 selects 10 * k
  std::uint64_t seed = 0;
  // kIcgPlus: run local search on every ls_every-th processed node.
  int ls_every = 1;
};

/// A fixing-pair search node: fixed_out elements are excluded, fixed_in
/// elements forced in. inherited_bound is the parent's reduced-program
/// optimum (+inf at the root).
struct BbNode {
  Solution fixed_out;
  Solution fixed_in;
  double inherited_bound = std::numeric_limits<double>::infinity();
};

enum class NodeOutcome {
  kPrunedInherited,  // pruned at pop (inherited bound, or the h_dom bound)
  kLeaf,             // |S1| = k or nothing left to decide
  kPrunedSolved,     // pruned after solving the node's reduced program
  kBranched,
};

struct NodeEvent {
  BbNode node;
  NodeOutcome outcome;
  double node_bound;  // reduced-program optimum, or NaN if not solved
  double incumbent;   // f(S*) when the outcome was decided
};

/// argmax over free i of f(S1 + {i}), smallest id on ties. Throws
/// std::invalid_argument if no free element exists.
Element BranchElement(const SubmodularOracle& oracle, const Solution& fixed_out,
                      const Solution& fixed_in);

/// Depth-first branch-and-bound over fixing pairs, bounding each node with the
/// reduced program over Q+ and growing Q+ with ICG sampling at every node.
/// Starts from the lazy-greedy solution and k warm-up ICG iterations.
/// The optional observer sees every processed node (used by tests to replay
/// pruning decisions).
OptResult BbSolve(const SubmodularOracle& oracle, int k, const BbOptions& options,
                  const Limits& limits = {},
                  const std::function<void(const NodeEvent&)>& observer = {});

}  // namespace submodbb

#endif  // SUBMODBB_BB_HPP_
