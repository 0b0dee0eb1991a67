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

#ifndef SUBMODBB_ASTAR_HPP_
#define SUBMODBB_ASTAR_HPP_

#include "submodbb/bounds.hpp"
#include "submodbb/oracle.hpp"
#include "submodbb/result.hpp"

namespace submodbb {

/// Best-first search over the prefix tree: the children of S are S + {j} for
/// j > max(S). A node is valued by f(S) + h(S) with the heuristic's candidate
/// set {j > max(S)}. Each extracted node that survives pruning is completed
/// greedily (over the same candidate set) to improve the incumbent.
///
/// stats.nodes_processed counts extracted nodes, pruned ones included.
OptResult AStarSolve(const SubmodularOracle& oracle, int k, Heuristic heuristic,
                     const Solution& initial, const Limits& limits = {});

}  // namespace submodbb

#endif  // SUBMODBB_ASTAR_HPP_
