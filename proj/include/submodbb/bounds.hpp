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

// Admissible upper bounds on the best completion gain
//   max { f(S + T) - f(S) : T subset of C, |T| <= p }.
// The candidate set C is explicit so the same code serves the prefix tree
// (C = elements above max(S)) and fixing-pair nodes (C = N \ (S0 + S1)).

#ifndef SUBMODBB_BOUNDS_HPP_
#define SUBMODBB_BOUNDS_HPP_

#include <string_view>

#include "submodbb/oracle.hpp"
#include "submodbb/solution.hpp"

namespace submodbb {

struct BoundContext {
  Solution base;        // S
  Solution candidates;  // C, disjoint from S
  int budget = 0;       // p = k - |S|
};

enum class Heuristic { kMod, kDom };

std::string_view HeuristicName(Heuristic h);

/// Modular bound: sum of the p largest singleton gains over C, or the exact
/// joint gain f(S + C) - f(S) when |C| <= p.
double HMod(const SubmodularOracle& oracle, const BoundContext& ctx);

/// Dominant-element bound built from the greedy trace T over C:
///   beta_i = 1 - gain(T_i | S + T_[i-1]) / h_mod(S + T_[i-1], C \ T_[i-1], p-i+1)
///   h_dom  = f_S(T) / (1 - prod beta_i)
/// If any of those h_mod values is 0 the product is taken as 0 (so h_dom is
/// the greedy gain itself). Each beta_i is clamped to [0, 1]. The nested
/// h_mod values reuse the gains the greedy step already computed.
double HDom(const SubmodularOracle& oracle, const BoundContext& ctx);

double HeuristicValue(const SubmodularOracle& oracle, const BoundContext& ctx,
                      Heuristic h);

/// f(S) + h(ctx).
double UpperValue(const SubmodularOracle& oracle, const BoundContext& ctx,
                  Heuristic h);

}  // namespace submodbb

#endif  // SUBMODBB_BOUNDS_HPP_
