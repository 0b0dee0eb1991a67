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

// Shared fixtures and brute-force reference oracles for the test suites.
// Everything here enumerates subsets directly and shares no code with the
// solvers under test beyond the oracle interface.

#ifndef SUBMODBB_TESTS_TEST_UTIL_HPP_
#define SUBMODBB_TESTS_TEST_UTIL_HPP_

#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "submodbb/instances.hpp"
#include "submodbb/oracle.hpp"
#include "submodbb/solution.hpp"

namespace submodbb::testing {

// Builds a Solution from 1-based ids so tests read like the worked examples.
inline Solution One(std::initializer_list<int> ids) {
  return Solution::FromOneBased(std::vector<int>(ids));
}

// 3 locations, 2 clients, k = 2.
inline FacilityLocationInstance TinyLoc() {
  FacilityLocationInstance inst;
  inst.n = 3;
  inst.m = 2;
  inst.k = 2;
  inst.g = {{0.5, 0.2, 0.4}, {0.1, 0.6, 0.3}};
  return inst;
}

inline Solution FromMask(std::uint64_t mask) {
  Solution s;
  for (int e = 0; e < 64; ++e) {
    if ((mask >> e) & 1u) s.Insert(e);
  }
  return s;
}

// max f(base + T) over T subset of candidates with |T| <= budget.
inline double BestCompletion(const SubmodularOracle& oracle, const Solution& base,
                             const Solution& candidates, int budget) {
  const std::vector<Element> c = candidates.Elements();
  double best = oracle.Value(base);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c.size()); ++mask) {
    if (__builtin_popcountll(mask) > budget) continue;
    Solution s = base;
    for (std::size_t t = 0; t < c.size(); ++t) {
      if ((mask >> t) & 1u) s.Insert(c[t]);
    }
    best = std::max(best, oracle.Value(s));
  }
  return best;
}

// max f(S) over |S| <= k, by plain subset-mask enumeration.
inline double BruteOptimum(const SubmodularOracle& oracle, int k) {
  return BestCompletion(oracle, Solution{}, Solution::Full(oracle.n()), k);
}

// Small random LOC or COV instance; COV uses a denser cover probability than
// the benchmark default so tiny instances are not mostly empty.
inline Instance RandomInstance(bool loc, int n, int k, std::uint64_t seed) {
  if (loc) return GenerateLoc(n, n + 1, k, seed);
  return GenerateCov(n, n + 1, k, 0.25, seed);
}

}  // namespace submodbb::testing

#endif  // SUBMODBB_TESTS_TEST_UTIL_HPP_
