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

#include "submodbb/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace submodbb {

namespace {

void CheckContext(const SubmodularOracle& oracle, const BoundContext& ctx) {
  if (ctx.budget < 0) throw std::invalid_argument("bound: negative budget");
  if (ctx.base.Intersects(ctx.candidates)) {
    throw std::invalid_argument("bound: candidates overlap the base solution");
  }
  if (!ctx.base.FitsIn(oracle.n()) || !ctx.candidates.FitsIn(oracle.n())) {
    throw std::out_of_range("bound: element outside ground set");
  }
}

// Sum of the `count` largest gains, taken in non-increasing order (ties by
// position, i.e. by smaller element id).
double TopSum(const std::vector<double>& gains, int count) {
  std::vector<std::size_t> idx(gains.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const auto take = std::min<std::size_t>(static_cast<std::size_t>(count), idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(take),
                    idx.end(), [&](std::size_t a, std::size_t b) {
                      if (gains[a] != gains[b]) return gains[a] > gains[b];
                      return a < b;
                    });
  double sum = 0.0;
  for (std::size_t t = 0; t < take; ++t) sum += gains[idx[t]];
  return sum;
}

}  // namespace

std::string_view HeuristicName(Heuristic h) {
  return h == Heuristic::kMod ? "mod" : "dom";
}

double HMod(const SubmodularOracle& oracle, const BoundContext& ctx) {
  CheckContext(oracle, ctx);
  if (ctx.budget == 0 || ctx.candidates.Empty()) return 0.0;
  const double base_value = oracle.Value(ctx.base);
  if (ctx.candidates.Size() <= ctx.budget) {
    return oracle.Value(ctx.base | ctx.candidates) - base_value;
  }
  const std::vector<Element> cands = ctx.candidates.Elements();
  std::vector<double> gains(cands.size());
  oracle.ValuesWith(ctx.base, cands, gains);
  for (double& g : gains) g -= base_value;
  return TopSum(gains, ctx.budget);
}

double HDom(const SubmodularOracle& oracle, const BoundContext& ctx) {
  CheckContext(oracle, ctx);
  if (ctx.budget == 0 || ctx.candidates.Empty()) return 0.0;
  const double base_value = oracle.Value(ctx.base);

  std::vector<Element> remaining = ctx.candidates.Elements();
  const int steps = std::min<int>(ctx.budget, static_cast<int>(remaining.size()));
  Solution prefix = ctx.base;
  double prefix_value = base_value;
  std::vector<double> values(remaining.size());
  std::vector<double> gains(remaining.size());
  double first_mod = 0.0;
  double product = 1.0;
  for (int i = 0; i < steps; ++i) {
    const std::size_t r = remaining.size();
    oracle.ValuesWith(prefix, remaining, std::span<double>(values.data(), r));
    gains.resize(r);
    std::size_t best = 0;
    for (std::size_t t = 0; t < r; ++t) {
      gains[t] = values[t] - prefix_value;
      if (gains[t] > gains[best]) best = t;
    }
    // T* may still use all p elements, so every nested modular bound keeps
    // the full budget; a shrinking budget would not bound f(T* | prefix).
    // Once the rest fits in the budget, the joint gain is exact.
    const double mod = static_cast<int>(r) <= ctx.budget
                           ? oracle.Value(prefix | ctx.candidates) - prefix_value
                           : TopSum(gains, ctx.budget);
    if (i == 0) first_mod = mod;
    if (mod <= 0.0) {
      // Zero modular bound: no completion of this prefix gains anything, so
      // the greedy gain so far is already the completion optimum.
      return prefix_value - base_value;
    }
    const double beta = std::clamp(1.0 - gains[best] / mod, 0.0, 1.0);
    product *= beta;
    prefix.Insert(remaining[best]);
    prefix_value = values[best];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  const double denom = 1.0 - product;
  if (denom <= 0.0) return first_mod;
  // Both are admissible; the ratio bound can exceed the first modular bound
  // because every nested bound keeps the full budget.
  return std::min(first_mod, (prefix_value - base_value) / denom);
}

double HeuristicValue(const SubmodularOracle& oracle, const BoundContext& ctx,
                      Heuristic h) {
  return h == Heuristic::kMod ? HMod(oracle, ctx) : HDom(oracle, ctx);
}

double UpperValue(const SubmodularOracle& oracle, const BoundContext& ctx,
                  Heuristic h) {
  return oracle.Value(ctx.base) + HeuristicValue(oracle, ctx, h);
}

}  // namespace submodbb
