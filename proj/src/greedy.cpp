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

#include "submodbb/greedy.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace submodbb {

namespace {

// Stale gains may undershoot a later fresh gain by floating-point noise when
// two gains tie mathematically; this slack makes LazyGreedy re-evaluate such
// near-ties instead of trusting the stale value.
constexpr double kLazySlack = 1e-10;

void CheckGreedyArgs(const SubmodularOracle& oracle, int k,
                     const Solution& base, const Solution& candidates) {
  if (!base.FitsIn(oracle.n()) || !candidates.FitsIn(oracle.n())) {
    throw std::out_of_range("greedy: element outside ground set");
  }
  if (base.Size() > k) throw std::invalid_argument("greedy: |base| exceeds k");
  if (base.Intersects(candidates)) {
    throw std::invalid_argument("greedy: base and candidates overlap");
  }
}

}  // namespace

GreedyTrace Greedy(const SubmodularOracle& oracle, int k, const Solution& base,
                   const Solution& candidates) {
  CheckGreedyArgs(oracle, k, base, candidates);
  GreedyTrace trace;
  Solution current = base;
  double value = oracle.Value(current);
  std::vector<Element> pool = candidates.Elements();
  std::vector<double> values(pool.size());
  while (current.Size() < k && !pool.empty()) {
    oracle.ValuesWith(current, pool, std::span<double>(values.data(), pool.size()));
    std::size_t best = 0;
    double best_gain = values[0] - value;
    for (std::size_t t = 1; t < pool.size(); ++t) {
      const double gain = values[t] - value;
      if (gain > best_gain) {
        best = t;
        best_gain = gain;
      }
    }
    trace.order.push_back(pool[best]);
    trace.gains.push_back(best_gain);
    current.Insert(pool[best]);
    value = values[best];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
  }
  trace.final_set = current;
  trace.final_value = value;
  return trace;
}

GreedyTrace LazyGreedy(const SubmodularOracle& oracle, int k,
                       const Solution& base, const Solution& candidates) {
  CheckGreedyArgs(oracle, k, base, candidates);
  struct Entry {
    double bound;
    Element id;
    int round;  // prefix length at which bound was computed; -1 = never
  };
  auto lower_priority = [](const Entry& a, const Entry& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.id > b.id;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower_priority)> heap(
      lower_priority);
  candidates.ForEach([&](Element e) {
    heap.push({std::numeric_limits<double>::infinity(), e, -1});
  });

  GreedyTrace trace;
  Solution current = base;
  double value = oracle.Value(current);
  std::vector<Entry> refreshed;
  double probe = 0.0;
  for (int round = 0; current.Size() < k && !heap.empty(); ++round) {
    refreshed.clear();
    bool have_best = false;
    Entry best{0.0, -1, round};
    double best_value = value;
    while (!heap.empty()) {
      const Entry top = heap.top();
      if (have_best && top.bound < best.bound - kLazySlack) break;
      heap.pop();
      const Element id = top.id;
      oracle.ValuesWith(current, std::span<const Element>(&id, 1),
                        std::span<double>(&probe, 1));
      const Entry fresh{probe - value, id, round};
      refreshed.push_back(fresh);
      if (!have_best || fresh.bound > best.bound ||
          (fresh.bound == best.bound && fresh.id < best.id)) {
        best = fresh;
        best_value = probe;
        have_best = true;
      }
    }
    for (const Entry& e : refreshed) {
      if (e.id != best.id) heap.push(e);
    }
    trace.order.push_back(best.id);
    trace.gains.push_back(best.bound);
    current.Insert(best.id);
    value = best_value;
  }
  trace.final_set = current;
  trace.final_value = value;
  return trace;
}

Solution LocalSearch(const SubmodularOracle& oracle, int k,
                     const Solution& fixed_out, const Solution& fixed_in) {
  const int n = oracle.n();
  if (fixed_out.Intersects(fixed_in)) {
    throw std::invalid_argument("local search: fixings overlap");
  }
  if (fixed_in.Size() > k) {
    throw std::invalid_argument("local search: more fixed-in elements than k");
  }
  const Solution ground = Solution::Full(n);
  Solution s =
      LazyGreedy(oracle, k, fixed_in, ground - fixed_out - fixed_in).final_set;
  double value = oracle.Value(s);
  std::vector<double> values(n);
  while (true) {
    const std::vector<Element> removable = (s - fixed_in).Elements();
    const std::vector<Element> addable = (ground - s - fixed_out).Elements();
    if (removable.empty() || addable.empty()) break;
    double best_value = value + kEps;
    Element best_out = -1;
    Element best_in = -1;
    for (Element out : removable) {
      const Solution rest = s.Without(out);
      oracle.ValuesWith(rest, addable,
                        std::span<double>(values.data(), addable.size()));
      for (std::size_t t = 0; t < addable.size(); ++t) {
        if (values[t] > best_value) {
          best_value = values[t];
          best_out = out;
          best_in = addable[t];
        }
      }
    }
    if (best_out < 0) break;
    s.Erase(best_out);
    s.Insert(best_in);
    value = best_value;
  }
  return s;
}

}  // namespace submodbb
