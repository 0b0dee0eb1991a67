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

#include "submodbb/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace submodbb {

void SubmodularOracle::CheckRange(const Solution& s) const {
  if (!s.FitsIn(n())) {
    throw std::out_of_range("element id " + std::to_string(s.Max() + 1) +
                            " outside ground set of size " +
                            std::to_string(n()));
  }
}

void SubmodularOracle::ValuesWith(const Solution& s,
                                  std::span<const Element> candidates,
                                  std::span<double> out) const {
  if (out.size() < candidates.size()) {
    throw std::invalid_argument("output span shorter than candidate list");
  }
  CheckRange(s);
  for (Element e : candidates) {
    if (e < 0 || e >= n()) {
      throw std::out_of_range("candidate " + std::to_string(e + 1) +
                              " outside ground set");
    }
  }
  DoValuesWith(s, candidates, out);
}

void SubmodularOracle::DoValuesWith(const Solution& s,
                                    std::span<const Element> candidates,
                                    std::span<double> out) const {
  for (std::size_t t = 0; t < candidates.size(); ++t) {
    out[t] = DoValue(s.With(candidates[t]));
  }
}

double MarginalGain(const SubmodularOracle& oracle, Element i,
                    const Solution& s) {
  if (i < 0 || i >= oracle.n()) {
    throw std::out_of_range("element id " + std::to_string(i + 1) +
                            " outside ground set");
  }
  if (s.Contains(i)) return 0.0;
  return oracle.Value(s.With(i)) - oracle.Value(s);
}

OracleReport VerifyOracle(const SubmodularOracle& oracle, int cap,
                          double tol) {
  const int n = oracle.n();
  if (n > cap) {
    throw std::invalid_argument(
        "ground set of size " + std::to_string(n) +
        " exceeds the exhaustive-check cap of " + std::to_string(cap) +
        "; raise the cap to check anyway (cost grows as 2^n * n^2)");
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> f(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Solution s;
    for (int e = 0; e < n; ++e) {
      if ((mask >> e) & 1u) s.Insert(e);
    }
    f[mask] = oracle.Value(s);
  }
  auto to_solution = [n](std::uint64_t mask) {
    Solution s;
    for (int e = 0; e < n; ++e) {
      if ((mask >> e) & 1u) s.Insert(e);
    }
    return s;
  };

  OracleReport report;
  if (std::abs(f[0]) > tol) {
    report.is_normalized = false;
    report.counterexample = {Solution{}, Solution{}};
    report.message = "f(empty) = " + std::to_string(f[0]);
  }
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if (mask & bi) continue;
      if (report.is_nondecreasing && f[mask | bi] < f[mask] - tol) {
        report.is_nondecreasing = false;
        if (!report.counterexample) {
          report.counterexample = {to_solution(mask), to_solution(mask | bi)};
          report.message = "f decreases from " + to_solution(mask).ToString() +
                           " to " + to_solution(mask | bi).ToString();
        }
      }
      if (!report.is_submodular) continue;
      for (int j = i + 1; j < n; ++j) {
        const std::uint64_t bj = std::uint64_t{1} << j;
        if (mask & bj) continue;
        if (f[mask | bi] + f[mask | bj] < f[mask] + f[mask | bi | bj] - tol) {
          report.is_submodular = false;
          if (!report.counterexample) {
            report.counterexample = {to_solution(mask | bi),
                                     to_solution(mask | bj)};
            report.message = "submodularity fails for S=" +
                             to_solution(mask | bi).ToString() +
                             ", T=" + to_solution(mask | bj).ToString();
          }
          break;
        }
      }
    }
  }
  if (report.ok()) report.message = "all properties hold";
  return report;
}

const double* MemoOracle::Find(const Solution& s) const {
  auto it = entries_.find(s);
  if (it == entries_.end()) return nullptr;
  if (max_entries_) lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
  return &it->second.value;
}

void MemoOracle::Store(const Solution& s, double value) const {
  if (max_entries_) {
    if (*max_entries_ == 0) return;
    if (entries_.size() >= *max_entries_) {
      entries_.erase(lru_.back());
      lru_.pop_back();
    }
    lru_.push_front(s);
    entries_.emplace(s, Entry{value, lru_.begin()});
  } else {
    entries_.emplace(s, Entry{value, {}});
  }
}

double MemoOracle::DoValue(const Solution& s) const {
  if (const double* v = Find(s)) {
    ++hits_;
    return *v;
  }
  ++misses_;
  const double v = inner_.Value(s);
  Store(s, v);
  return v;
}

void MemoOracle::DoValuesWith(const Solution& s,
                              std::span<const Element> candidates,
                              std::span<double> out) const {
  std::vector<Element> missing;
  std::vector<std::size_t> slots;
  for (std::size_t t = 0; t < candidates.size(); ++t) {
    if (const double* v = Find(s.With(candidates[t]))) {
      ++hits_;
      out[t] = *v;
    } else {
      missing.push_back(candidates[t]);
      slots.push_back(t);
    }
  }
  if (missing.empty()) return;
  misses_ += missing.size();
  std::vector<double> values(missing.size());
  inner_.ValuesWith(s, missing, values);
  for (std::size_t u = 0; u < missing.size(); ++u) {
    out[slots[u]] = values[u];
    Store(s.With(missing[u]), values[u]);
  }
}

void CountingOracle::Record(const Solution& s) const {
  ++counter_.total_requests;
  if (seen_.insert(s.Hash()).second) ++counter_.distinct_evals;
}

double CountingOracle::DoValue(const Solution& s) const {
  Record(s);
  return inner_.Value(s);
}

void CountingOracle::DoValuesWith(const Solution& s,
                                  std::span<const Element> candidates,
                                  std::span<double> out) const {
  for (Element e : candidates) Record(s.With(e));
  inner_.ValuesWith(s, candidates, out);
}

}  // namespace submodbb
