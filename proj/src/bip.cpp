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

#include "submodbb/bip.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace submodbb {

ConstraintRow::ConstraintRow(Solution source, double base,
                             std::vector<double> coeff)
    : source_(source), base_(base), coeff_(std::move(coeff)) {
  if (!source_.FitsIn(n())) {
    throw std::invalid_argument("constraint row: source outside ground set");
  }
  if (!(base_ >= 0.0)) {
    throw std::invalid_argument("constraint row: negative base value");
  }
  for (Element i = 0; i < n(); ++i) {
    if (source_.Contains(i)) {
      coeff_[i] = 0.0;
      continue;
    }
    // Monotone oracles give coefficients >= 0; only rounding noise is
    // tolerated below zero.
    if (coeff_[i] < -kEps || std::isnan(coeff_[i])) {
      throw std::invalid_argument("constraint row: negative coefficient for element " +
                                  std::to_string(i + 1));
    }
    coeff_[i] = std::max(coeff_[i], 0.0);
  }
  order_.resize(coeff_.size());
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [this](Element a, Element b) {
    return coeff_[a] > coeff_[b];
  });
}

ConstraintRow ConstraintRow::FromOracle(const SubmodularOracle& oracle,
                                        const Solution& source) {
  const int n = oracle.n();
  const double base = oracle.Value(source);
  const std::vector<Element> outside = (Solution::Full(n) - source).Elements();
  std::vector<double> values(outside.size());
  oracle.ValuesWith(source, outside, values);
  std::vector<double> coeff(n, 0.0);
  for (std::size_t t = 0; t < outside.size(); ++t) {
    coeff[outside[t]] = values[t] - base;
  }
  return ConstraintRow(source, base, std::move(coeff));
}

double RowValue(const ConstraintRow& row, const Solution& y) {
  double total = row.base();
  (y - row.source()).ForEach([&](Element i) {
    if (i < row.n()) total += row.coeff()[i];
  });
  return total;
}

namespace {

// Pruning slack for the search: bounds and leaf values are sums of the same
// terms in different orders, so they may disagree by rounding noise.
constexpr double kBipSlack = 1e-11;

void CheckProblem(const BipProblem& prob) {
  if (prob.rows.empty()) throw std::invalid_argument("BIP: no constraint rows");
  if (prob.fixed_out.Intersects(prob.fixed_in)) {
    throw std::invalid_argument("BIP: fixed-out and fixed-in sets overlap");
  }
  if (prob.fixed_in.Size() > prob.k) {
    throw std::invalid_argument("BIP: more fixed-in elements than the budget k");
  }
  if (!prob.fixed_out.FitsIn(prob.n) || !prob.fixed_in.FitsIn(prob.n)) {
    throw std::invalid_argument("BIP: fixing outside ground set");
  }
  for (const auto& row : prob.rows) {
    if (row.n() != prob.n) throw std::invalid_argument("BIP: row dimension mismatch");
  }
}

void FinishSolution(const BipProblem& prob, BipSolution& sol) {
  sol.z = std::numeric_limits<double>::infinity();
  std::vector<double> values(prob.rows.size());
  for (std::size_t r = 0; r < prob.rows.size(); ++r) {
    values[r] = RowValue(prob.rows[r], sol.y);
    sol.z = std::min(sol.z, values[r]);
  }
  sol.tight_rows.clear();
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (values[r] - sol.z <= kEps) sol.tight_rows.push_back(r);
  }
}

class BipSearch {
 public:
  BipSearch(const BipProblem& prob,
            std::optional<Deadline::Clock::time_point> deadline)
      : prob_(prob), deadline_(deadline), rows_(prob.rows.size()) {}

  BipSolution Run() {
    const Solution free = Solution::Full(prob_.n) - prob_.fixed_out - prob_.fixed_in;
    const int budget = std::min(prob_.k - prob_.fixed_in.Size(), free.Size());

    std::vector<double> values(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      values[r] = RowValue(prob_.rows[r], prob_.fixed_in);
    }

    SeedIncumbent(free, budget, values);
    if (budget > 0) Search(Solution{}, free, budget, values);

    BipSolution sol;
    sol.y = prob_.fixed_in | best_chosen_;
    sol.complete = !interrupted_;
    sol.nodes = nodes_;
    FinishSolution(prob_, sol);
    return sol;
  }

 private:
  // Sum of the `count` largest coefficients of `row` over `available`.
  double TopCoefficients(const ConstraintRow& row, const Solution& available,
                         int count) const {
    double sum = 0.0;
    for (Element e : row.order()) {
      if (count == 0) break;
      if (!available.Contains(e)) continue;
      sum += row.coeff()[e];
      --count;
    }
    return sum;
  }

  double MinValue(const std::vector<double>& values) const {
    return *std::min_element(values.begin(), values.end());
  }

  void Offer(const Solution& chosen, double z) {
    if (z > best_z_) {
      best_z_ = z;
      best_chosen_ = chosen;
    }
  }

  // Two starting points: the best completion of the row with the smallest
  // completion bound, and a greedy max-min fill.
  void SeedIncumbent(const Solution& free, int budget,
                     const std::vector<double>& values) {
    best_z_ = -std::numeric_limits<double>::infinity();
    if (budget == 0) {
      Offer(Solution{}, MinValue(values));
      return;
    }
    std::size_t weakest = 0;
    double weakest_bound = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows_; ++r) {
      const double b = values[r] + TopCoefficients(prob_.rows[r], free, budget);
      if (b < weakest_bound) {
        weakest_bound = b;
        weakest = r;
      }
    }
    hint_ = weakest;
    {
      Solution chosen;
      int left = budget;
      for (Element e : prob_.rows[weakest].order()) {
        if (left == 0) break;
        if (!free.Contains(e)) continue;
        chosen.Insert(e);
        --left;
      }
      Offer(chosen, MinValue(Apply(values, chosen)));
    }
    {
      Solution chosen;
      std::vector<double> current = values;
      const std::vector<Element> elems = free.Elements();
      for (int step = 0; step < budget; ++step) {
        Element pick = -1;
        double pick_z = -std::numeric_limits<double>::infinity();
        for (Element e : elems) {
          if (chosen.Contains(e)) continue;
          double z = std::numeric_limits<double>::infinity();
          for (std::size_t r = 0; r < rows_; ++r) {
            z = std::min(z, current[r] + prob_.rows[r].coeff()[e]);
          }
          if (z > pick_z) {
            pick_z = z;
            pick = e;
          }
        }
        chosen.Insert(pick);
        for (std::size_t r = 0; r < rows_; ++r) current[r] += prob_.rows[r].coeff()[pick];
      }
      Offer(chosen, MinValue(current));
    }
  }

  std::vector<double> Apply(const std::vector<double>& values,
                            const Solution& chosen) const {
    std::vector<double> out = values;
    chosen.ForEach([&](Element e) {
      for (std::size_t r = 0; r < rows_; ++r) out[r] += prob_.rows[r].coeff()[e];
    });
    return out;
  }

  bool TimeUp() {
    if (interrupted_) return true;
    if (deadline_ && (nodes_ & 1023) == 0 &&
        Deadline::Clock::now() >= *deadline_) {
      interrupted_ = true;
    }
    return interrupted_;
  }

  // values[r] = row r evaluated at fixed_in + chosen. `available` holds the
  // undecided free elements; exactly `budget` more of them will be chosen.
  void Search(const Solution& chosen, const Solution& available, int budget,
              const std::vector<double>& values) {
    ++nodes_;
    if (TimeUp()) return;
    if (budget == 0) {
      Offer(chosen, MinValue(values));
      return;
    }
    if (available.Size() == budget) {
      Offer(chosen | available, MinValue(Apply(values, available)));
      return;
    }

    // Bound: each row's best completion; the minimum over rows is valid.
    double bound = std::numeric_limits<double>::infinity();
    std::size_t arg = hint_;
    const double cutoff = best_z_ + kBipSlack;
    for (std::size_t t = 0; t < rows_; ++t) {
      const std::size_t r = (hint_ + t) % rows_;
      const double b =
          values[r] + TopCoefficients(prob_.rows[r], available, budget);
      if (b < bound) {
        bound = b;
        arg = r;
        if (bound <= cutoff) {
          hint_ = r;
          return;
        }
      }
    }
    hint_ = arg;

    Element branch = -1;
    for (Element e : prob_.rows[arg].order()) {
      if (available.Contains(e)) {
        branch = e;
        break;
      }
    }

    std::vector<double> next(values);
    const auto& rows = prob_.rows;
    for (std::size_t r = 0; r < rows_; ++r) next[r] += rows[r].coeff()[branch];
    const Solution rest = available.Without(branch);
    Search(chosen.With(branch), rest, budget - 1, next);
    Search(chosen, rest, budget, values);
  }

  const BipProblem& prob_;
  std::optional<Deadline::Clock::time_point> deadline_;
  std::size_t rows_;
  std::size_t hint_ = 0;
  double best_z_ = 0.0;
  Solution best_chosen_;
  std::uint64_t nodes_ = 0;
  bool interrupted_ = false;
};

}  // namespace

BipSolution SolveBip(const BipProblem& prob,
                     std::optional<Deadline::Clock::time_point> deadline) {
  CheckProblem(prob);
  return BipSearch(prob, deadline).Run();
}

BipSolution BruteForceBip(const BipProblem& prob) {
  CheckProblem(prob);
  const std::vector<Element> free =
      (Solution::Full(prob.n) - prob.fixed_out - prob.fixed_in).Elements();
  const int count = static_cast<int>(free.size());
  if (count > kBruteForceBipCap) {
    throw std::invalid_argument("brute-force BIP: " + std::to_string(count) +
                                " free variables exceed the cap of " +
                                std::to_string(kBruteForceBipCap));
  }
  const int budget = prob.k - prob.fixed_in.Size();
  BipSolution sol;
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    if (std::popcount(mask) > budget) continue;
    Solution y = prob.fixed_in;
    for (int t = 0; t < count; ++t) {
      if ((mask >> t) & 1u) y.Insert(free[t]);
    }
    double z = std::numeric_limits<double>::infinity();
    for (const auto& row : prob.rows) z = std::min(z, RowValue(row, y));
    if (z > best) {
      best = z;
      sol.y = y;
    }
  }
  sol.nodes = std::uint64_t{1} << count;
  FinishSolution(prob, sol);
  return sol;
}

PricingResult BruteForcePricing(const SubmodularOracle& oracle, int k,
                                const Solution& y) {
  const int n = oracle.n();
  if (n > kBruteForcePricingCap) {
    throw std::invalid_argument("brute-force pricing: n = " + std::to_string(n) +
                                " exceeds the cap of " +
                                std::to_string(kBruteForcePricingCap));
  }
  if (!y.FitsIn(n)) throw std::out_of_range("pricing: y outside ground set");
  PricingResult best{Solution{}, std::numeric_limits<double>::infinity()};
  std::vector<double> values(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) > k) continue;
    Solution s;
    for (int e = 0; e < n; ++e) {
      if ((mask >> e) & 1u) s.Insert(e);
    }
    const double fs = oracle.Value(s);
    const std::vector<Element> extra = (y - s).Elements();
    oracle.ValuesWith(s, extra, std::span<double>(values.data(), extra.size()));
    double total = fs;
    for (std::size_t t = 0; t < extra.size(); ++t) total += values[t] - fs;
    if (total < best.value) best = {s, total};
  }
  return best;
}

}  // namespace submodbb
