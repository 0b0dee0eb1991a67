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

// The reduced binary program over a set of stored solutions Q:
//
//   maximize z
//   s.t.     z <= f(S) + sum_{i not in S} f({i} | S) y_i   for S in Q
//            sum_i y_i <= k,  y_i = 0 on S0,  y_i = 1 on S1,  y binary.
//
// Each stored solution contributes one ConstraintRow. Because every
// coefficient is nonnegative, the problem is "maximize the minimum of
// several nonnegative modular functions under a cardinality budget", which
// BipSolver handles with a dedicated depth-first branch-and-bound.

#ifndef SUBMODBB_BIP_HPP_
#define SUBMODBB_BIP_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "submodbb/oracle.hpp"
#include "submodbb/result.hpp"
#include "submodbb/solution.hpp"

namespace submodbb {

class ConstraintRow {
 public:
  ConstraintRow(Solution source, double base, std::vector<double> coeff);

  /// Evaluates f(source) and every f({i} | source) with one batch query.
  static ConstraintRow FromOracle(const SubmodularOracle& oracle,
                                  const Solution& source);

  const Solution& source() const { return source_; }
  double base() const { return base_; }
  // Dense, indexed by element; zero on members of source().
  const std::vector<double>& coeff() const { return coeff_; }
  // Elements ordered by coefficient, largest first (smaller id on ties).
  const std::vector<Element>& order() const { return order_; }
  int n() const { return static_cast<int>(coeff_.size()); }

 private:
  Solution source_;
  double base_;
  std::vector<double> coeff_;
  std::vector<Element> order_;
};

/// base + sum of coefficients over y \ source, in increasing element order.
double RowValue(const ConstraintRow& row, const Solution& y);

struct BipProblem {
  std::span<const ConstraintRow> rows;
  int n = 0;
  int k = 0;
  Solution fixed_out;  // S0
  Solution fixed_in;   // S1
};

struct BipSolution {
  Solution y;
  double z = 0.0;
  // Indices into BipProblem::rows whose value at y is within kEps of z.
  std::vector<std::size_t> tight_rows;
  // False only when a deadline interrupted the search; y is then feasible but
  // z is not a valid bound.
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// Exact solver. Fills the whole budget (coefficients are nonnegative, so a
/// full-budget optimum always exists). Among optimal assignments it returns
/// the first reached by its fixed search order, which is deterministic.
/// Throws std::invalid_argument when |S1| > k, S0 and S1 overlap, rows is
/// empty, or a row's dimension differs from n.
BipSolution SolveBip(const BipProblem& prob,
                     std::optional<Deadline::Clock::time_point> deadline = std::nullopt);

inline constexpr int kBruteForceBipCap = 22;

/// Reference solver enumerating every feasible y over the free variables.
/// Refuses more than kBruteForceBipCap free variables. Ties go to the first
/// assignment in enumeration order.
BipSolution BruteForceBip(const BipProblem& prob);

struct PricingResult {
  Solution set;
  double value = 0.0;
};

inline constexpr int kBruteForcePricingCap = 20;

/// min over |S| <= k of f(S) + sum_{i in y \ S} f({i} | S), by enumeration.
/// A test oracle for constraint-generation termination. Refuses
/// n > kBruteForcePricingCap.
PricingResult BruteForcePricing(const SubmodularOracle& oracle, int k,
                                const Solution& y);

}  // namespace submodbb

#endif  // SUBMODBB_BIP_HPP_
