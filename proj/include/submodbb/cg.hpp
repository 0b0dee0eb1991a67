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

// Constraint generation (CG) and improved constraint generation (ICG).
//
// CG repeatedly solves the reduced program over the stored solutions Q and
// stores the optimum y as a new row until the bound z meets the incumbent.
// ICG additionally feeds each iteration's y, together with a tight stored
// solution, into SubIcg, which samples up to lambda more solutions from
// their union biased by how often each element occurs in Q. The sampled
// rows go into Q+ (the row set actually solved) but not into Q.

#ifndef SUBMODBB_CG_HPP_
#define SUBMODBB_CG_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "submodbb/bip.hpp"
#include "submodbb/oracle.hpp"
#include "submodbb/random.hpp"
#include "submodbb/result.hpp"
#include "submodbb/solution.hpp"

namespace submodbb {

/// Q and Q+ with one cached ConstraintRow per member of Q+, plus the
/// per-element occurrence counts over Q.
class SolutionPool {
 public:
  explicit SolutionPool(int n) : n_(n), counts_(n, 0) {}

  int n() const { return n_; }

  /// Adds s to Q (and to Q+ if new there). Returns false if s was already in Q.
  bool AddToQ(const SubmodularOracle& oracle, const Solution& s);
  /// Adds s to Q+ only. Returns false if already present.
  bool AddToQplus(const SubmodularOracle& oracle, const Solution& s);

  bool InQ(const Solution& s) const;
  bool InQplus(const Solution& s) const { return qplus_index_.contains(s); }

  const std::vector<Solution>& q() const { return q_; }
  const std::vector<Solution>& qplus() const { return qplus_; }
  // rows()[t] belongs to qplus()[t].
  std::span<const ConstraintRow> rows() const { return rows_; }
  const std::vector<int>& counts() const { return counts_; }

  /// p_i = a_i / sum_j a_j. Throws std::logic_error if every count is zero.
  std::vector<double> OccurrenceRates() const;

 private:
  int n_;
  std::vector<Solution> q_;
  std::vector<Solution> qplus_;
  std::vector<ConstraintRow> rows_;
  std::unordered_map<Solution, std::size_t, SolutionHash> qplus_index_;
  std::unordered_map<Solution, std::size_t, SolutionHash> q_index_;
  std::vector<int> counts_;
};

inline std::vector<double> OccurrenceRates(const SolutionPool& pool) {
  return pool.OccurrenceRates();
}

/// Draws up to `lambda` distinct solutions. Each draw picks a tight source
/// uniformly, assigns r_i ~ U[0, p_i] to every i in source + y, and keeps the
/// k elements with the largest r_i (smaller id on ties), or the whole union
/// when it has at most k elements. Stops after max(10 * lambda, 100) draws.
/// Results are in draw order.
std::vector<Solution> SubIcg(const SolutionPool& pool,
                             std::span<const Solution> tight_sources,
                             const Solution& y, int k, int lambda, Rng& rng);

inline int DefaultLambda(int k) { return 10 * k; }

struct CgIteration {
  double z = 0.0;          // reduced-program optimum this iteration
  double incumbent = 0.0;  // f(S*) after this iteration's updates
  std::size_t q_size = 0;
  std::size_t qplus_size = 0;
  Solution y;  // the reduced-program optimum S^(t)
};

struct CgTrace {
  std::vector<CgIteration> iterations;
  std::uint64_t bip_solves = 0;
};

struct CgResult {
  OptResult result;
  CgTrace trace;
};

CgResult CgSolve(const SubmodularOracle& oracle, int k, const Solution& initial,
                 const Limits& limits = {});

/// lambda = 0 reproduces CgSolve exactly.
CgResult IcgSolve(const SubmodularOracle& oracle, int k, int lambda,
                  std::uint64_t seed, const Solution& initial,
                  const Limits& limits = {});

/// Incremental ICG state shared by IcgSolve and the branch-and-bound solver.
class IcgEngine {
 public:
  IcgEngine(const SubmodularOracle& oracle, int k, int lambda,
            std::uint64_t seed, const Solution& initial);

  /// Solves the reduced program over Q+ with the given fixings.
  BipSolution Solve(const Solution& fixed_out, const Solution& fixed_in,
                    std::optional<Deadline::Clock::time_point> deadline);

  /// Adds sol.y to Q, samples with SubIcg from sol's tight rows, and adds
  /// y plus the samples to Q+. Returns the samples (some may already have
  /// been in Q+).
  std::vector<Solution> Expand(const BipSolution& sol);

  const SolutionPool& pool() const { return pool_; }
  std::uint64_t bip_solves() const { return bip_solves_; }
  int k() const { return k_; }

 private:
  const SubmodularOracle& oracle_;
  int k_;
  int lambda_;
  Rng rng_;
  SolutionPool pool_;
  std::uint64_t bip_solves_ = 0;
};

}  // namespace submodbb

#endif  // SUBMODBB_CG_HPP_
