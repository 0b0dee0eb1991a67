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

#ifndef SUBMODBB_ORACLE_HPP_
#define SUBMODBB_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "submodbb/solution.hpp"

namespace submodbb {

/// Value oracle for a set function f over the ground set {0..n-1}.
///
/// Implementations are expected to be normalized (f(empty) = 0),
/// non-decreasing and submodular; VerifyOracle checks this exhaustively for
/// small n. Concrete oracles are immutable and may be shared across threads.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  virtual int n() const = 0;

  /// f(s). Throws std::out_of_range if s has a member >= n().
  double Value(const Solution& s) const {
    CheckRange(s);
    return DoValue(s);
  }

  /// Writes f(s + {candidates[t]}) into out[t] for every t. Equivalent to
  /// calling Value once per candidate; concrete oracles override the batch
  /// form to share work across the candidates.
  void ValuesWith(const Solution& s, std::span<const Element> candidates,
                  std::span<double> out) const;

 protected:
  virtual double DoValue(const Solution& s) const = 0;
  virtual void DoValuesWith(const Solution& s,
                            std::span<const Element> candidates,
                            std::span<double> out) const;

 private:
  void CheckRange(const Solution& s) const;
};

/// f(s + {i}) - f(s); zero when i is already in s.
double MarginalGain(const SubmodularOracle& oracle, Element i,
                    const Solution& s);

/// Oracle backed by an arbitrary callable. Handy in tests.
class FunctionOracle final : public SubmodularOracle {
 public:
  FunctionOracle(int n, std::function<double(const Solution&)> fn)
      : n_(n), fn_(std::move(fn)) {}
  int n() const override { return n_; }

 protected:
  double DoValue(const Solution& s) const override { return fn_(s); }

 private:
  int n_;
  std::function<double(const Solution&)> fn_;
};

struct OracleReport {
  bool is_normalized = true;
  bool is_nondecreasing = true;
  bool is_submodular = true;
  // First violating pair (S, T) found, in the order the checks run.
  std::optional<std::pair<Solution, Solution>> counterexample;
  std::string message;

  bool ok() const { return is_normalized && is_nondecreasing && is_submodular; }
};

inline constexpr int kDefaultVerifyCap = 16;

/// Exhaustively checks normalization, monotonicity and submodularity.
/// Monotonicity and submodularity are checked in their local forms
/// (f(S+i) >= f(S), and f(S+i) + f(S+j) >= f(S) + f(S+i+j)), which are
/// equivalent to the global definitions. Refuses n > cap.
OracleReport VerifyOracle(const SubmodularOracle& oracle,
                          int cap = kDefaultVerifyCap, double tol = kEps);

/// Caches values by subset. Single-owner: not safe for concurrent use.
/// With an entry cap, the least recently used entry is evicted first.
class MemoOracle final : public SubmodularOracle {
 public:
  explicit MemoOracle(const SubmodularOracle& inner,
                      std::optional<std::size_t> max_entries = std::nullopt)
      : inner_(inner), max_entries_(max_entries) {}

  int n() const override { return inner_.n(); }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }

 protected:
  double DoValue(const Solution& s) const override;
  void DoValuesWith(const Solution& s, std::span<const Element> candidates,
                    std::span<double> out) const override;

 private:
  using Lru = std::list<Solution>;
  struct Entry {
    double value;
    Lru::iterator lru_pos;
  };

  const double* Find(const Solution& s) const;
  void Store(const Solution& s, double value) const;

  const SubmodularOracle& inner_;
  std::optional<std::size_t> max_entries_;
  mutable std::unordered_map<Solution, Entry, SolutionHash> entries_;
  mutable Lru lru_;
  mutable std::uint64_t hits_ = 0;
  mutable std::uint64_t misses_ = 0;
};

struct EvalCounter {
  std::uint64_t distinct_evals = 0;
  std::uint64_t total_requests = 0;
};

/// Counts oracle requests. A batch ValuesWith call counts one request per
/// candidate. Distinct subsets are tracked by 64-bit fingerprint.
class CountingOracle final : public SubmodularOracle {
 public:
  explicit CountingOracle(const SubmodularOracle& inner) : inner_(inner) {}

  int n() const override { return inner_.n(); }
  const EvalCounter& counter() const { return counter_; }
  void Reset() {
    counter_ = {};
    seen_.clear();
  }

 protected:
  double DoValue(const Solution& s) const override;
  void DoValuesWith(const Solution& s, std::span<const Element> candidates,
                    std::span<double> out) const override;

 private:
  void Record(const Solution& s) const;

  const SubmodularOracle& inner_;
  mutable EvalCounter counter_;
  mutable std::unordered_set<std::uint64_t> seen_;
};

inline std::unique_ptr<MemoOracle> WithMemo(
    const SubmodularOracle& oracle,
    std::optional<std::size_t> max_entries = std::nullopt) {
  return std::make_unique<MemoOracle>(oracle, max_entries);
}

inline std::unique_ptr<CountingOracle> WithCounter(
    const SubmodularOracle& oracle) {
  return std::make_unique<CountingOracle>(oracle);
}

}  // namespace submodbb

#endif  // SUBMODBB_ORACLE_HPP_
