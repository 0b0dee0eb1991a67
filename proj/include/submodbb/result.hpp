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

#ifndef SUBMODBB_RESULT_HPP_
#define SUBMODBB_RESULT_HPP_

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "submodbb/solution.hpp"

namespace submodbb {

struct Limits {
  double time_limit_s = std::numeric_limits<double>::infinity();
  std::optional<std::uint64_t> node_limit;
};

// Cooperative deadline; solvers poll it at node and iteration boundaries.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Deadline(double seconds) : start_(Clock::now()) {
    if (seconds < 1e9) {
      end_ = start_ + std::chrono::duration_cast<Clock::duration>(
                          std::chrono::duration<double>(seconds));
    }
  }

  bool Expired() const { return end_ && Clock::now() >= *end_; }
  double Elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }
  std::optional<Clock::time_point> end() const { return end_; }

 private:
  Clock::time_point start_;
  std::optional<Clock::time_point> end_;
};

struct TracePoint {
  std::uint64_t index = 0;  // iteration (CG/ICG) or processed node count
  double upper = 0.0;
  double incumbent = 0.0;
};

struct RunStats {
  double wall_time_s = 0.0;
  std::uint64_t nodes_processed = 0;
  std::uint64_t bip_solves = 0;
  std::uint64_t oracle_distinct = 0;
  std::uint64_t oracle_total = 0;
  std::vector<TracePoint> bound_trace;
};

struct OptResult {
  Solution best;
  double value = 0.0;
  bool proven_optimal = false;
  bool limit_hit = false;
  RunStats stats;
};

}  // namespace submodbb

#endif  // SUBMODBB_RESULT_HPP_
