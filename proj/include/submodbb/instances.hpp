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

// Benchmark objectives: facility location (LOC) and weighted coverage (COV),
// their seeded generators, and the JSON instance file format.

#ifndef SUBMODBB_INSTANCES_HPP_
#define SUBMODBB_INSTANCES_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "submodbb/oracle.hpp"
#include "submodbb/solution.hpp"

namespace submodbb {

// Thrown for malformed or invalid instance data. The message names the
// offending field.
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FacilityLocationInstance {
  int n = 0;  // locations
  int m = 0;  // clients
  int k = 0;
  // g[client][location], nonnegative.
  std::vector<std::vector<double>> g;
  std::optional<std::uint64_t> seed;

  bool operator==(const FacilityLocationInstance&) const = default;
};

struct WeightedCoverageInstance {
  int n = 0;  // sensors
  int m = 0;  // items
  int k = 0;
  // cover[sensor] = sorted 0-based item ids.
  std::vector<std::vector<int>> cover;
  std::vector<double> weights;
  std::optional<std::uint64_t> seed;
  std::optional<double> cover_prob;

  bool operator==(const WeightedCoverageInstance&) const = default;
};

using Instance = std::variant<FacilityLocationInstance, WeightedCoverageInstance>;

// f(S) = sum over clients of the best benefit from an open location in S.
class FacilityLocationOracle final : public SubmodularOracle {
 public:
  explicit FacilityLocationOracle(const FacilityLocationInstance& inst);
  int n() const override { return n_; }

 protected:
  double DoValue(const Solution& s) const override;
  void DoValuesWith(const Solution& s, std::span<const Element> candidates,
                    std::span<double> out) const override;

 private:
  int n_;
  int m_;
  // Column-major: benefit_[j * m_ + i] = g[i][j].
  std::vector<double> benefit_;
};

// f(S) = total weight of the items covered by at least one sensor in S.
class WeightedCoverageOracle final : public SubmodularOracle {
 public:
  explicit WeightedCoverageOracle(const WeightedCoverageInstance& inst);
  int n() const override { return n_; }

 protected:
  double DoValue(const Solution& s) const override;
  void DoValuesWith(const Solution& s, std::span<const Element> candidates,
                    std::span<double> out) const override;

 private:
  double Weight(const std::vector<std::uint64_t>& covered) const;

  int n_;
  int m_;
  int words_;
  // masks_[j * words_ + w]: item bitmask of sensor j.
  std::vector<std::uint64_t> masks_;
  std::vector<double> weights_;
};

double LocValue(const FacilityLocationInstance& inst, const Solution& s);
double CovValue(const WeightedCoverageInstance& inst, const Solution& s);

/// g entries i.i.d. uniform on [0,1); client row i draws from Rng(seed, i).
FacilityLocationInstance GenerateLoc(int n, int m, int k, std::uint64_t seed);

/// Sensor j covers each item independently with probability cover_prob,
/// drawing from Rng(seed, j); weights are uniform on [0,1) from the stream
/// Rng(seed, kWeightStream).
WeightedCoverageInstance GenerateCov(int n, int m, int k, double cover_prob,
                                     std::uint64_t seed);

inline constexpr std::uint64_t kWeightStream = std::uint64_t{1} << 32;
inline constexpr double kDefaultCoverProb = 0.07;

void Validate(const FacilityLocationInstance& inst);
void Validate(const WeightedCoverageInstance& inst);
void Validate(const Instance& inst);

std::string TypeTag(const Instance& inst);
int InstanceN(const Instance& inst);
int InstanceM(const Instance& inst);
int InstanceK(const Instance& inst);
std::optional<std::uint64_t> InstanceSeed(const Instance& inst);

std::unique_ptr<SubmodularOracle> MakeOracle(const Instance& inst);

std::string SerializeInstance(const Instance& inst);
Instance ParseInstance(const std::string& text);
void SaveInstance(const Instance& inst, const std::filesystem::path& path);
Instance LoadInstance(const std::filesystem::path& path);

}  // namespace submodbb

#endif  // SUBMODBB_INSTANCES_HPP_
