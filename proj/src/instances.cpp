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

#include "submodbb/instances.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "submodbb/random.hpp"

namespace submodbb {

using nlohmann::json;

FacilityLocationOracle::FacilityLocationOracle(
    const FacilityLocationInstance& inst)
    : n_(inst.n), m_(inst.m), benefit_(static_cast<std::size_t>(inst.n) * inst.m) {
  Validate(inst);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < n_; ++j) benefit_[static_cast<std::size_t>(j) * m_ + i] = inst.g[i][j];
  }
}

double FacilityLocationOracle::DoValue(const Solution& s) const {
  std::vector<double> best(m_, 0.0);
  s.ForEach([&](Element j) {
    const double* col = &benefit_[static_cast<std::size_t>(j) * m_];
    for (int i = 0; i < m_; ++i) best[i] = std::max(best[i], col[i]);
  });
  double total = 0.0;
  for (double b : best) total += b;
  return total;
}

// max() is exact, so summing max(best, column) client by client reproduces
// DoValue(s + {j}) bit for bit.
void FacilityLocationOracle::DoValuesWith(const Solution& s,
                                          std::span<const Element> candidates,
                                          std::span<double> out) const {
  std::vector<double> best(m_, 0.0);
  s.ForEach([&](Element j) {
    const double* col = &benefit_[static_cast<std::size_t>(j) * m_];
    for (int i = 0; i < m_; ++i) best[i] = std::max(best[i], col[i]);
  });
  for (std::size_t t = 0; t < candidates.size(); ++t) {
    const double* col = &benefit_[static_cast<std::size_t>(candidates[t]) * m_];
    double total = 0.0;
    for (int i = 0; i < m_; ++i) total += std::max(best[i], col[i]);
    out[t] = total;
  }
}

WeightedCoverageOracle::WeightedCoverageOracle(
    const WeightedCoverageInstance& inst)
    : n_(inst.n),
      m_(inst.m),
      words_((inst.m + 63) / 64),
      masks_(static_cast<std::size_t>(inst.n) * ((inst.m + 63) / 64), 0),
      weights_(inst.weights) {
  Validate(inst);
  for (int j = 0; j < n_; ++j) {
    for (int item : inst.cover[j]) {
      masks_[static_cast<std::size_t>(j) * words_ + item / 64] |=
          std::uint64_t{1} << (item % 64);
    }
  }
}

double WeightedCoverageOracle::Weight(
    const std::vector<std::uint64_t>& covered) const {
  double total = 0.0;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = covered[w];
    while (bits != 0) {
      total += weights_[64 * w + std::countr_zero(bits)];
      bits &= bits - 1;
    }
  }
  return total;
}

double WeightedCoverageOracle::DoValue(const Solution& s) const {
  std::vector<std::uint64_t> covered(words_, 0);
  s.ForEach([&](Element j) {
    for (int w = 0; w < words_; ++w) covered[w] |= masks_[static_cast<std::size_t>(j) * words_ + w];
  });
  return Weight(covered);
}

void WeightedCoverageOracle::DoValuesWith(const Solution& s,
                                          std::span<const Element> candidates,
                                          std::span<double> out) const {
  std::vector<std::uint64_t> base(words_, 0);
  s.ForEach([&](Element j) {
    for (int w = 0; w < words_; ++w) base[w] |= masks_[static_cast<std::size_t>(j) * words_ + w];
  });
  std::vector<std::uint64_t> covered(words_);
  for (std::size_t t = 0; t < candidates.size(); ++t) {
    const std::size_t off = static_cast<std::size_t>(candidates[t]) * words_;
    for (int w = 0; w < words_; ++w) covered[w] = base[w] | masks_[off + w];
    out[t] = Weight(covered);
  }
}

double LocValue(const FacilityLocationInstance& inst, const Solution& s) {
  return FacilityLocationOracle(inst).Value(s);
}

double CovValue(const WeightedCoverageInstance& inst, const Solution& s) {
  return WeightedCoverageOracle(inst).Value(s);
}

namespace {

void CheckDims(int n, int m, int k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > Solution::kMaxElements) {
    throw std::invalid_argument("n must be <= " +
                                std::to_string(Solution::kMaxElements));
  }
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("k must satisfy 1 <= k <= n");
}

}  // namespace

FacilityLocationInstance GenerateLoc(int n, int m, int k, std::uint64_t seed) {
  CheckDims(n, m, k);
  FacilityLocationInstance inst;
  inst.n = n;
  inst.m = m;
  inst.k = k;
  inst.seed = seed;
  inst.g.assign(m, std::vector<double>(n));
  for (int i = 0; i < m; ++i) {
    Rng rng(seed, static_cast<std::uint64_t>(i));
    for (int j = 0; j < n; ++j) inst.g[i][j] = rng.Uniform01();
  }
  return inst;
}

WeightedCoverageInstance GenerateCov(int n, int m, int k, double cover_prob,
                                     std::uint64_t seed) {
  CheckDims(n, m, k);
  if (!(cover_prob >= 0.0 && cover_prob <= 1.0)) {
    throw std::invalid_argument("cover probability must lie in [0, 1]");
  }
  WeightedCoverageInstance inst;
  inst.n = n;
  inst.m = m;
  inst.k = k;
  inst.seed = seed;
  inst.cover_prob = cover_prob;
  inst.cover.resize(n);
  for (int j = 0; j < n; ++j) {
    Rng rng(seed, static_cast<std::uint64_t>(j));
    for (int i = 0; i < m; ++i) {
      if (rng.Uniform01() < cover_prob) inst.cover[j].push_back(i);
    }
  }
  Rng wrng(seed, kWeightStream);
  inst.weights.resize(m);
  for (int i = 0; i < m; ++i) inst.weights[i] = wrng.Uniform01();
  return inst;
}

namespace {

void CheckHeader(int n, int m, int k) {
  if (n < 1) throw InstanceError("field 'n': must be >= 1");
  if (n > Solution::kMaxElements) {
    throw InstanceError("field 'n': must be <= " +
                        std::to_string(Solution::kMaxElements));
  }
  if (m < 1) throw InstanceError("field 'm': must be >= 1");
  if (k < 1 || k > n) throw InstanceError("field 'k': must satisfy 1 <= k <= n");
}

}  // namespace

void Validate(const FacilityLocationInstance& inst) {
  CheckHeader(inst.n, inst.m, inst.k);
  if (static_cast<int>(inst.g.size()) != inst.m) {
    throw InstanceError("field 'g': expected " + std::to_string(inst.m) + " rows");
  }
  for (int i = 0; i < inst.m; ++i) {
    if (static_cast<int>(inst.g[i].size()) != inst.n) {
      throw InstanceError("field 'g': row " + std::to_string(i + 1) +
                          " must have " + std::to_string(inst.n) + " entries");
    }
    for (double v : inst.g[i]) {
      if (!std::isfinite(v) || v < 0.0) {
        throw InstanceError("field 'g': row " + std::to_string(i + 1) +
                            " has a negative or non-finite benefit");
      }
    }
  }
}

void Validate(const WeightedCoverageInstance& inst) {
  CheckHeader(inst.n, inst.m, inst.k);
  if (static_cast<int>(inst.cover.size()) != inst.n) {
    throw InstanceError("field 'cover': expected " + std::to_string(inst.n) +
                        " item lists");
  }
  for (int j = 0; j < inst.n; ++j) {
    for (int item : inst.cover[j]) {
      if (item < 0 || item >= inst.m) {
        throw InstanceError("field 'cover': sensor " + std::to_string(j + 1) +
                            " lists item " + std::to_string(item + 1) +
                            " outside 1.." + std::to_string(inst.m));
      }
    }
  }
  if (static_cast<int>(inst.weights.size()) != inst.m) {
    throw InstanceError("field 'weights': expected " + std::to_string(inst.m) +
                        " entries");
  }
  for (double w : inst.weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InstanceError("field 'weights': negative or non-finite weight");
    }
  }
  if (inst.cover_prob && !(*inst.cover_prob >= 0.0 && *inst.cover_prob <= 1.0)) {
    throw InstanceError("field 'cover_prob': must lie in [0, 1]");
  }
}

void Validate(const Instance& inst) {
  std::visit([](const auto& i) { Validate(i); }, inst);
}

std::string TypeTag(const Instance& inst) {
  return std::holds_alternative<FacilityLocationInstance>(inst)
             ? "facility_location"
             : "weighted_coverage";
}

int InstanceN(const Instance& inst) {
  return std::visit([](const auto& i) { return i.n; }, inst);
}
int InstanceM(const Instance& inst) {
  return std::visit([](const auto& i) { return i.m; }, inst);
}
int InstanceK(const Instance& inst) {
  return std::visit([](const auto& i) { return i.k; }, inst);
}
std::optional<std::uint64_t> InstanceSeed(const Instance& inst) {
  return std::visit([](const auto& i) { return i.seed; }, inst);
}

std::unique_ptr<SubmodularOracle> MakeOracle(const Instance& inst) {
  if (const auto* loc = std::get_if<FacilityLocationInstance>(&inst)) {
    return std::make_unique<FacilityLocationOracle>(*loc);
  }
  return std::make_unique<WeightedCoverageOracle>(
      std::get<WeightedCoverageInstance>(inst));
}

std::string SerializeInstance(const Instance& inst) {
  Validate(inst);
  json doc = json::object();
  doc["type"] = TypeTag(inst);
  doc["n"] = InstanceN(inst);
  doc["m"] = InstanceM(inst);
  doc["k"] = InstanceK(inst);
  if (auto seed = InstanceSeed(inst)) doc["seed"] = *seed;
  if (const auto* loc = std::get_if<FacilityLocationInstance>(&inst)) {
    doc["g"] = loc->g;
  } else {
    const auto& cov = std::get<WeightedCoverageInstance>(inst);
    if (cov.cover_prob) doc["cover_prob"] = *cov.cover_prob;
    json cover = json::array();
    for (const auto& items : cov.cover) {
      json ids = json::array();
      for (int item : items) ids.push_back(item + 1);
      cover.push_back(std::move(ids));
    }
    doc["cover"] = std::move(cover);
    doc["weights"] = cov.weights;
  }
  return doc.dump(1) + "\n";
}

namespace {

template <typename T>
T Field(const json& doc, const char* name) {
  if (!doc.contains(name)) {
    throw InstanceError(std::string("field '") + name + "': missing");
  }
  try {
    return doc.at(name).get<T>();
  } catch (const json::exception& e) {
    throw InstanceError(std::string("field '") + name + "': " + e.what());
  }
}

int IntField(const json& doc, const char* name) {
  const json& v = doc.contains(name) ? doc.at(name) : json();
  if (!v.is_number_integer()) {
    throw InstanceError(std::string("field '") + name +
                        "': missing or not an integer");
  }
  return v.get<int>();
}

}  // namespace

Instance ParseInstance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) throw InstanceError("instance document must be an object");
  const auto type = Field<std::string>(doc, "type");
  const int n = IntField(doc, "n");
  const int m = IntField(doc, "m");
  const int k = IntField(doc, "k");
  std::optional<std::uint64_t> seed;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      throw InstanceError("field 'seed': not an integer");
    }
    seed = doc["seed"].get<std::uint64_t>();
  }
  if (type == "facility_location") {
    FacilityLocationInstance inst;
    inst.n = n;
    inst.m = m;
    inst.k = k;
    inst.seed = seed;
    inst.g = Field<std::vector<std::vector<double>>>(doc, "g");
    Validate(inst);
    return inst;
  }
  if (type == "weighted_coverage") {
    WeightedCoverageInstance inst;
    inst.n = n;
    inst.m = m;
    inst.k = k;
    inst.seed = seed;
    if (doc.contains("cover_prob")) inst.cover_prob = Field<double>(doc, "cover_prob");
    auto cover = Field<std::vector<std::vector<int>>>(doc, "cover");
    for (auto& items : cover) {
      for (int& item : items) --item;
      std::sort(items.begin(), items.end());
      if (std::adjacent_find(items.begin(), items.end()) != items.end()) {
        throw InstanceError("field 'cover': duplicate item id in a sensor list");
      }
    }
    inst.cover = std::move(cover);
    inst.weights = Field<std::vector<double>>(doc, "weights");
    Validate(inst);
    return inst;
  }
  throw InstanceError("field 'type': unknown instance type '" + type + "'");
}

void SaveInstance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << SerializeInstance(inst);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str());
}

}  // namespace submodbb
