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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <unistd.h>

#include "test_util.hpp"

namespace submodbb {
namespace {

using testing::One;
using testing::TinyLoc;

WeightedCoverageInstance TwoSensors() {
  WeightedCoverageInstance inst;
  inst.n = 2;
  inst.m = 2;
  inst.k = 2;
  inst.cover = {{0}, {0, 1}};
  inst.weights = {0.3, 0.7};
  return inst;
}

std::filesystem::path TempPath(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("submodbb_" + std::to_string(::getpid()) + "_" + name);
}

TEST(LocValueTest, WorkedExamples) {
  const auto inst = TinyLoc();
  EXPECT_DOUBLE_EQ(LocValue(inst, {}), 0.0);
  EXPECT_NEAR(LocValue(inst, One({1, 3})), 0.8, 1e-12);
  EXPECT_NEAR(LocValue(inst, One({2, 3})), 1.0, 1e-12);
}

TEST(CovValueTest, WorkedExamples) {
  const auto inst = TwoSensors();
  EXPECT_DOUBLE_EQ(CovValue(inst, {}), 0.0);
  EXPECT_NEAR(CovValue(inst, One({1, 2})), 1.0, 1e-12);
  EXPECT_NEAR(CovValue(inst, One({1})), 0.3, 1e-12);
}

TEST(CovValueTest, OracleMatchesReferenceValue) {
  const auto inst = GenerateCov(12, 13, 3, 0.3, 4);
  WeightedCoverageOracle f(inst);
  for (std::uint64_t mask = 0; mask < 4096; mask += 7) {
    EXPECT_NEAR(f.Value(testing::FromMask(mask)), CovValue(inst, testing::FromMask(mask)),
                1e-12);
  }
}

TEST(CovValueTest, DuplicateSensorAddsNothing) {
  auto inst = GenerateCov(6, 7, 2, 0.4, 9);
  inst.n = 7;
  inst.cover.push_back(inst.cover[2]);
  Validate(inst);
  WeightedCoverageOracle f(inst);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Solution s = testing::FromMask(mask).With(2);
    EXPECT_NEAR(f.Value(s.With(6)), f.Value(s), 1e-12);
  }
}

TEST(GenerateLocTest, ShapeRangeAndDeterminism) {
  const auto a = GenerateLoc(30, 31, 5, 1);
  EXPECT_EQ(a.n, 30);
  EXPECT_EQ(a.m, 31);
  EXPECT_EQ(a.g.size(), 31u);
  EXPECT_EQ(a.seed, 1u);
  EXPECT_EQ(SerializeInstance(a), SerializeInstance(GenerateLoc(30, 31, 5, 1)));
  EXPECT_NE(a.g, GenerateLoc(30, 31, 5, 2).g);
  const auto small = GenerateLoc(3, 2, 2, 7);
  for (const auto& row : small.g) {
    ASSERT_EQ(row.size(), 3u);
    for (double v : row) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST(GenerateLocTest, RejectsBadDimensions) {
  EXPECT_THROW(GenerateLoc(0, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(GenerateLoc(3, 0, 1, 1), std::invalid_argument);
  EXPECT_THROW(GenerateLoc(3, 2, 4, 1), std::invalid_argument);
  EXPECT_THROW(GenerateLoc(3, 2, 0, 1), std::invalid_argument);
}

TEST(GenerateCovTest, DefaultsAndExtremes) {
  const auto a = GenerateCov(30, 31, 8, kDefaultCoverProb, 1);
  EXPECT_EQ(a.m, 31);
  EXPECT_EQ(a.cover_prob, 0.07);
  EXPECT_EQ(a, GenerateCov(30, 31, 8, kDefaultCoverProb, 1));

  const auto none = GenerateCov(5, 6, 2, 0.0, 3);
  WeightedCoverageOracle f0(none);
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    EXPECT_EQ(f0.Value(testing::FromMask(mask)), 0.0);
  }

  const auto all = GenerateCov(5, 6, 2, 1.0, 3);
  double total = 0.0;
  for (double w : all.weights) total += w;
  WeightedCoverageOracle f1(all);
  for (std::uint64_t mask = 1; mask < 32; ++mask) {
    EXPECT_NEAR(f1.Value(testing::FromMask(mask)), total, 1e-12);
  }
  EXPECT_THROW(GenerateCov(5, 6, 2, 1.5, 3), std::invalid_argument);
  EXPECT_THROW(GenerateCov(5, 6, 2, -0.1, 3), std::invalid_argument);
}

TEST(InstanceFileTest, RoundTripsLosslessly) {
  const Instance tiny = TinyLoc();
  EXPECT_EQ(ParseInstance(SerializeInstance(tiny)), tiny);
  const Instance loc = GenerateLoc(9, 10, 3, 77);
  EXPECT_EQ(ParseInstance(SerializeInstance(loc)), loc);
  const Instance cov = GenerateCov(9, 10, 3, 0.3, 77);
  EXPECT_EQ(ParseInstance(SerializeInstance(cov)), cov);

  const auto path = TempPath("tiny.json");
  SaveInstance(tiny, path);
  EXPECT_EQ(LoadInstance(path), tiny);
  std::filesystem::remove(path);
}

TEST(InstanceFileTest, DocumentLayout) {
  const auto doc = nlohmann::json::parse(SerializeInstance(TwoSensors()));
  EXPECT_EQ(doc.at("type"), "weighted_coverage");
  EXPECT_EQ(doc.at("cover"), nlohmann::json::parse("[[1],[1,2]]"));
  EXPECT_EQ(doc.at("weights").size(), 2u);
  const auto loc = nlohmann::json::parse(SerializeInstance(TinyLoc()));
  EXPECT_EQ(loc.at("type"), "facility_location");
  EXPECT_EQ(loc.at("g").size(), 2u);
  EXPECT_EQ(loc.at("g")[0].size(), 3u);
}

void ExpectFieldError(const std::string& text, const std::string& field) {
  try {
    ParseInstance(text);
    FAIL() << "expected a validation error for " << field;
  } catch (const InstanceError& e) {
    EXPECT_NE(std::string(e.what()).find("'" + field + "'"), std::string::npos)
        << e.what();
  }
}

TEST(InstanceFileTest, ValidationNamesTheField) {
  ExpectFieldError(
      R"({"type":"facility_location","n":3,"m":2,"k":4,"g":[[0,0,0],[0,0,0]]})", "k");
  ExpectFieldError(
      R"({"type":"weighted_coverage","n":2,"m":2,"k":1,"cover":[[1],[2]],"weights":[0.5,-0.1]})",
      "weights");
  ExpectFieldError(
      R"({"type":"facility_location","n":3,"m":2,"k":2,"g":[[0,0,-1],[0,0,0]]})", "g");
  ExpectFieldError(
      R"({"type":"weighted_coverage","n":2,"m":2,"k":1,"cover":[[1],[3]],"weights":[0.5,0.1]})",
      "cover");
  ExpectFieldError(R"({"type":"facility_location","m":2,"k":2,"g":[]})", "n");
  ExpectFieldError(R"({"type":"bogus","n":1,"m":1,"k":1})", "type");
  EXPECT_THROW(ParseInstance("{not json"), InstanceError);
}

}  // namespace
}  // namespace submodbb
