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

#include <gtest/gtest.h>

#include <stdexcept>

#include "submodbb/instances.hpp"
#include "test_util.hpp"

namespace submodbb {
namespace {

using testing::FromMask;
using testing::One;
using testing::TinyLoc;

TEST(SolutionTest, OneBasedRoundTrip) {
  const Solution s = One({1, 3, 200});
  EXPECT_EQ(s.ToOneBased(), (std::vector<int>{1, 3, 200}));
  EXPECT_EQ(s.Size(), 3);
  EXPECT_EQ(s.Max(), 199);
  EXPECT_EQ(s.ToString(), "{1,3,200}");
  EXPECT_THROW(Solution::FromOneBased({0}), std::out_of_range);
  EXPECT_EQ(Solution{}.Max(), -1);
}

TEST(SolutionTest, SetAlgebra) {
  const Solution a = One({1, 2, 3});
  const Solution b = One({2, 4});
  EXPECT_EQ(a | b, One({1, 2, 3, 4}));
  EXPECT_EQ(a & b, One({2}));
  EXPECT_EQ(a - b, One({1, 3}));
  EXPECT_TRUE(One({2}).IsSubsetOf(a));
  EXPECT_FALSE(b.IsSubsetOf(a));
  EXPECT_TRUE(a.Intersects(b));
  EXPECT_EQ(Solution::Full(3), a);
}

TEST(SolutionTest, LexCompareMatchesSortedSequences) {
  for (std::uint64_t x = 0; x < 64; ++x) {
    for (std::uint64_t y = 0; y < 64; ++y) {
      const Solution a = FromMask(x);
      const Solution b = FromMask(y);
      const auto ea = a.Elements();
      const auto eb = b.Elements();
      const bool less = std::lexicographical_compare(ea.begin(), ea.end(),
                                                     eb.begin(), eb.end());
      EXPECT_EQ(a.LexCompare(b) < 0, less) << a.ToString() << " vs " << b.ToString();
    }
  }
}

TEST(OracleTest, TinyLocValues) {
  FacilityLocationOracle f(TinyLoc());
  EXPECT_DOUBLE_EQ(f.Value({}), 0.0);
  EXPECT_NEAR(f.Value(One({1})), 0.6, 1e-12);
  EXPECT_NEAR(f.Value(One({2})), 0.8, 1e-12);
  EXPECT_NEAR(f.Value(One({3})), 0.7, 1e-12);
  EXPECT_NEAR(f.Value(One({1, 2})), 1.1, 1e-12);
  EXPECT_NEAR(f.Value(One({1, 3})), 0.8, 1e-12);
  EXPECT_NEAR(f.Value(One({2, 3})), 1.0, 1e-12);
  EXPECT_NEAR(f.Value(One({1, 2, 3})), 1.1, 1e-12);
}

TEST(OracleTest, OutOfRangeIsAnError) {
  FacilityLocationOracle f(TinyLoc());
  EXPECT_THROW(f.Value(One({4})), std::out_of_range);
  EXPECT_THROW(MarginalGain(f, 3, Solution{}), std::out_of_range);
}

TEST(OracleTest, MarginalGain) {
  FacilityLocationOracle f(TinyLoc());
  EXPECT_NEAR(MarginalGain(f, 1, One({1})), 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(MarginalGain(f, 0, One({1})), 0.0);
  EXPECT_NEAR(MarginalGain(f, 2, One({1, 2})), 0.0, 1e-12);
}

TEST(OracleTest, BatchValuesMatchSingleValues) {
  for (bool loc : {true, false}) {
    const Instance inst = testing::RandomInstance(loc, 10, 3, 17);
    const auto f = MakeOracle(inst);
    const Solution s = One({2, 5, 9});
    const std::vector<Element> cands = (Solution::Full(10) - s).Elements();
    std::vector<double> out(cands.size());
    f->ValuesWith(s, cands, out);
    for (std::size_t t = 0; t < cands.size(); ++t) {
      EXPECT_EQ(out[t], f->Value(s.With(cands[t])));
    }
  }
}

TEST(VerifyOracleTest, TinyLocSatisfiesAllProperties) {
  FacilityLocationOracle f(TinyLoc());
  const OracleReport r = VerifyOracle(f);
  EXPECT_TRUE(r.is_normalized);
  EXPECT_TRUE(r.is_nondecreasing);
  EXPECT_TRUE(r.is_submodular);
  EXPECT_FALSE(r.counterexample.has_value());
}

TEST(VerifyOracleTest, SquaredCardinalityIsNotSubmodular) {
  FunctionOracle f(3, [](const Solution& s) { return double(s.Size() * s.Size()); });
  const OracleReport r = VerifyOracle(f);
  EXPECT_TRUE(r.is_normalized);
  EXPECT_TRUE(r.is_nondecreasing);
  EXPECT_FALSE(r.is_submodular);
  ASSERT_TRUE(r.counterexample.has_value());
  const auto& [s, t] = *r.counterexample;
  EXPECT_LT(f.Value(s) + f.Value(t), f.Value(s & t) + f.Value(s | t));
}

TEST(VerifyOracleTest, ZeroFunctionSatisfiesAllProperties) {
  FunctionOracle f(4, [](const Solution&) { return 0.0; });
  EXPECT_TRUE(VerifyOracle(f).ok());
}

TEST(VerifyOracleTest, DetectsNonNormalizedAndDecreasing) {
  FunctionOracle shifted(3, [](const Solution& s) { return 1.0 + s.Size(); });
  EXPECT_FALSE(VerifyOracle(shifted).is_normalized);
  FunctionOracle decreasing(3, [](const Solution& s) { return -double(s.Size()); });
  const OracleReport r = VerifyOracle(decreasing);
  EXPECT_FALSE(r.is_nondecreasing);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_GT(decreasing.Value(r.counterexample->first),
            decreasing.Value(r.counterexample->second));
}

TEST(VerifyOracleTest, RefusesAboveCap) {
  FunctionOracle f(17, [](const Solution&) { return 0.0; });
  EXPECT_THROW(VerifyOracle(f), std::invalid_argument);
  EXPECT_NO_THROW(VerifyOracle(f, 17));
}

TEST(VerifyOracleTest, GeneratedInstancesAreMonotoneSubmodular) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (bool loc : {true, false}) {
      const int n = 4 + static_cast<int>(seed % 7);
      const auto f = MakeOracle(testing::RandomInstance(loc, n, 2, seed));
      EXPECT_TRUE(VerifyOracle(*f).ok()) << "seed " << seed << " loc " << loc;
    }
  }
}

TEST(VerifyOracleTest, DiminishingReturns) {
  const auto f = MakeOracle(GenerateLoc(8, 9, 3, 5));
  for (std::uint64_t t = 0; t < 256; ++t) {
    for (std::uint64_t s = t; ; s = (s - 1) & t) {
      for (Element i = 0; i < 8; ++i) {
        EXPECT_GE(MarginalGain(*f, i, FromMask(s)) + 1e-12,
                  MarginalGain(*f, i, FromMask(t)));
      }
      if (s == 0) break;
    }
  }
}

TEST(MemoOracleTest, ExtensionallyEqual) {
  const auto f = MakeOracle(GenerateCov(10, 11, 3, 0.3, 2));
  MemoOracle memo(*f);
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    EXPECT_EQ(memo.Value(FromMask(mask)), f->Value(FromMask(mask)));
    EXPECT_EQ(memo.Value(FromMask(mask)), f->Value(FromMask(mask)));
  }
  EXPECT_EQ(memo.misses(), 1024u);
  EXPECT_EQ(memo.hits(), 1024u);
}

TEST(MemoOracleTest, LruCapEvictsOldest) {
  FacilityLocationOracle f(TinyLoc());
  MemoOracle memo(f, 2);
  memo.Value(One({1}));
  memo.Value(One({2}));
  memo.Value(One({1}));  // refresh {1}
  memo.Value(One({3}));  // evicts {2}
  EXPECT_EQ(memo.size(), 2u);
  const auto misses = memo.misses();
  memo.Value(One({1}));
  EXPECT_EQ(memo.misses(), misses);
  memo.Value(One({2}));
  EXPECT_EQ(memo.misses(), misses + 1);
}

TEST(CountingOracleTest, CountsDistinctAndTotal) {
  FacilityLocationOracle f(TinyLoc());
  auto counted = WithCounter(f);
  counted->Value(One({2}));
  counted->Value(One({2}));
  EXPECT_EQ(counted->counter().distinct_evals, 1u);
  EXPECT_EQ(counted->counter().total_requests, 2u);
  counted->Reset();
  counted->Value(One({2}));
  counted->Value(One({1, 2}));
  EXPECT_EQ(counted->counter().distinct_evals, 2u);
  EXPECT_NEAR(counted->Value(One({1, 2})), 1.1, 1e-12);
  EXPECT_LE(counted->counter().distinct_evals, counted->counter().total_requests);
}

TEST(CountingOracleTest, BatchCountsEachCandidate) {
  FacilityLocationOracle f(TinyLoc());
  CountingOracle counted(f);
  const std::vector<Element> cands = {0, 1, 2};
  std::vector<double> out(3);
  counted.ValuesWith(Solution{}, cands, out);
  EXPECT_EQ(counted.counter().total_requests, 3u);
  EXPECT_EQ(counted.counter().distinct_evals, 3u);
  counted.Value(One({2}));
  EXPECT_EQ(counted.counter().distinct_evals, 3u);
}

}  // namespace
}  // namespace submodbb
