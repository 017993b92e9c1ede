// Copyright 2026 The planepack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crossing_family.h"

#include <gtest/gtest.h>

#include "generators.h"
#include "test_util.h"

namespace planepack {
namespace {

TEST(CrossingGraphTest, AdjacencyMatchesReference) {
  const auto s = GenerateRandom(9, 4, 500);
  const CrossingGraph g(*s);
  ASSERT_EQ(g.vertex_count(), 36u);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const EdgeRef e = g.edge(i);
    EXPECT_EQ(EdgeIndex(e, s->size()), i);
    for (std::size_t j = 0; j < g.vertex_count(); ++j) {
      const EdgeRef f = g.edge(j);
      const bool want = testing::ReferenceCross((*s)[e.a], (*s)[e.b],
                                                (*s)[f.a], (*s)[f.b]);
      EXPECT_EQ(g.Adjacent(i, j), want);
      if (j > i && want) ++pairs;
    }
  }
  EXPECT_EQ(g.AdjacentPairCount(), pairs);
}

TEST(CrossingGraphTest, ConvexPositionCrossingCount) {
  // Every 4-subset of points in convex position contributes one crossing.
  const auto s = GenerateConvex(9);
  EXPECT_EQ(CrossingGraph(*s).AdjacentPairCount(), 126u);
}

TEST(ExactFamilyTest, MatchesSubsetSearch) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto s = GenerateRandom(4 + seed % 5, seed * 31 + 1);
    const ExactFamilyOutcome out = MaxCrossingFamilyExact(*s, 100'000'000);
    ASSERT_TRUE(out.complete);
    EXPECT_TRUE(IsCrossingFamily(*s, out.family));
    EXPECT_EQ(out.family.size(), testing::ReferenceMaxCrossingFamily(*s))
        << "seed " << seed;
  }
}

TEST(ExactFamilyTest, ConvexPositionHasHalfN) {
  for (std::size_t n = 4; n <= 12; ++n) {
    const auto s = GenerateConvex(n);
    const ExactFamilyOutcome out = MaxCrossingFamilyExact(*s, 100'000'000);
    ASSERT_TRUE(out.complete);
    EXPECT_EQ(out.family.size(), n / 2);
    const CrossingFamily f = ConvexPositionFamily(*s);
    EXPECT_EQ(f.size(), n / 2);
    EXPECT_TRUE(IsCrossingFamily(*s, f));
  }
}

TEST(ExactFamilyTest, BudgetExhaustionIsReported) {
  const auto s = GenerateRandom(14, 3);
  const ExactFamilyOutcome out = MaxCrossingFamilyExact(*s, 5);
  EXPECT_FALSE(out.complete);
  EXPECT_TRUE(IsCrossingFamily(*s, out.family));
}

TEST(ExactFamilyTest, TargetSearch) {
  const auto s = GenerateRandom(12, 8);
  const ExactFamilyOutcome best = MaxCrossingFamilyExact(*s, 100'000'000);
  ASSERT_TRUE(best.complete);
  const std::size_t m = best.family.size();
  const ExactFamilyOutcome hit = FindCrossingFamilyOfSize(*s, m, 100'000'000);
  EXPECT_TRUE(hit.complete);
  EXPECT_EQ(hit.family.size(), m);
  EXPECT_TRUE(IsCrossingFamily(*s, hit.family));
  const ExactFamilyOutcome miss =
      FindCrossingFamilyOfSize(*s, m + 1, 100'000'000);
  EXPECT_TRUE(miss.complete);
  EXPECT_EQ(miss.family.size(), m);
}

TEST(GreedyFamilyTest, AlwaysAFamilyAndAtLeastHalfTheHull) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = GenerateRandom(4 + seed % 60, seed + 77);
    const CrossingFamily f = CrossingFamilyGreedy(*s, 0);
    EXPECT_TRUE(IsCrossingFamily(*s, f));
    EXPECT_GE(f.size(), ConvexHull(*s).size() / 2);
    EXPECT_TRUE(std::is_sorted(f.edges.begin(), f.edges.end()));
  }
}

TEST(GreedyFamilyTest, NeverBeatsExact) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto s = GenerateRandom(6 + seed % 6, seed + 300);
    const ExactFamilyOutcome out = MaxCrossingFamilyExact(*s, 100'000'000);
    ASSERT_TRUE(out.complete);
    EXPECT_LE(CrossingFamilyGreedy(*s, 0).size(), out.family.size());
  }
}

TEST(GreedyFamilyTest, TargetTruncates) {
  const auto s = GenerateConvex(10);
  EXPECT_EQ(CrossingFamilyGreedy(*s, 2).size(), 2u);
  EXPECT_EQ(CrossingFamilyGreedy(*s, 0).size(), 5u);
}

TEST(IsCrossingFamilyTest, RejectsTouchingEdges) {
  const auto s = GenerateConvex(6);
  EXPECT_TRUE(IsCrossingFamily(*s, {{{0, 3}, {1, 4}}}));
  EXPECT_FALSE(IsCrossingFamily(*s, {{{0, 3}, {0, 4}}}));
  EXPECT_FALSE(IsCrossingFamily(*s, {{{0, 1}, {2, 3}}}));
}

}  // namespace
}  // namespace planepack
