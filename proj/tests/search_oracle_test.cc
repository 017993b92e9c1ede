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

#include "search_oracle.h"

#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "constructions.h"
#include "generators.h"
#include "test_util.h"

namespace planepack {
namespace {

using testing::Pts;

// Every labelled tree on n vertices (Pruefer decoding), kept if plane.
std::set<std::vector<EdgeRef>> PlaneTreesByPruefer(const PointSet& s) {
  const std::size_t n = s.size();
  std::set<std::vector<EdgeRef>> out;
  std::vector<VertexId> code(n - 2, 0);
  while (true) {
    std::vector<std::size_t> degree(n, 1);
    for (VertexId c : code) ++degree[c];
    std::vector<EdgeRef> edges;
    for (VertexId c : code) {
      VertexId leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back(EdgeRef::Make(leaf, c));
      --degree[leaf];
      --degree[c];
    }
    std::vector<VertexId> last;
    for (VertexId v = 0; v < n; ++v) {
      if (degree[v] == 1) last.push_back(v);
    }
    edges.push_back(EdgeRef::Make(last[0], last[1]));
    std::sort(edges.begin(), edges.end());
    if (testing::ReferencePlaneSpanningTree(s, edges)) out.insert(edges);
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  return out;
}

bool IsPath(std::size_t n, const std::vector<EdgeRef>& edges) {
  for (std::size_t d : testing::Degrees(n, edges)) {
    if (d > 2) return false;
  }
  return true;
}

TEST(MaskTest, RoundTrip) {
  const std::vector<EdgeRef> e{{0, 1}, {2, 7}, {9, 10}};
  EXPECT_EQ(EdgesOf(MaskOf(e, 11), 11), e);
}

TEST(EnumerateTest, TreesMatchPrueferEnumeration) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto s = GenerateRandom(4 + seed % 4, seed + 10, 100);
    const auto want = PlaneTreesByPruefer(*s);
    const std::vector<EdgeMask> got = EnumeratePlaneSpanningTreeMasks(*s);
    ASSERT_EQ(got.size(), want.size()) << "seed " << seed;
    std::size_t i = 0;
    for (const auto& t : want) EXPECT_EQ(EdgesOf(got[i++], s->size()), t);
  }
}

TEST(EnumerateTest, PathsAreTheDegreeTwoTrees) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto s = GenerateRandom(4 + seed % 4, seed + 20, 100);
    std::vector<std::vector<EdgeRef>> want;
    for (const auto& t : PlaneTreesByPruefer(*s)) {
      if (IsPath(s->size(), t)) want.push_back(t);
    }
    const std::vector<EdgeMask> got = EnumeratePlaneSpanningPathMasks(*s);
    ASSERT_EQ(got.size(), want.size()) << "seed " << seed;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(EdgesOf(got[i], s->size()), want[i]);
    }
  }
}

TEST(EnumerateTest, ConvexQuadrilateral) {
  // 16 labelled trees on four vertices; the 4 using both diagonals cross.
  const auto s = GenerateConvex(4);
  EXPECT_EQ(EnumeratePlaneSpanningTreeMasks(*s).size(), 12u);
}

TEST(OracleTest, ThreePoints) {
  const auto s = Pts({{0, 0}, {5, 1}, {2, 4}});
  EXPECT_EQ(EnumeratePlaneSpanningTreeMasks(*s).size(), 3u);
  const OracleOutcome t = MaxTreePackingExact(s, 1000);
  EXPECT_TRUE(t.complete);
  EXPECT_EQ(t.maximum, 1u);
}

TEST(OracleTest, SixPointsPackThreeTrees) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = GenerateRandom(6, seed + 400);
    const OracleOutcome t = MaxTreePackingExact(s, 100'000'000);
    ASSERT_TRUE(t.complete);
    EXPECT_EQ(t.maximum, 3u);
    EXPECT_EQ(t.witness.size(), 3u);
    EXPECT_TRUE(VerifyPacking(t.witness, false).AllRequiredOk());
  }
}

TEST(OracleTest, FourAndFivePointsPackTwo) {
  for (std::size_t n : {4u, 5u}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto s = GenerateRandom(n, seed + 410);
      const OracleOutcome t = MaxTreePackingExact(s, 100'000'000);
      ASSERT_TRUE(t.complete);
      EXPECT_EQ(t.maximum, 2u);
      const OracleOutcome p = MaxPathPackingExact(s, 100'000'000);
      ASSERT_TRUE(p.complete);
      EXPECT_GE(p.maximum, 2u);
      EXPECT_LE(p.maximum, t.maximum);
      for (const GraphStructure& m : p.witness.members()) {
        EXPECT_EQ(m.kind, StructureKind::kPath);
      }
      EXPECT_TRUE(VerifyPacking(p.witness, false).AllRequiredOk());
    }
  }
}

TEST(OracleTest, InvariantUnderRelabeling) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto s = GenerateRandom(7, seed + 420);
    std::vector<Point> pts(s->points().begin(), s->points().end());
    std::reverse(pts.begin(), pts.end());
    std::rotate(pts.begin(), pts.begin() + 2, pts.end());
    const auto t = Pts(pts);
    EXPECT_EQ(MaxTreePackingExact(s, 100'000'000).maximum,
              MaxTreePackingExact(t, 100'000'000).maximum);
    EXPECT_EQ(MaxPathPackingExact(s, 100'000'000).maximum,
              MaxPathPackingExact(t, 100'000'000).maximum);
  }
}

TEST(OracleTest, ShuffledBranchOrderGivesSameMaximum) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto s = GenerateRandom(7, seed + 430);
    const OracleOutcome base = MaxTreePackingExact(s, 100'000'000);
    const OracleOutcome shuffled = MaxTreePackingExact(s, 100'000'000, seed);
    ASSERT_TRUE(base.complete && shuffled.complete);
    EXPECT_EQ(base.maximum, shuffled.maximum);
  }
}

TEST(OracleTest, BudgetExhaustion) {
  const auto s = GenerateRandom(9, 5);
  const OracleOutcome t = MaxTreePackingExact(s, 3);
  EXPECT_FALSE(t.complete);
  EXPECT_TRUE(VerifyPacking(t.witness, false).AllRequiredOk());
}

TEST(OracleTest, ConstructionsNeverExceedTheMaximum) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = GenerateRandom(6, seed + 440);
    const std::size_t trees = MaxTreePackingExact(s, 100'000'000).maximum;
    const std::size_t paths = MaxPathPackingExact(s, 100'000'000).maximum;
    EXPECT_LE(TwoTrees(s).packing.size(), trees);
    EXPECT_LE(ThreeTrees(s).packing.size(), trees);
    EXPECT_LE(DoubleStarPack(s, CrossingFamilyGreedy(*s, 0)).size(), trees);
    EXPECT_LE(TwoPaths(s).packing.size(), paths);
  }
}

TEST(OracleTest, SizeLimits) {
  try {
    MaxTreePackingExact(GenerateRandom(12, 1), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  try {
    MaxTreePackingExact(Pts({{0, 0}}), 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewPoints);
  }
}

}  // namespace
}  // namespace planepack
