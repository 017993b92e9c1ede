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

#include "geometry.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "generators.h"
#include "test_util.h"
#include "wheel.h"
#include "wheel_config.h"

namespace planepack {
namespace {

using testing::Pts;
using testing::ReferenceCross;

TEST(OrientTest, Basic) {
  EXPECT_EQ(Orient({0, 0}, {1, 0}, {0, 1}), Orientation::kCounterClockwise);
  EXPECT_EQ(Orient({0, 0}, {0, 1}, {1, 0}), Orientation::kClockwise);
  EXPECT_EQ(Orient({0, 0}, {1, 1}, {2, 2}), Orientation::kCollinear);
}

TEST(OrientTest, ExtremeCoordinatesDoNotOverflow) {
  const std::int64_t m = kMaxCoordinate;
  EXPECT_EQ(Orient({-m, -m}, {m, m}, {m, m - 1}), Orientation::kClockwise);
  EXPECT_EQ(Orient({-m, -m}, {m, m}, {m - 1, m}),
            Orientation::kCounterClockwise);
  EXPECT_EQ(Orient({-m, -m}, {0, 0}, {m, m}), Orientation::kCollinear);
}

TEST(SegmentsCrossTest, SharedEndpointIsNotACrossing) {
  EXPECT_FALSE(SegmentsProperlyCross({0, 0}, {2, 2}, {0, 0}, {2, -1}));
  EXPECT_TRUE(SegmentsProperlyCross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  EXPECT_FALSE(SegmentsProperlyCross({0, 0}, {2, 2}, {3, 0}, {3, 5}));
  // T-junction: an endpoint touching the interior does not count.
  EXPECT_FALSE(SegmentsProperlyCross({0, 0}, {2, 2}, {1, 1}, {3, 0}));
}

TEST(SegmentsCrossTest, AgreesWithParametricReference) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-6, 6);
  for (int i = 0; i < 200000; ++i) {
    const Point a{c(rng), c(rng)}, b{c(rng), c(rng)}, p{c(rng), c(rng)},
        q{c(rng), c(rng)};
    if (a == b || p == q) continue;
    ASSERT_EQ(SegmentsProperlyCross(a, b, p, q), ReferenceCross(a, b, p, q))
        << a.x << "," << a.y << " " << b.x << "," << b.y << " / " << p.x << ","
        << p.y << " " << q.x << "," << q.y;
  }
}

TEST(PointSetTest, RejectsRepeatedPoint) {
  try {
    PointSet({{0, 0}, {1, 0}, {0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFormat);
  }
}

TEST(PointSetTest, RejectsOutOfRange) {
  try {
    PointSet({{0, 0}, {kMaxCoordinate + 1, 0}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFormat);
  }
}

TEST(PointSetTest, CollinearTripleIsNamed) {
  try {
    PointSet({{5, 5}, {0, 0}, {3, 7}, {2, 0}, {4, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGeneralPosition);
    const std::string what = e.what();
    EXPECT_NE(what.find("1"), std::string::npos);
    EXPECT_NE(what.find("3"), std::string::npos);
    EXPECT_NE(what.find("4"), std::string::npos);
  }
}

TEST(ConvexHullTest, MatchesTriangleContainmentReference) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto s = GenerateRandom(4 + seed % 12, seed, 200);
    std::vector<VertexId> hull = ConvexHull(*s);
    // Counterclockwise and starting at the lexicographically smallest point.
    const auto lowest = std::min_element(s->points().begin(), s->points().end());
    EXPECT_EQ(hull.front(), lowest - s->points().begin());
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const VertexId a = hull[i], b = hull[(i + 1) % hull.size()];
      for (VertexId c = 0; c < s->size(); ++c) {
        if (c != a && c != b) EXPECT_TRUE(s->LeftOf(a, b, c));
      }
    }
    std::sort(hull.begin(), hull.end());
    EXPECT_EQ(hull, testing::ReferenceHullVertices(*s)) << "seed " << seed;
  }
}

TEST(JEdgeTest, LexicographicallySmallestWithExactCount) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto s = GenerateRandom(5 + seed % 10, seed + 100, 1000);
    const std::size_t n = s->size();
    for (std::size_t j = 0; j + 2 <= n; ++j) {
      const JEdge e = FindJEdge(*s, j);
      EXPECT_EQ(e.left.size(), j);
      EXPECT_EQ(testing::ReferenceLeftCount(*s, e.u, e.v), j);
      for (VertexId x : e.left) EXPECT_TRUE(s->LeftOf(e.u, e.v, x));
      // Nothing smaller qualifies.
      bool earlier = false;
      for (VertexId u = 0; u < n && !earlier; ++u) {
        for (VertexId v = 0; v < n; ++v) {
          if (u == v) continue;
          if (std::pair(u, v) >= std::pair(e.u, e.v)) break;
          if (testing::ReferenceLeftCount(*s, u, v) == j) earlier = true;
        }
      }
      EXPECT_FALSE(earlier) << "seed " << seed << " j " << j;
    }
  }
}

TEST(JEdgeTest, ContainingVertex) {
  const auto s = GenerateRandom(20, 5, 1000);
  const std::size_t n = s->size();
  std::size_t found = 0;
  for (VertexId w = 0; w < n; ++w) {
    // Brute force: the smallest (u, v) with 7 points on the left, w among them.
    std::optional<std::pair<VertexId, VertexId>> want;
    for (VertexId u = 0; u < n && !want; ++u) {
      for (VertexId v = 0; v < n && !want; ++v) {
        if (u == v || w == u || w == v || !s->LeftOf(u, v, w)) continue;
        if (testing::ReferenceLeftCount(*s, u, v) == 7) want.emplace(u, v);
      }
    }
    try {
      const JEdge e = FindJEdgeContaining(*s, 7, w);
      ASSERT_TRUE(want.has_value()) << w;
      EXPECT_EQ(std::pair(e.u, e.v), *want);
      EXPECT_EQ(e.left.size(), 7u);
      EXPECT_TRUE(std::binary_search(e.left.begin(), e.left.end(), w));
      ++found;
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::kNotFound);
      EXPECT_FALSE(want.has_value()) << w;
    }
  }
  EXPECT_GT(found, 0u);
}

TEST(JEdgeTest, EmptySideContainsNothing) {
  const auto s = GenerateConvex(8);
  try {
    FindJEdgeContaining(*s, 0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
}

TEST(HalvingSplitTest, BalancedThroughMidpoints) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = GenerateRandom(6 + seed % 40, seed + 7);
    const HalfPoint pivot = HalfPoint::Midpoint((*s)[0], (*s)[1]);
    std::vector<VertexId> r;
    for (VertexId x = 2; x < s->size(); ++x) r.push_back(x);
    const Point uv{(*s)[1].x - (*s)[0].x, (*s)[1].y - (*s)[0].y};
    const HalvingLine line = HalvingSplit(*s, pivot, r, uv);
    EXPECT_EQ(line.left.size() + line.right.size(), r.size());
    const long diff = static_cast<long>(line.left.size()) -
                      static_cast<long>(line.right.size());
    // Two points collinear with the pivot can only shift the split by one.
    EXPECT_LE(std::abs(diff), 2) << "seed " << seed;
    EXPECT_NE(static_cast<__int128>(line.dx) * uv.y,
              static_cast<__int128>(line.dy) * uv.x);
    for (VertexId x : line.left) EXPECT_TRUE(line.SideOf((*s)[x]));
    for (VertexId x : line.right) EXPECT_FALSE(line.SideOf((*s)[x]));
    // The endpoints of the avoided segment fall on opposite sides.
    EXPECT_NE(line.SideOf((*s)[0]), line.SideOf((*s)[1]));
  }
}

TEST(HalvingSplitTest, PerfectWhenNoTwoPointsAlignWithPivot) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = GenerateRandom(3 + trial % 30, 500 + trial);
    const HalfPoint pivot{1, 1};  // (0.5, 0.5), below every generated point
    std::vector<VertexId> r(s->size());
    for (VertexId x = 0; x < s->size(); ++x) r[x] = x;
    const HalvingLine line = HalvingSplit(*s, pivot, r);
    const long diff = static_cast<long>(line.left.size()) -
                      static_cast<long>(line.right.size());
    EXPECT_LE(std::abs(diff), 1) << "trial " << trial;
  }
}

TEST(HalvingSplitTest, PivotOnPointRejected) {
  const auto s = Pts({{0, 0}, {4, 1}, {1, 5}});
  const std::vector<VertexId> r{0, 1, 2};
  try {
    HalvingSplit(*s, HalfPoint{0, 0}, r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(AngularOrderTest, MatchesAtan2) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = GenerateRandom(12, seed + 900);
    std::vector<VertexId> sub;
    for (VertexId x = 1; x < s->size(); ++x) sub.push_back(x);
    const std::vector<VertexId> got = AngularOrderClockwise(*s, 0, sub);
    auto angle = [&](VertexId x) {
      const double a = std::atan2(static_cast<double>((*s)[x].y - (*s)[0].y),
                                  static_cast<double>((*s)[x].x - (*s)[0].x));
      // Clockwise from the positive x-axis: 0 first, then decreasing angle.
      double cw = -a;
      if (cw < 0) cw += 2 * M_PI;
      return cw;
    };
    std::vector<VertexId> want = sub;
    std::sort(want.begin(), want.end(),
              [&](VertexId p, VertexId q) { return angle(p) < angle(q); });
    EXPECT_EQ(got, want) << "seed " << seed;
  }
}

TEST(WheelPredicateTest, AgreesWithCoordinates) {
  for (int half = 2; half <= 12; ++half) {
    const WheelCoordinates wc = ComputeWheelCoordinates(half, 1 << 24);
    ASSERT_TRUE(wc.orientation_exact) << half;
    const WheelConfig w(half);
    const std::size_t v = w.vertex_count();
    std::vector<EdgeRef> edges;
    for (VertexId a = 0; a < v; ++a) {
      for (VertexId b = a + 1; b < v; ++b) edges.push_back({a, b});
    }
    ASSERT_EQ(edges.size(), w.edge_count());
    for (const EdgeRef& e : edges) {
      for (const EdgeRef& f : edges) {
        const auto& p = wc.points;
        ASSERT_EQ(WheelCrossing(half, e, f),
                  ReferenceCross(p[e.a], p[e.b], p[f.a], p[f.b]))
            << "half " << half << " " << ToString(e) << " " << ToString(f);
      }
    }
  }
}

TEST(WheelPredicateTest, SmallExamples) {
  // Rim positions 0..4 are vertices 1..5 for n = 3.
  EXPECT_TRUE(WheelCrossing(3, {1, 3}, {2, 4}));
  // Chord between positions 1 and 4 cuts position 0 off from the hub but
  // leaves position 2 on the hub's side.
  EXPECT_TRUE(WheelCrossing(3, {0, 1}, {2, 5}));
  EXPECT_FALSE(WheelCrossing(3, {0, 3}, {2, 5}));
  const WheelConfig w(3);
  EXPECT_EQ(w.LengthClass({1, 2}), 1);
  EXPECT_EQ(w.LengthClass({1, 3}), 2);
  EXPECT_EQ(w.LengthClass({1, 5}), 1);
  EXPECT_EQ(w.LengthClass({1, 4}), 2);
}

TEST(WheelPredicateTest, HullIsTheRim) {
  const auto w = MakeWheel(4);
  const std::vector<VertexId> hull = ConvexHull(*w);
  EXPECT_EQ(hull.size(), 7u);
  EXPECT_EQ(hull.front(), 1u);
  for (std::size_t i = 0; i < hull.size(); ++i) EXPECT_EQ(hull[i], i + 1);
}

}  // namespace
}  // namespace planepack
