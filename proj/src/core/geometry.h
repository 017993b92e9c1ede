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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "common.h"

namespace planepack {

// |x|, |y| <= kMaxCoordinate keeps every orientation determinant well inside
// 128-bit signed arithmetic, including the doubled coordinates used by
// HalvingSplit.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const Point&) const = default;
};

enum class Orientation { kCounterClockwise, kClockwise, kCollinear };

// Sign of cross(b - a, c - a), exact.
Orientation Orient(const Point& a, const Point& b, const Point& c);

// True iff the open segments ab and cd share a point. Segments that share an
// endpoint never properly cross; collinear overlaps are not reported (they
// cannot occur in general position).
bool SegmentsProperlyCross(const Point& a, const Point& b, const Point& c,
                           const Point& d);

// An ordered set of distinct points in general position. Indices are vertex
// identities. A set may carry a wheel tag, in which case its coordinates are
// only a drawing aid and every predicate is answered combinatorially.
class PointSet {
 public:
  PointSet() = default;
  // Validates bounds, distinctness and general position (O(n^3)); throws
  // Error(kFormat) on repeated points or out-of-range coordinates and
  // Error(kGeneralPosition) naming the first collinear triple.
  explicit PointSet(std::vector<Point> points);

  // Regular wheel with `half` = n: hub is vertex 0, rim vertices 1..2n-1 in
  // counterclockwise order. `coordinates` are used for rendering only.
  static PointSet Wheel(int half, std::vector<Point> coordinates);

  std::size_t size() const { return points_.size(); }
  const Point& operator[](VertexId i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }
  std::optional<int> wheel_half() const { return wheel_half_; }

  Orientation Orient(VertexId a, VertexId b, VertexId c) const;
  bool EdgesCross(EdgeRef e, EdgeRef f) const;
  // Points strictly left of the directed line a->b.
  bool LeftOf(VertexId a, VertexId b, VertexId c) const {
    return Orient(a, b, c) == Orientation::kCounterClockwise;
  }

  bool operator==(const PointSet& o) const {
    return points_ == o.points_ && wheel_half_ == o.wheel_half_;
  }

 private:
  std::vector<Point> points_;
  std::optional<int> wheel_half_;
};

// Hull vertices in counterclockwise order, starting at the lexicographically
// smallest (x, y) point. Uses only Orient, so it is exact on wheel sets too.
std::vector<VertexId> ConvexHull(const PointSet& s);
std::vector<VertexId> ConvexHull(const PointSet& s,
                                 std::span<const VertexId> subset);

// A directed edge u->v with exactly left.size() points strictly on its left.
struct JEdge {
  VertexId u = 0;
  VertexId v = 0;
  std::vector<VertexId> left;  // ascending
};

// Lexicographically smallest directed (u, v) with exactly j points of the
// subset strictly left of u->v. Requires j <= |subset| - 2.
JEdge FindJEdge(const PointSet& s, std::size_t j);
JEdge FindJEdge(const PointSet& s, std::span<const VertexId> subset,
                std::size_t j);

// As FindJEdge, additionally requiring must_contain to be among the left
// points. Throws Error(kNotFound) when no such edge exists.
JEdge FindJEdgeContaining(const PointSet& s, std::size_t j,
                          VertexId must_contain);
JEdge FindJEdgeContaining(const PointSet& s, std::span<const VertexId> subset,
                          std::size_t j, VertexId must_contain);

// A point with half-integer coordinates, stored doubled.
struct HalfPoint {
  std::int64_t x2 = 0;
  std::int64_t y2 = 0;
  static HalfPoint Midpoint(const Point& a, const Point& b) {
    return {a.x + b.x, a.y + b.y};
  }
};

struct HalvingLine {
  HalfPoint pivot;
  std::int64_t dx = 0;  // direction of the line, in doubled units
  std::int64_t dy = 0;
  std::vector<VertexId> left;   // strictly left of pivot + t*(dx, dy)
  std::vector<VertexId> right;
  bool SideOf(const Point& p) const;  // true = left
};

// Line through `pivot` splitting r as evenly as any incidence-free direction
// allows: among the angular gaps of r around the pivot, the first one (from
// the positive x-axis) maximizing min(|left|, |right|). Throws
// Error(kInvalidArgument) if a point of r coincides with the pivot. The
// direction is never parallel to `avoid`.
HalvingLine HalvingSplit(const PointSet& s, HalfPoint pivot,
                         std::span<const VertexId> r,
                         std::optional<Point> avoid = std::nullopt);

// `subset` sorted clockwise around `center`, starting from the ray in the
// positive x-direction. Exact orientation comparisons only.
std::vector<VertexId> AngularOrderClockwise(const PointSet& s, VertexId center,
                                            std::span<const VertexId> subset);

}  // namespace planepack
