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
#include <numeric>
#include <string>
#include <tuple>

#include "wheel_config.h"

namespace planepack {

namespace {

using Wide = __int128;

Wide Cross(Wide ax, Wide ay, Wide bx, Wide by) { return ax * by - ay * bx; }

Orientation SignToOrientation(Wide v) {
  if (v > 0) return Orientation::kCounterClockwise;
  if (v < 0) return Orientation::kClockwise;
  return Orientation::kCollinear;
}

std::string Describe(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Direction vector normalized into the half-open upper half plane, so that
// opposite rays map to the same line direction.
Point UpperHalf(Point d) {
  if (d.y < 0 || (d.y == 0 && d.x < 0)) return {-d.x, -d.y};
  return d;
}

std::vector<VertexId> AllVertices(const PointSet& s) {
  std::vector<VertexId> all(s.size());
  std::iota(all.begin(), all.end(), VertexId{0});
  return all;
}

}  // namespace

std::string ToString(const EdgeRef& e) {
  return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

Orientation Orient(const Point& a, const Point& b, const Point& c) {
  return SignToOrientation(Cross(Wide{b.x} - a.x, Wide{b.y} - a.y,
                                 Wide{c.x} - a.x, Wide{c.y} - a.y));
}

bool SegmentsProperlyCross(const Point& a, const Point& b, const Point& c,
                           const Point& d) {
  if (a == c || a == d || b == c || b == d) return false;
  const Orientation o1 = Orient(a, b, c);
  const Orientation o2 = Orient(a, b, d);
  const Orientation o3 = Orient(c, d, a);
  const Orientation o4 = Orient(c, d, b);
  if (o1 == Orientation::kCollinear || o2 == Orientation::kCollinear ||
      o3 == Orientation::kCollinear || o4 == Orientation::kCollinear) {
    return false;
  }
  return o1 != o2 && o3 != o4;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = points_[i];
    if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate ||
        p.y > kMaxCoordinate || p.y < -kMaxCoordinate) {
      throw Error(ErrorCode::kFormat, "point " + std::to_string(i) + " " +
                                          Describe(p) +
                                          " exceeds the coordinate bound 2^30");
    }
  }
  std::vector<VertexId> order = AllVertices(*this);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return std::tie(points_[a], a) < std::tie(points_[b], b);
  });
  for (std::size_t i = 1; i < n; ++i) {
    if (points_[order[i - 1]] == points_[order[i]]) {
      throw Error(ErrorCode::kFormat,
                  "repeated point " + Describe(points_[order[i]]) +
                      " at indices " + std::to_string(order[i - 1]) + " and " +
                      std::to_string(order[i]));
    }
  }
  // Collinearity scan: sort directions from each point and compare
  // neighbours, O(n^2 log n).
  std::vector<std::pair<Point, VertexId>> dirs;
  for (VertexId i = 0; i < n; ++i) {
    dirs.clear();
    for (VertexId j = i + 1; j < n; ++j) {
      dirs.push_back({UpperHalf({points_[j].x - points_[i].x,
                                 points_[j].y - points_[i].y}),
                      j});
    }
    std::sort(dirs.begin(), dirs.end(), [](const auto& l, const auto& r) {
      const Wide c = Cross(l.first.x, l.first.y, r.first.x, r.first.y);
      if (c != 0) return c > 0;
      return l.second < r.second;
    });
    for (std::size_t t = 1; t < dirs.size(); ++t) {
      const Point& d0 = dirs[t - 1].first;
      const Point& d1 = dirs[t].first;
      if (Cross(d0.x, d0.y, d1.x, d1.y) == 0) {
        const VertexId j = std::min(dirs[t - 1].second, dirs[t].second);
        const VertexId k = std::max(dirs[t - 1].second, dirs[t].second);
        throw Error(ErrorCode::kGeneralPosition,
                    "collinear triple (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + "): " +
                        Describe(points_[i]) + " " + Describe(points_[j]) +
                        " " + Describe(points_[k]));
      }
    }
  }
}

PointSet PointSet::Wheel(int half, std::vector<Point> coordinates) {
  const WheelConfig cfg(half);
  if (coordinates.size() != cfg.vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "wheel coordinates must list 2n points");
  }
  PointSet s;
  s.points_ = std::move(coordinates);
  s.wheel_half_ = half;
  return s;
}

Orientation PointSet::Orient(VertexId a, VertexId b, VertexId c) const {
  if (wheel_half_) return WheelOrient(*wheel_half_, a, b, c);
  return planepack::Orient(points_[a], points_[b], points_[c]);
}

bool PointSet::EdgesCross(EdgeRef e, EdgeRef f) const {
  if (wheel_half_) return WheelCrossing(*wheel_half_, e, f);
  return SegmentsProperlyCross(points_[e.a], points_[e.b], points_[f.a],
                               points_[f.b]);
}

std::vector<VertexId> ConvexHull(const PointSet& s) {
  const std::vector<VertexId> all = AllVertices(s);
  return ConvexHull(s, all);
}

std::vector<VertexId> ConvexHull(const PointSet& s,
                                 std::span<const VertexId> subset) {
  if (subset.empty()) return {};
  VertexId start = subset.front();
  if (s.wheel_half()) {
    // Any rim vertex is extreme; the hub only when no rim vertex is given.
    for (VertexId v : subset) {
      if (v != WheelConfig::kHub) {
        start = v;
        break;
      }
    }
    for (VertexId v : subset) {
      if (v != WheelConfig::kHub && v < start) start = v;
    }
  } else {
    for (VertexId v : subset) {
      if (s[v] < s[start]) start = v;
    }
  }
  std::vector<VertexId> hull{start};
  if (subset.size() == 1) return hull;
  VertexId current = start;
  while (true) {
    VertexId next = current == subset.front() ? subset[1] : subset.front();
    for (VertexId w : subset) {
      if (w == current || w == next) continue;
      if (s.Orient(current, next, w) == Orientation::kClockwise) next = w;
    }
    if (next == start) break;
    hull.push_back(next);
    current = next;
    if (hull.size() > subset.size()) {
      throw Error(ErrorCode::kGeneralPosition, "hull walk did not close");
    }
  }
  return hull;
}

JEdge FindJEdge(const PointSet& s, std::size_t j) {
  const std::vector<VertexId> all = AllVertices(s);
  return FindJEdge(s, all, j);
}

namespace {

JEdge SearchJEdge(const PointSet& s, std::span<const VertexId> subset,
                  std::size_t j, std::optional<VertexId> must_contain) {
  std::vector<VertexId> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 2 || j + 2 > sorted.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "j-edge needs 0 <= j <= n-2 (j=" + std::to_string(j) +
                    ", n=" + std::to_string(sorted.size()) + ")");
  }
  for (VertexId u : sorted) {
    if (must_contain && u == *must_contain) continue;
    for (VertexId v : sorted) {
      if (v == u || (must_contain && v == *must_contain)) continue;
      if (must_contain && !s.LeftOf(u, v, *must_contain)) continue;
      std::size_t count = 0;
      for (VertexId w : sorted) {
        if (w != u && w != v && s.LeftOf(u, v, w) && ++count > j) break;
      }
      if (count != j) continue;
      JEdge edge{u, v, {}};
      for (VertexId w : sorted) {
        if (w != u && w != v && s.LeftOf(u, v, w)) edge.left.push_back(w);
      }
      return edge;
    }
  }
  throw Error(ErrorCode::kNotFound,
              "no " + std::to_string(j) + "-edge" +
                  (must_contain ? " with vertex " +
                                      std::to_string(*must_contain) +
                                      " on its left"
                                : std::string()));
}

}  // namespace

JEdge FindJEdge(const PointSet& s, std::span<const VertexId> subset,
                std::size_t j) {
  return SearchJEdge(s, subset, j, std::nullopt);
}

JEdge FindJEdgeContaining(const PointSet& s, std::size_t j,
                          VertexId must_contain) {
  const std::vector<VertexId> all = AllVertices(s);
  return FindJEdgeContaining(s, all, j, must_contain);
}

JEdge FindJEdgeContaining(const PointSet& s, std::span<const VertexId> subset,
                          std::size_t j, VertexId must_contain) {
  if (std::find(subset.begin(), subset.end(), must_contain) == subset.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "must_contain vertex is not in the subset");
  }
  return SearchJEdge(s, subset, j, must_contain);
}

bool HalvingLine::SideOf(const Point& p) const {
  return Cross(dx, dy, Wide{2} * p.x - pivot.x2, Wide{2} * p.y - pivot.y2) > 0;
}

HalvingLine HalvingSplit(const PointSet& s, HalfPoint pivot,
                         std::span<const VertexId> r,
                         std::optional<Point> avoid) {
  HalvingLine line;
  line.pivot = pivot;
  line.dx = 1;
  line.dy = 0;
  if (avoid && avoid->y == 0) {
    line.dx = 0;
    line.dy = 1;
  }
  if (r.empty()) return line;

  struct Ray {
    Point dir;  // upper-half normalized
    VertexId id;
  };
  std::vector<Ray> rays;
  rays.reserve(r.size());
  for (VertexId id : r) {
    const Point d{2 * s[id].x - pivot.x2, 2 * s[id].y - pivot.y2};
    if (d.x == 0 && d.y == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "point " + std::to_string(id) + " coincides with the pivot");
    }
    rays.push_back({UpperHalf(d), id});
  }
  std::stable_sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) {
    return Cross(a.dir.x, a.dir.y, b.dir.x, b.dir.y) > 0;
  });
  std::vector<Point> groups;
  for (const Ray& ray : rays) {
    if (groups.empty() ||
        Cross(groups.back().x, groups.back().y, ray.dir.x, ray.dir.y) != 0) {
      groups.push_back(ray.dir);
    }
  }

  // Each candidate lies strictly inside one angular gap; `alt` is a second
  // direction in the same gap, used when `primary` is parallel to `avoid`.
  struct Candidate {
    Point primary;
    Point alt;
  };
  std::vector<Candidate> candidates;
  if (groups.size() == 1) {
    const Point g = groups[0];
    candidates.push_back({{-g.y, g.x}, {g.x - g.y, g.y + g.x}});
  } else {
    for (std::size_t i = 0; i + 1 < groups.size(); ++i) {
      const Point a = groups[i];
      const Point b = groups[i + 1];
      candidates.push_back({{a.x + b.x, a.y + b.y}, {2 * a.x + b.x, 2 * a.y + b.y}});
    }
    const Point a = groups.back();
    const Point b = groups[0];
    candidates.push_back({{a.x - b.x, a.y - b.y}, {2 * a.x - b.x, 2 * a.y - b.y}});
  }

  std::size_t best_balance = 0;
  bool have_best = false;
  for (const Candidate& c : candidates) {
    Point w = c.primary;
    if (avoid && Cross(w.x, w.y, avoid->x, avoid->y) == 0) w = c.alt;
    HalvingLine trial{pivot, w.x, w.y, {}, {}};
    std::size_t left = 0;
    for (VertexId id : r) left += trial.SideOf(s[id]) ? 1 : 0;
    const std::size_t balance = std::min(left, r.size() - left);
    if (!have_best || balance > best_balance) {
      have_best = true;
      best_balance = balance;
      line.dx = w.x;
      line.dy = w.y;
    }
  }
  for (VertexId id : r) {
    (line.SideOf(s[id]) ? line.left : line.right).push_back(id);
  }
  std::sort(line.left.begin(), line.left.end());
  std::sort(line.right.begin(), line.right.end());
  return line;
}

std::vector<VertexId> AngularOrderClockwise(const PointSet& s, VertexId center,
                                            std::span<const VertexId> subset) {
  const Point& c = s[center];
  // Clockwise angle from the +x ray lies in [0, pi) for the lower half.
  auto lower = [&](VertexId v) {
    const std::int64_t dx = s[v].x - c.x;
    const std::int64_t dy = s[v].y - c.y;
    return dy < 0 || (dy == 0 && dx > 0);
  };
  std::vector<VertexId> out(subset.begin(), subset.end());
  for (VertexId v : out) {
    if (v == center) {
      throw Error(ErrorCode::kInvalidArgument,
                  "angular order: center must not be in the subset");
    }
  }
  std::sort(out.begin(), out.end(), [&](VertexId a, VertexId b) {
    const bool la = lower(a);
    const bool lb = lower(b);
    if (la != lb) return la;
    return s.Orient(center, a, b) == Orientation::kClockwise;
  });
  return out;
}

}  // namespace planepack
