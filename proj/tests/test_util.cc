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

#include "test_util.h"

#include <algorithm>
#include <numeric>

namespace planepack::testing {

namespace {

using I128 = __int128;

I128 Cross(Point o, Point a, Point b) {
  return static_cast<I128>(a.x - o.x) * (b.y - o.y) -
         static_cast<I128>(a.y - o.y) * (b.x - o.x);
}

bool InTriangle(Point p, Point a, Point b, Point c) {
  const I128 d1 = Cross(a, b, p);
  const I128 d2 = Cross(b, c, p);
  const I128 d3 = Cross(c, a, p);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

struct Dsu {
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool Unite(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::shared_ptr<const PointSet> Pts(std::vector<Point> points) {
  return std::make_shared<const PointSet>(std::move(points));
}

bool ReferenceCross(Point a, Point b, Point c, Point d) {
  // a + t(b - a) = c + u(d - c); t = tn / den, u = un / den.
  const I128 rx = b.x - a.x, ry = b.y - a.y;
  const I128 sx = d.x - c.x, sy = d.y - c.y;
  const I128 den = rx * sy - ry * sx;
  if (den == 0) return false;
  const I128 qx = c.x - a.x, qy = c.y - a.y;
  I128 tn = qx * sy - qy * sx;
  I128 un = qx * ry - qy * rx;
  I128 dd = den;
  if (dd < 0) {
    dd = -dd;
    tn = -tn;
    un = -un;
  }
  return tn > 0 && tn < dd && un > 0 && un < dd;
}

std::vector<VertexId> ReferenceHullVertices(const PointSet& s) {
  const std::size_t n = s.size();
  std::vector<VertexId> out;
  for (VertexId p = 0; p < n; ++p) {
    bool inside = false;
    for (VertexId a = 0; a < n && !inside; ++a) {
      for (VertexId b = a + 1; b < n && !inside; ++b) {
        for (VertexId c = b + 1; c < n && !inside; ++c) {
          if (p == a || p == b || p == c) continue;
          inside = InTriangle(s[p], s[a], s[b], s[c]);
        }
      }
    }
    if (!inside) out.push_back(p);
  }
  return out;
}

std::size_t ReferenceLeftCount(const PointSet& s, VertexId a, VertexId b) {
  std::size_t count = 0;
  for (VertexId c = 0; c < s.size(); ++c) {
    if (Cross(s[a], s[b], s[c]) > 0) ++count;
  }
  return count;
}

bool ReferencePlaneSpanningTree(const PointSet& s,
                                const std::vector<EdgeRef>& edges) {
  const std::size_t n = s.size();
  if (edges.size() != n - 1) return false;
  Dsu dsu(n);
  for (const EdgeRef& e : edges) {
    if (e.a >= n || e.b >= n || e.a == e.b) return false;
    if (!dsu.Unite(e.a, e.b)) return false;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const EdgeRef& e = edges[i];
      const EdgeRef& f = edges[j];
      if (ReferenceCross(s[e.a], s[e.b], s[f.a], s[f.b])) return false;
    }
  }
  return true;
}

std::size_t ReferenceMaxCrossingFamily(const PointSet& s) {
  std::vector<EdgeRef> all;
  for (VertexId a = 0; a < s.size(); ++a) {
    for (VertexId b = a + 1; b < s.size(); ++b) all.push_back({a, b});
  }
  std::size_t best = 0;
  std::vector<EdgeRef> chosen;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, chosen.size());
    for (std::size_t i = from; i < all.size(); ++i) {
      const EdgeRef& e = all[i];
      bool ok = true;
      for (const EdgeRef& f : chosen) {
        if (!ReferenceCross(s[e.a], s[e.b], s[f.a], s[f.b])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(e);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

std::vector<EdgeRef> RandomTree(std::size_t n, std::mt19937_64& rng) {
  if (n < 2) return {};
  if (n == 2) return {EdgeRef{0, 1}};
  std::vector<VertexId> code(n - 2);
  for (VertexId& c : code) c = static_cast<VertexId>(rng() % n);
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
  return edges;
}

std::vector<std::size_t> Degrees(std::size_t n,
                                 const std::vector<EdgeRef>& edges) {
  std::vector<std::size_t> d(n, 0);
  for (const EdgeRef& e : edges) {
    ++d[e.a];
    ++d[e.b];
  }
  return d;
}

}  // namespace planepack::testing
