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

#include "constructions.h"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <string>

namespace planepack {

namespace {

GraphStructure Member(StructureKind kind, std::vector<EdgeRef> edges) {
  if (kind != StructureKind::kPath) std::sort(edges.begin(), edges.end());
  return GraphStructure{kind, std::move(edges)};
}

std::vector<EdgeRef> PathEdges(const std::vector<VertexId>& order) {
  std::vector<EdgeRef> edges;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    edges.push_back(EdgeRef::Make(order[i], order[i + 1]));
  }
  return edges;
}

void CheckOrThrow(const Packing& p, const char* what) {
  const VerificationReport report = VerifyPacking(p, false);
  if (!report.AllRequiredOk()) {
    throw Error(ErrorCode::kConstructionFailed,
                std::string(what) + " produced an invalid packing:\n" +
                    report.Format());
  }
}

void RequireSize(const PointSet& s, std::size_t n, const char* what) {
  if (s.size() < n) {
    throw Error(ErrorCode::kTooFewPoints,
                std::string(what) + " needs at least " + std::to_string(n) +
                    " points, got " + std::to_string(s.size()));
  }
}

bool InTriangle(const PointSet& s, VertexId a, VertexId b, VertexId c,
                VertexId t) {
  return s.LeftOf(a, b, t) && s.LeftOf(b, c, t) && s.LeftOf(c, a, t);
}

}  // namespace

Packing DoubleStarPack(const PointSetPtr& s, const CrossingFamily& f) {
  if (f.edges.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "crossing family is empty");
  }
  const std::size_t n = s->size();
  Packing packing(s);
  for (const EdgeRef& e : f.edges) {
    const VertexId p = e.a;
    const VertexId q = e.b;
    std::vector<EdgeRef> edges{e};
    for (VertexId x = 0; x < n; ++x) {
      if (x == p || x == q) continue;
      edges.push_back(EdgeRef::Make(s->LeftOf(p, q, x) ? p : q, x));
    }
    packing.Add(Member(StructureKind::kTree, std::move(edges)));
  }
  return packing;
}

TwoTreesResult TwoTrees(const PointSetPtr& s) {
  RequireSize(*s, 4, "two_trees");
  const JEdge j = FindJEdge(*s, 2);
  const VertexId u = j.u;
  const VertexId v = j.v;
  const VertexId x = j.left[0];
  const VertexId y = j.left[1];

  JEdgeWitness w;
  w.r = u;
  w.b = v;
  w.side = j.left;
  TwoTreesCase which = TwoTreesCase::kInterior;
  if (InTriangle(*s, u, v, y, x)) {
    w.q = x;
    w.p = y;
  } else if (InTriangle(*s, u, v, x, y)) {
    w.q = y;
    w.p = x;
  } else {
    // Convex quadrilateral u, v, p, q in counterclockwise order, so that the
    // diagonals rp and qb go to different trees.
    which = TwoTreesCase::kConvex;
    const bool x_first = s->LeftOf(u, x, y);
    w.p = x_first ? x : y;
    w.q = x_first ? y : x;
  }
  const VertexId p = *w.p;
  const VertexId q = *w.q;
  const VertexId r = w.r;
  const VertexId b = w.b;

  std::vector<EdgeRef> blue{EdgeRef::Make(q, r), EdgeRef::Make(r, p),
                            EdgeRef::Make(p, b)};
  std::vector<EdgeRef> red{EdgeRef::Make(p, q), EdgeRef::Make(q, b),
                           EdgeRef::Make(b, r)};
  for (VertexId t = 0; t < s->size(); ++t) {
    if (t == p || t == q || t == r || t == b) continue;
    blue.push_back(EdgeRef::Make(b, t));
    red.push_back(EdgeRef::Make(r, t));
  }
  Packing packing(s);
  packing.Add(Member(StructureKind::kTree, std::move(blue)));
  packing.Add(Member(StructureKind::kTree, std::move(red)));
  CheckOrThrow(packing, "two_trees");
  return {std::move(packing), std::move(w), which};
}

std::vector<std::vector<EdgeRef>> PartitionSixThreeTrees(
    const PointSet& s, const std::vector<VertexId>& six,
    std::optional<EdgeRef> forced) {
  if (six.size() != 6) {
    throw Error(ErrorCode::kInvalidArgument, "expected exactly 6 vertices");
  }
  std::array<VertexId, 6> ids;
  std::copy(six.begin(), six.end(), ids.begin());
  std::sort(ids.begin(), ids.end());
  constexpr int kEdges = 15;
  std::array<EdgeRef, kEdges> local;
  for (VertexId i = 0; i < 6; ++i) {
    for (VertexId j = i + 1; j < 6; ++j) local[EdgeIndex({i, j}, 6)] = {i, j};
  }
  auto global = [&](int e) {
    return EdgeRef{ids[local[e].a], ids[local[e].b]};
  };

  int forced_index = 0;
  if (forced) {
    forced_index = -1;
    for (int e = 0; e < kEdges; ++e) {
      if (global(e) == *forced) forced_index = e;
    }
    if (forced_index < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "forced edge " + ToString(*forced) +
                      " is not spanned by the six vertices");
    }
  }

  std::array<std::uint32_t, kEdges> crossing{};
  for (int e = 0; e < kEdges; ++e) {
    for (int f = 0; f < kEdges; ++f) {
      if (e != f && s.EdgesCross(global(e), global(f))) {
        crossing[e] |= 1u << f;
      }
    }
  }

  // Every labelled spanning tree of K6 from its Pruefer code.
  std::vector<std::uint32_t> trees;
  std::vector<bool> is_tree(1u << kEdges, false);
  for (int code = 0; code < 6 * 6 * 6 * 6; ++code) {
    std::array<int, 4> seq{code % 6, code / 6 % 6, code / 36 % 6, code / 216};
    std::array<int, 6> degree;
    degree.fill(1);
    for (int x : seq) ++degree[x];
    std::uint32_t mask = 0;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      mask |= 1u << EdgeIndex(EdgeRef::Make(leaf, x), 6);
      --degree[leaf];
      --degree[x];
    }
    int a = 0;
    while (degree[a] != 1) ++a;
    int b = a + 1;
    while (degree[b] != 1) ++b;
    mask |= 1u << EdgeIndex(EdgeRef::Make(a, b), 6);

    bool plane = true;
    for (std::uint32_t m = mask; m && plane; m &= m - 1) {
      plane = (crossing[std::countr_zero(m)] & mask) == 0;
    }
    if (plane) {
      trees.push_back(mask);
      is_tree[mask] = true;
    }
  }
  // Order by sorted edge list.
  auto edge_list = [](std::uint32_t mask) {
    std::vector<int> out;
    for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
    return out;
  };
  std::sort(trees.begin(), trees.end(), [&](std::uint32_t x, std::uint32_t y) {
    return edge_list(x) < edge_list(y);
  });

  const std::uint32_t full = (1u << kEdges) - 1;
  for (std::uint32_t t1 : trees) {
    if (!(t1 >> forced_index & 1)) continue;
    const std::uint32_t rest = full ^ t1;
    const int low = std::countr_zero(rest);
    for (std::uint32_t t2 : trees) {
      if (!(t2 >> low & 1) || (t2 & ~rest)) continue;
      const std::uint32_t t3 = rest ^ t2;
      if (!is_tree[t3]) continue;
      std::vector<std::vector<EdgeRef>> out;
      for (std::uint32_t t : {t1, t2, t3}) {
        std::vector<EdgeRef> edges;
        for (int e : edge_list(t)) edges.push_back(global(e));
        out.push_back(std::move(edges));
      }
      return out;
    }
  }
  throw Error(ErrorCode::kNoPartition,
              "no partition of the 15 edges into three plane spanning trees");
}

Packing PartitionK6ThreeTrees(const PointSetPtr& s6,
                              std::optional<EdgeRef> forced) {
  if (s6->size() != 6) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected exactly 6 points, got " +
                    std::to_string(s6->size()));
  }
  Packing packing(s6);
  for (std::vector<EdgeRef>& t :
       PartitionSixThreeTrees(*s6, {0, 1, 2, 3, 4, 5}, forced)) {
    packing.Add(Member(StructureKind::kTree, std::move(t)));
  }
  return packing;
}

ThreeTreesResult ThreeTrees(const PointSetPtr& s) {
  RequireSize(*s, 6, "three_trees");
  const std::size_t n = s->size();
  const JEdge j = FindJEdge(*s, 4);
  ThreeTreesResult result{Packing(s), {}, GreenExtension::kNone, {}, {}};
  JEdgeWitness& w = result.witness;
  w.r = j.u;
  w.b = j.v;
  w.side = j.left;
  w.subset = j.left;
  w.subset.push_back(w.r);
  w.subset.push_back(w.b);
  std::sort(w.subset.begin(), w.subset.end());
  const VertexId r = w.r;
  const VertexId b = w.b;

  std::vector<std::vector<EdgeRef>> trees =
      PartitionSixThreeTrees(*s, w.subset, w.edge());
  std::vector<EdgeRef>& red = trees[0];
  std::vector<EdgeRef>& blue = trees[1];
  std::vector<EdgeRef>& green = trees[2];

  std::vector<VertexId> outside;
  for (VertexId t = 0; t < n; ++t) {
    if (!std::binary_search(w.subset.begin(), w.subset.end(), t)) {
      outside.push_back(t);
    }
  }
  for (VertexId t : outside) {
    red.push_back(EdgeRef::Make(r, t));
    blue.push_back(EdgeRef::Make(b, t));
  }

  // Complete green to a triangulation of the six points; rb is a hull edge
  // there, so exactly one triangle rests on it.
  std::vector<EdgeRef> triangulation = green;
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = x + 1; y < 6; ++y) {
      const EdgeRef e{w.subset[x], w.subset[y]};
      if (std::find(triangulation.begin(), triangulation.end(), e) !=
          triangulation.end()) {
        continue;
      }
      const bool free = std::none_of(
          triangulation.begin(), triangulation.end(),
          [&](const EdgeRef& f) { return s->EdgesCross(e, f); });
      if (free) triangulation.push_back(e);
    }
  }
  auto in_t = [&](VertexId x, VertexId y) {
    return std::find(triangulation.begin(), triangulation.end(),
                     EdgeRef::Make(x, y)) != triangulation.end();
  };
  for (VertexId c : w.side) {
    if (!in_t(c, r) || !in_t(c, b)) continue;
    const bool empty = std::none_of(
        w.subset.begin(), w.subset.end(), [&](VertexId t) {
          return t != r && t != b && t != c && InTriangle(*s, r, b, c, t);
        });
    if (empty) {
      result.green_q = c;
      break;
    }
  }
  if (!result.green_q) {
    throw Error(ErrorCode::kConstructionFailed,
                "no triangle on " + ToString(w.edge()) +
                    " in the green triangulation");
  }

  if (!outside.empty()) {
    const VertexId q = *result.green_q;
    std::optional<VertexId> hub;
    for (VertexId t : outside) {
      if (s->EdgesCross(EdgeRef::Make(q, t), w.edge())) {
        hub = t;
        green.push_back(EdgeRef::Make(q, t));
        result.extension = GreenExtension::kCrossingEdge;
        break;
      }
    }
    if (!hub) {
      // A hull edge of the whole set crossing the line through r and b.
      const std::vector<VertexId> hull = ConvexHull(*s);
      std::optional<EdgeRef> best;
      for (std::size_t i = 0; i < hull.size(); ++i) {
        const VertexId x = hull[i];
        const VertexId y = hull[(i + 1) % hull.size()];
        if (s->LeftOf(r, b, x) == s->LeftOf(r, b, y)) continue;
        if (x == r || x == b || y == r || y == b) continue;
        const EdgeRef e = EdgeRef::Make(x, y);
        if (!best || e < *best) best = e;
      }
      if (!best) {
        throw Error(ErrorCode::kConstructionFailed,
                    "no hull edge crosses the line through " +
                        ToString(w.edge()));
      }
      hub = s->LeftOf(r, b, best->a) ? best->b : best->a;
      green.push_back(*best);
      result.extension = GreenExtension::kHullEdge;
    }
    result.green_hub = hub;
    for (VertexId t : outside) {
      if (t != *hub) green.push_back(EdgeRef::Make(*hub, t));
    }
  }

  for (std::vector<EdgeRef>& t : trees) {
    result.packing.Add(Member(StructureKind::kTree, std::move(t)));
  }
  CheckOrThrow(result.packing, "three_trees");
  return result;
}

namespace {

constexpr std::size_t kZigzagFallbackLimit = 10;

struct ZigzagState {
  const PointSet& s;
  std::vector<int> side;  // -1 outside, 0 = A, 1 = B
};

bool PathIsPlane(const PointSet& s, const std::vector<VertexId>& order) {
  const std::vector<EdgeRef> edges = PathEdges(order);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t k = i + 1; k < edges.size(); ++k) {
      if (s.EdgesCross(edges[i], edges[k])) return false;
    }
  }
  return true;
}

bool Alternates(const ZigzagState& z, const std::vector<VertexId>& order,
                int first, std::size_t total) {
  if (order.size() != total + 1) return false;
  std::vector<bool> seen(z.side.size(), false);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (seen[order[i]] ||
        z.side[order[i]] != static_cast<int>((first + i + 1) % 2)) {
      return false;
    }
    seen[order[i]] = true;
  }
  return true;
}

std::optional<std::vector<VertexId>> GreedyZigzag(
    const ZigzagState& z, std::vector<VertexId> rest, VertexId start,
    int need) {
  std::vector<VertexId> order{start};
  VertexId cur = start;
  while (!rest.empty()) {
    std::optional<VertexId> next;
    if (rest.size() == 1) {
      if (z.side[rest[0]] == need) next = rest[0];
    } else {
      const std::vector<VertexId> hull = ConvexHull(z.s, rest);
      const std::size_t m = hull.size();
      auto visible = [&](std::size_t i) {
        return z.s.Orient(hull[i % m], hull[(i + 1) % m], cur) ==
               Orientation::kClockwise;
      };
      std::size_t first = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (visible(i) && !visible(i + m - 1)) {
          first = i;
          break;
        }
      }
      if (first == m) return std::nullopt;
      std::vector<VertexId> chain{hull[first]};
      for (std::size_t i = first; visible(i) && chain.size() <= m; ++i) {
        chain.push_back(hull[(i + 1) % m]);
      }
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        if (z.side[chain[k]] != z.side[chain[k + 1]]) {
          next = z.side[chain[k]] == need ? chain[k] : chain[k + 1];
          break;
        }
      }
    }
    if (!next) return std::nullopt;
    order.push_back(*next);
    rest.erase(std::find(rest.begin(), rest.end(), *next));
    cur = *next;
    need = 1 - need;
  }
  return order;
}

bool ExhaustiveZigzag(const ZigzagState& z, std::vector<VertexId>& order,
                      std::vector<bool>& used, std::size_t total, int need) {
  if (order.size() == total + 1) return true;
  for (VertexId v = 0; v < z.side.size(); ++v) {
    if (used[v] || z.side[v] != need) continue;
    const EdgeRef e = EdgeRef::Make(order.back(), v);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < order.size() && ok; ++i) {
      ok = !z.s.EdgesCross(e, EdgeRef::Make(order[i], order[i + 1]));
    }
    if (!ok) continue;
    used[v] = true;
    order.push_back(v);
    if (ExhaustiveZigzag(z, order, used, total, 1 - need)) return true;
    order.pop_back();
    used[v] = false;
  }
  return false;
}

}  // namespace

ZigzagResult ZigzagAlternatingPath(const PointSet& s,
                                   const std::vector<VertexId>& a_side,
                                   const std::vector<VertexId>& b_side,
                                   VertexId start, Side second_in) {
  ZigzagState z{s, std::vector<int>(s.size(), -1)};
  for (VertexId v : a_side) z.side[v] = 0;
  for (VertexId v : b_side) {
    if (z.side[v] != -1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex " + std::to_string(v) + " is on both sides");
    }
    z.side[v] = 1;
  }
  if (start >= s.size() || z.side[start] != -1) {
    throw Error(ErrorCode::kInvalidArgument, "start must be on neither side");
  }
  const int first = second_in == Side::kA ? 0 : 1;
  const std::size_t lead = first == 0 ? a_side.size() : b_side.size();
  const std::size_t other = first == 0 ? b_side.size() : a_side.size();
  if (lead == 0 || !(lead == other || lead == other + 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "side sizes " + std::to_string(a_side.size()) + " and " +
                    std::to_string(b_side.size()) +
                    " do not allow an alternating path");
  }
  const std::size_t total = a_side.size() + b_side.size();

  std::vector<VertexId> rest = a_side;
  rest.insert(rest.end(), b_side.begin(), b_side.end());
  std::sort(rest.begin(), rest.end());

  ZigzagResult result;
  std::optional<std::vector<VertexId>> order =
      GreedyZigzag(z, rest, start, first);
  if (!order || !Alternates(z, *order, first, total) ||
      !PathIsPlane(s, *order)) {
    if (total + 1 > kZigzagFallbackLimit) {
      throw Error(ErrorCode::kConstructionFailed,
                  "alternating path construction failed from vertex " +
                      std::to_string(start));
    }
    std::vector<VertexId> dfs{start};
    std::vector<bool> used(s.size(), false);
    used[start] = true;
    if (!ExhaustiveZigzag(z, dfs, used, total, first)) {
      throw Error(ErrorCode::kConstructionFailed,
                  "no plane alternating path exists from vertex " +
                      std::to_string(start));
    }
    order = std::move(dfs);
    result.used_fallback = true;
  }
  result.order = std::move(*order);
  result.second = result.order[1];
  result.path = Member(StructureKind::kPath, PathEdges(result.order));
  return result;
}

TwoPathsResult TwoPaths(const PointSetPtr& s) {
  RequireSize(*s, 4, "two_paths");
  const std::size_t n = s->size();
  TwoPathsResult result{Packing(s), 0, 0, {}, {}, BlueBranch::kFromLast,
                        false};
  const VertexId p = ConvexHull(*s).front();
  result.p = p;

  std::vector<VertexId> others;
  for (VertexId v = 0; v < n; ++v) {
    if (v != p) others.push_back(v);
  }
  std::vector<VertexId> order = AngularOrderClockwise(*s, p, others);
  // All other points lie in a wedge at p narrower than a half-turn; start
  // the order right after the wedge's outer gap.
  const std::size_t m = order.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (s->Orient(p, order[i], order[(i + 1) % m]) ==
        Orientation::kCounterClockwise) {
      std::rotate(order.begin(), order.begin() + (i + 1) % m, order.end());
      break;
    }
  }
  const std::size_t split = (n - 1) / 2;
  result.a_side.assign(order.begin(), order.begin() + split);
  result.b_side.assign(order.begin() + split, order.end());
  const std::vector<VertexId>& a = result.a_side;
  const std::vector<VertexId>& b = result.b_side;

  ZigzagResult red = ZigzagAlternatingPath(*s, a, b, p, Side::kB);
  result.q = red.second;
  result.used_fallback = red.used_fallback;

  std::vector<VertexId> blue(a.rbegin(), a.rend());
  blue.push_back(p);
  if (result.q == b.back()) {
    result.branch = BlueBranch::kFromFirst;
    blue.insert(blue.end(), b.begin(), b.end());
  } else {
    result.branch = BlueBranch::kFromLast;
    blue.insert(blue.end(), b.rbegin(), b.rend());
  }

  result.packing.Add(std::move(red.path));
  result.packing.Add(Member(StructureKind::kPath, PathEdges(blue)));
  CheckOrThrow(result.packing, "two_paths");
  return result;
}

}  // namespace planepack
