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

#include "wheel.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <unordered_map>

#include "search_oracle.h"

namespace planepack {

WheelCoordinates ComputeWheelCoordinates(int half, std::int64_t radius) {
  const WheelConfig cfg(half);
  if (radius < (std::int64_t{1} << 16) || radius > kMaxCoordinate) {
    throw Error(ErrorCode::kInvalidArgument,
                "wheel radius must lie in [2^16, 2^30], got " +
                    std::to_string(radius));
  }
  const int m = cfg.rim_count();
  WheelCoordinates out;
  out.points.push_back({0, 0});
  for (int p = 0; p < m; ++p) {
    const long double angle = 2 * std::numbers::pi_v<long double> * p / m;
    out.points.push_back({std::llround(radius * std::cos(angle)),
                          std::llround(radius * std::sin(angle))});
  }
  const std::set<Point> distinct(out.points.begin(), out.points.end());
  out.orientation_exact = distinct.size() == out.points.size();
  const VertexId n = static_cast<VertexId>(out.points.size());
  for (VertexId a = 0; a < n && out.orientation_exact; ++a) {
    for (VertexId b = a + 1; b < n && out.orientation_exact; ++b) {
      for (VertexId c = b + 1; c < n; ++c) {
        if (Orient(out.points[a], out.points[b], out.points[c]) !=
            cfg.Orient(a, b, c)) {
          out.orientation_exact = false;
          break;
        }
      }
    }
  }
  return out;
}

std::shared_ptr<const PointSet> MakeWheel(int half, std::int64_t radius) {
  return std::make_shared<const PointSet>(
      PointSet::Wheel(half, ComputeWheelCoordinates(half, radius).points));
}

namespace {

class WheelColouring {
 public:
  WheelColouring(const PointSet& wheel, std::vector<std::vector<EdgeRef>> forced,
                 std::uint64_t budget)
      : s_(wheel), trees_(std::move(forced)), budget_(budget) {
    const std::size_t n = s_.size();
    comp_.assign(trees_.size(), std::vector<VertexId>(n));
    std::set<EdgeRef> taken;
    for (std::size_t c = 0; c < trees_.size(); ++c) {
      for (VertexId v = 0; v < n; ++v) comp_[c][v] = v;
      for (const EdgeRef& e : trees_[c]) {
        Merge(c, e);
        taken.insert(e);
      }
    }
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (!taken.contains(EdgeRef{a, b})) rest_.push_back({a, b});
      }
    }
  }

  bool Run() { return Rec(0); }
  std::vector<std::vector<EdgeRef>>& trees() { return trees_; }

 private:
  void Merge(std::size_t c, const EdgeRef& e) {
    const VertexId from = comp_[c][e.b];
    const VertexId to = comp_[c][e.a];
    for (VertexId& x : comp_[c]) {
      if (x == from) x = to;
    }
  }

  bool Rec(std::size_t idx) {
    if (++nodes_ > budget_) return false;
    if (idx == rest_.size()) return true;
    const EdgeRef e = rest_[idx];
    for (std::size_t c = 0; c < trees_.size(); ++c) {
      if (trees_[c].size() + 1 >= s_.size()) continue;
      if (comp_[c][e.a] == comp_[c][e.b]) continue;
      const bool crosses =
          std::any_of(trees_[c].begin(), trees_[c].end(),
                      [&](const EdgeRef& f) { return s_.EdgesCross(e, f); });
      if (crosses) continue;
      const std::vector<VertexId> saved = comp_[c];
      trees_[c].push_back(e);
      Merge(c, e);
      if (Rec(idx + 1)) return true;
      trees_[c].pop_back();
      comp_[c] = saved;
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  const PointSet& s_;
  std::vector<std::vector<EdgeRef>> trees_;
  std::vector<std::vector<VertexId>> comp_;
  std::vector<EdgeRef> rest_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

constexpr std::uint64_t kFallbackBudget = 50'000'000;

Packing ToPacking(const std::shared_ptr<const PointSet>& s,
                  std::vector<std::vector<EdgeRef>> members,
                  StructureKind kind) {
  Packing p(s);
  for (std::vector<EdgeRef>& edges : members) {
    if (kind == StructureKind::kTree) std::sort(edges.begin(), edges.end());
    p.Add(GraphStructure{kind, std::move(edges)});
  }
  return p;
}

}  // namespace

std::optional<std::vector<std::vector<EdgeRef>>> CompleteWheelPartition(
    const PointSet& wheel, std::vector<std::vector<EdgeRef>> forced,
    std::uint64_t budget) {
  WheelColouring search(wheel, std::move(forced), budget);
  if (!search.Run()) return std::nullopt;
  return std::move(search.trees());
}

WheelPackingResult WheelPartition(int half) {
  const WheelConfig cfg(half);
  const auto wheel = MakeWheel(half);
  const long n = half;
  const long m = cfg.rim_count();
  auto chord = [&](long x, long y) {
    return EdgeRef::Make(cfg.Rim(x), cfg.Rim(y));
  };
  auto radial = [&](long x) { return EdgeRef::Make(WheelConfig::kHub, cfg.Rim(x)); };

  // Longest chords form a Hamiltonian cycle of step n-1. Colours 1..n-1 take
  // consecutive pairs, each a wedge around the hub; red keeps the last edge.
  std::vector<std::vector<EdgeRef>> forced(half);
  for (long t = 0; t < m; ++t) {
    const std::size_t colour = t + 1 < m ? t / 2 + 1 : 0;
    forced[colour].push_back(chord(t * (n - 1), (t + 1) * (n - 1)));
  }
  for (long x = 0; x < n; ++x) forced[0].push_back(radial(x));
  for (long c = 1; c < n; ++c) forced[c].push_back(radial(m - c));

  // Clockwise fans, one edge of every class below the longest. Red takes the
  // fan at rim position 0, colour c the fans at its two double-star centres.
  auto fan = [&](long v, std::vector<EdgeRef>& out) {
    for (long len = 1; len <= n - 2; ++len) out.push_back(chord(v, v - len));
  };
  std::vector<std::vector<EdgeRef>> trees = forced;
  fan(0, trees[0]);
  for (long c = 1; c < n; ++c) {
    fan(n - c, trees[c]);
    fan(m - c, trees[c]);
  }

  WheelPackingResult result{ToPacking(wheel, trees, StructureKind::kTree)};
  if (VerifyPacking(result.packing, true).AllRequiredOk()) return result;

  std::optional<std::vector<std::vector<EdgeRef>>> completed =
      CompleteWheelPartition(*wheel, forced, kFallbackBudget);
  if (!completed) {
    throw Error(ErrorCode::kConstructionFailed,
                "wheel partition failed for n=" + std::to_string(half));
  }
  result.packing = ToPacking(wheel, std::move(*completed), StructureKind::kTree);
  result.used_fallback = true;
  if (!VerifyPacking(result.packing, true).AllRequiredOk()) {
    throw Error(ErrorCode::kConstructionFailed,
                "wheel partition completion failed verification for n=" +
                    std::to_string(half));
  }
  return result;
}

namespace {

// Rim zigzag i, i+1, i-1, i+2, ... with the hub spliced in between the
// endpoints of one longest chord. `alternate` picks the chord with endpoint
// sum 2i+1 instead of 2i.
std::vector<VertexId> WheelZigzag(const WheelConfig& cfg, long i,
                                  bool alternate) {
  const long n = cfg.half();
  std::vector<long> rim{i};
  for (long k = 1; k < n; ++k) {
    rim.push_back(i + k);
    rim.push_back(i - k);
  }
  const std::size_t cut = alternate ? 2 * ((n - 1) / 2) : 2 * (n / 2) - 1;
  std::vector<VertexId> order;
  for (std::size_t j = 0; j < rim.size(); ++j) {
    order.push_back(cfg.Rim(rim[j]));
    if (j == cut) order.push_back(WheelConfig::kHub);
  }
  return order;
}

std::vector<EdgeRef> OrderEdges(const std::vector<VertexId>& order) {
  std::vector<EdgeRef> edges;
  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    edges.push_back(EdgeRef::Make(order[j], order[j + 1]));
  }
  return edges;
}

bool ChooseVariants(const PointSet& s, const WheelConfig& cfg, long i,
                    std::set<EdgeRef>& used,
                    std::vector<std::vector<EdgeRef>>& paths) {
  if (i == cfg.half() - 1) return true;
  for (bool alternate : {false, true}) {
    const std::vector<EdgeRef> edges = OrderEdges(WheelZigzag(cfg, i, alternate));
    const GraphStructure g{StructureKind::kPath, edges};
    if (!VerifyPlane(s, g).plane || !VerifySpanningPath(s, g)) continue;
    if (std::any_of(edges.begin(), edges.end(),
                    [&](const EdgeRef& e) { return used.contains(e); })) {
      continue;
    }
    used.insert(edges.begin(), edges.end());
    paths.push_back(edges);
    if (ChooseVariants(s, cfg, i + 1, used, paths)) return true;
    paths.pop_back();
    for (const EdgeRef& e : edges) used.erase(e);
  }
  return false;
}

}  // namespace

WheelPackingResult WheelZigzagPaths(int half) {
  const WheelConfig cfg(half);
  const auto wheel = MakeWheel(half);
  std::vector<std::vector<EdgeRef>> paths;
  for (long i = 0; i + 1 < half; ++i) {
    paths.push_back(OrderEdges(WheelZigzag(cfg, i, false)));
  }
  WheelPackingResult result{ToPacking(wheel, paths, StructureKind::kPath)};
  if (VerifyPacking(result.packing, false).AllRequiredOk()) return result;

  std::set<EdgeRef> used;
  paths.clear();
  if (!ChooseVariants(*wheel, cfg, 0, used, paths)) {
    throw Error(ErrorCode::kConstructionFailed,
                "wheel zigzag paths failed for n=" + std::to_string(half));
  }
  result.packing = ToPacking(wheel, std::move(paths), StructureKind::kPath);
  result.used_fallback = true;
  return result;
}

namespace {

class PartitionCounter {
 public:
  PartitionCounter(std::size_t n, std::size_t parts,
                   const std::vector<EdgeMask>& trees, std::uint64_t budget)
      : parts_(parts), budget_(budget) {
    by_low_.resize(n * (n - 1) / 2);
    for (std::size_t t = 0; t < trees.size(); ++t) {
      by_low_[std::countr_zero(trees[t])].push_back(trees[t]);
      path_[trees[t]] = IsPath(trees[t], n);
    }
  }

  bool Run(EdgeMask all) { return Rec(all, 1, 0); }

  std::uint64_t partitions() const { return partitions_; }
  std::size_t max_paths() const { return max_paths_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  static bool IsPath(EdgeMask mask, std::size_t n) {
    std::vector<int> degree(n, 0);
    for (const EdgeRef& e : EdgesOf(mask, n)) {
      if (++degree[e.a] > 2 || ++degree[e.b] > 2) return false;
    }
    return true;
  }

  bool Rec(EdgeMask rest, std::size_t level, std::size_t paths) {
    if (level == parts_) {
      const auto it = path_.find(rest);
      if (it != path_.end()) {
        ++partitions_;
        max_paths_ = std::max(max_paths_, paths + (it->second ? 1 : 0));
      }
      return true;
    }
    for (EdgeMask t : by_low_[std::countr_zero(rest)]) {
      if (t & ~rest) continue;
      if (++nodes_ > budget_) return false;
      if (!Rec(rest ^ t, level + 1, paths + (path_.at(t) ? 1 : 0))) {
        return false;
      }
    }
    return true;
  }

  std::size_t parts_;
  std::uint64_t budget_;
  std::vector<std::vector<EdgeMask>> by_low_;
  std::unordered_map<EdgeMask, bool> path_;
  std::uint64_t partitions_ = 0;
  std::size_t max_paths_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

WheelCertificate WheelPartitionPathImpossibility(int half,
                                                 std::uint64_t budget) {
  const WheelConfig cfg(half);
  if (cfg.vertex_count() > kMaxMaskVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "exhaustive wheel certificate supports n <= 5, got n=" +
                    std::to_string(half));
  }
  const auto wheel = MakeWheel(half);
  const std::vector<EdgeMask> trees = EnumeratePlaneSpanningTreeMasks(*wheel);
  const std::size_t n = wheel->size();
  const EdgeMask all = n * (n - 1) / 2 == 64
                           ? ~EdgeMask{0}
                           : (EdgeMask{1} << (n * (n - 1) / 2)) - 1;
  PartitionCounter counter(n, static_cast<std::size_t>(half), trees, budget);
  WheelCertificate cert;
  cert.half = half;
  cert.plane_trees = trees.size();
  cert.complete = counter.Run(all);
  cert.partitions = counter.partitions();
  cert.max_path_members = counter.max_paths();
  cert.nodes = counter.nodes();
  return cert;
}

}  // namespace planepack
