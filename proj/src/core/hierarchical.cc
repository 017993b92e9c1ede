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

#include "hierarchical.h"

#include <algorithm>
#include <string>

#include "constructions.h"

namespace planepack {

namespace {

constexpr std::uint64_t kClusterFamilyBudget = 10'000'000;

class Decomposer {
 public:
  Decomposer(const PointSet& s, ClusterDecomposition& d) : s_(s), d_(d) {}

  void Run() {
    const std::size_t m = d_.base_size;
    JEdge root;
    try {
      root = FindJEdge(s_, m - 2);
    } catch (const Error& e) {
      throw Error(ErrorCode::kInfeasibleStep,
                  std::string("no root j-edge: ") + e.what());
    }
    Cluster c;
    c.u = root.u;
    c.v = root.v;
    c.vertices = root.left;
    c.vertices.push_back(root.u);
    c.vertices.push_back(root.v);
    std::sort(c.vertices.begin(), c.vertices.end());
    std::vector<VertexId> rest;
    for (VertexId x = 0; x < s_.size(); ++x) {
      if (!std::binary_search(c.vertices.begin(), c.vertices.end(), x)) {
        rest.push_back(x);
      }
    }
    d_.clusters.push_back(std::move(c));
    Process(0, std::move(rest));
  }

 private:
  void Absorb(std::size_t id, const std::vector<VertexId>& rest) {
    Cluster& c = d_.clusters[id];
    c.vertices.insert(c.vertices.end(), rest.begin(), rest.end());
    std::sort(c.vertices.begin(), c.vertices.end());
    c.absorbed += rest.size();
  }

  void Process(std::size_t id, std::vector<VertexId> rest) {
    const std::size_t m = d_.base_size;
    if (rest.size() < 2 * (m - 1)) {
      Absorb(id, rest);
      return;
    }
    const VertexId u = d_.clusters[id].u;
    const VertexId v = d_.clusters[id].v;
    const Point uv{s_[v].x - s_[u].x, s_[v].y - s_[u].y};
    const HalvingLine line =
        HalvingSplit(s_, HalfPoint::Midpoint(s_[u], s_[v]), rest, uv);
    const bool u_left = line.SideOf(s_[u]);
    const std::vector<VertexId>& side_u = u_left ? line.left : line.right;
    const std::vector<VertexId>& side_v = u_left ? line.right : line.left;
    if (std::min(side_u.size(), side_v.size()) < m - 1) {
      ++d_.unbalanced_stops;
      Absorb(id, rest);
      return;
    }
    const std::vector<VertexId> su = side_u;
    const std::vector<VertexId> sv = side_v;
    Child(id, u, su);
    Child(id, v, sv);
  }

  void Child(std::size_t parent, VertexId connector,
             std::vector<VertexId> side) {
    const std::size_t m = d_.base_size;
    side.push_back(connector);
    std::sort(side.begin(), side.end());
    JEdge j;
    try {
      j = FindJEdgeContaining(s_, side, m - 2, connector);
    } catch (const Error& e) {
      throw Error(ErrorCode::kInfeasibleStep,
                  "no " + std::to_string(m - 2) + "-edge with vertex " +
                      std::to_string(connector) + " on its left among " +
                      std::to_string(side.size()) + " points: " + e.what());
    }
    Cluster c;
    c.u = j.u;
    c.v = j.v;
    c.connector = connector;
    c.parent = parent;
    c.vertices = j.left;
    c.vertices.push_back(j.u);
    c.vertices.push_back(j.v);
    std::sort(c.vertices.begin(), c.vertices.end());
    std::vector<VertexId> rest;
    for (VertexId x : side) {
      if (!std::binary_search(c.vertices.begin(), c.vertices.end(), x)) {
        rest.push_back(x);
      }
    }
    d_.clusters.push_back(std::move(c));
    Process(d_.clusters.size() - 1, std::move(rest));
  }

  const PointSet& s_;
  ClusterDecomposition& d_;
};

}  // namespace

std::size_t MaxHierarchicalK(std::size_t n) {
  std::size_t k = 0;
  while (12 * (k + 1) * (k + 1) <= n) ++k;
  return k;
}

ClusterDecomposition DecomposeClusters(const PointSet& s, std::size_t k) {
  const std::size_t n = s.size();
  if (k < 1 || k > MaxHierarchicalK(n)) {
    throw Error(ErrorCode::kInvalidK,
                "k=" + std::to_string(k) + " outside [1, " +
                    std::to_string(MaxHierarchicalK(n)) + "] for n=" +
                    std::to_string(n));
  }
  ClusterDecomposition d;
  d.k = k;
  d.base_size = 12 * k * k;
  d.cluster_bound = n / (d.base_size - 1);
  Decomposer(s, d).Run();
  return d;
}

std::size_t HierarchicalDiameterBound(std::size_t cluster_bound) {
  std::size_t ceil_log = 0;
  while ((std::size_t{1} << ceil_log) < cluster_bound) ++ceil_log;
  return 6 * ceil_log;
}

std::size_t HierarchicalDegreeBound(std::size_t k) {
  return 2 * (36 * k * k - 3);
}

HierarchicalResult HierarchicalPack(const std::shared_ptr<const PointSet>& s,
                                    std::size_t k) {
  if (s->wheel_half()) {
    throw Error(ErrorCode::kInvalidArgument,
                "hierarchical packing needs a coordinate point set");
  }
  HierarchicalResult result{Packing(s), DecomposeClusters(*s, k), {}, {}};
  std::vector<std::vector<EdgeRef>> trees(k);
  for (const Cluster& c : result.decomposition.clusters) {
    std::vector<Point> pts;
    for (VertexId x : c.vertices) pts.push_back((*s)[x]);
    auto local = std::make_shared<const PointSet>(std::move(pts));
    CrossingFamily f = CrossingFamilyGreedy(*local, k);
    if (f.size() < k) {
      f = FindCrossingFamilyOfSize(*local, k, kClusterFamilyBudget).family;
    }
    if (f.size() < k) {
      throw Error(ErrorCode::kCrossingFamilyTooSmall,
                  "cluster of " + std::to_string(c.vertices.size()) +
                      " points has no " + std::to_string(k) +
                      " pairwise crossing edges");
    }
    const Packing stars = DoubleStarPack(local, f);
    for (std::size_t i = 0; i < k; ++i) {
      for (const EdgeRef& e : stars.members()[i].edges) {
        trees[i].push_back(EdgeRef::Make(c.vertices[e.a], c.vertices[e.b]));
      }
    }
    CrossingFamily global;
    for (const EdgeRef& e : f.edges) {
      global.edges.push_back(EdgeRef::Make(c.vertices[e.a], c.vertices[e.b]));
    }
    std::sort(global.edges.begin(), global.edges.end());
    result.families.push_back(std::move(global));
  }
  for (std::vector<EdgeRef>& t : trees) {
    std::sort(t.begin(), t.end());
    result.packing.Add(GraphStructure{StructureKind::kTree, std::move(t)});
  }
  const VerificationReport report = VerifyPacking(result.packing, false);
  if (!report.AllRequiredOk()) {
    throw Error(ErrorCode::kConstructionFailed,
                "hierarchical packing failed verification:\n" +
                    report.Format());
  }
  for (const MemberReport& m : report.members) {
    result.metrics.push_back(*m.metrics);
  }
  return result;
}

}  // namespace planepack
