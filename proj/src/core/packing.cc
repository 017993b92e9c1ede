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

#include "packing.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace planepack {

namespace {

std::vector<std::vector<VertexId>> Adjacency(std::size_t n,
                                             const std::vector<EdgeRef>& es) {
  std::vector<std::vector<VertexId>> adj(n);
  for (const EdgeRef& e : es) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

std::vector<EdgeRef> Distinct(std::vector<EdgeRef> es) {
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

// Farthest vertex from `from` and its distance. Unreached vertices get
// SIZE_MAX distance.
std::pair<VertexId, std::size_t> Bfs(
    const std::vector<std::vector<VertexId>>& adj, VertexId from,
    std::vector<std::size_t>& dist) {
  dist.assign(adj.size(), SIZE_MAX);
  std::queue<VertexId> q;
  dist[from] = 0;
  q.push(from);
  VertexId far = from;
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    if (dist[v] > dist[far]) far = v;
    for (VertexId w : adj[v]) {
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return {far, dist[far]};
}

}  // namespace

const char* KindName(StructureKind kind) {
  switch (kind) {
    case StructureKind::kTree:
      return "TREE";
    case StructureKind::kPath:
      return "PATH";
    case StructureKind::kGeneric:
      return "GENERIC";
  }
  return "GENERIC";
}

std::optional<StructureKind> ParseKind(const std::string& name) {
  if (name == "TREE") return StructureKind::kTree;
  if (name == "PATH") return StructureKind::kPath;
  if (name == "GENERIC") return StructureKind::kGeneric;
  return std::nullopt;
}

Packing::Packing(std::shared_ptr<const PointSet> ground,
                 std::vector<GraphStructure> members)
    : ground_(std::move(ground)) {
  for (GraphStructure& m : members) Add(std::move(m));
}

std::size_t Packing::total_edges() const {
  std::size_t total = 0;
  for (const GraphStructure& m : members_) total += m.edges.size();
  return total;
}

void Packing::Add(GraphStructure member) {
  const std::size_t n = ground_->size();
  for (const EdgeRef& e : member.edges) {
    if (e.a >= e.b || e.b >= n) {
      throw Error(ErrorCode::kDanglingIndex,
                  "edge " + ToString(e) + " of member " +
                      std::to_string(members_.size()) +
                      " is not a valid edge over " + std::to_string(n) +
                      " vertices");
    }
  }
  members_.push_back(std::move(member));
}

std::string Witness::Describe() const {
  std::ostringstream os;
  switch (type) {
    case Type::kCrossingPair:
      os << "edges " << ToString(e) << " and " << ToString(f) << " cross";
      break;
    case Type::kRepeatedEdge:
      os << "edge " << ToString(e) << " appears in member " << member
         << " and member " << other_member;
      break;
    case Type::kUncoveredEdge:
      os << "edge " << ToString(e) << " is in no member";
      break;
    case Type::kUnreachable:
      os << "vertex " << vertex << " is not connected to vertex 0";
      break;
    case Type::kEdgeCount:
      os << count << " distinct edges where a spanning tree needs "
         << expected;
      break;
    case Type::kDegree:
      os << "vertex " << vertex << " has degree " << count;
      break;
  }
  return os.str();
}

PlaneCheck VerifyPlane(const PointSet& s, const GraphStructure& g) {
  const std::vector<EdgeRef> es = Distinct(g.edges);
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (s.EdgesCross(es[i], es[j])) {
        Witness w;
        w.type = Witness::Type::kCrossingPair;
        w.e = es[i];
        w.f = es[j];
        return {false, w};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

void CheckConnectivity(const PointSet& s, const GraphStructure& g,
                       MemberReport& r) {
  const std::size_t n = s.size();
  const std::vector<EdgeRef> es = Distinct(g.edges);
  const auto adj = Adjacency(n, es);
  std::vector<std::size_t> dist;
  if (n > 0) Bfs(adj, 0, dist);
  r.spanning = true;
  for (VertexId v = 0; v < n; ++v) {
    if (dist[v] == SIZE_MAX) {
      r.spanning = false;
      Witness w;
      w.type = Witness::Type::kUnreachable;
      w.vertex = v;
      r.spanning_witness = w;
      break;
    }
  }
  if (!r.spanning) {
    r.tree_witness = r.spanning_witness;
  } else if (es.size() != g.edges.size()) {
    // A repeated edge inside one member.
    std::vector<EdgeRef> sorted = g.edges;
    std::sort(sorted.begin(), sorted.end());
    Witness w;
    w.type = Witness::Type::kRepeatedEdge;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i] == sorted[i - 1]) {
        w.e = sorted[i];
        break;
      }
    }
    r.tree_witness = w;
  } else if (es.size() + 1 != n) {
    Witness w;
    w.type = Witness::Type::kEdgeCount;
    w.count = es.size();
    w.expected = n - 1;
    r.tree_witness = w;
  } else {
    r.tree = true;
  }
  if (!r.tree) {
    r.path_witness = r.tree_witness;
    return;
  }
  TreeMetrics m;
  VertexId worst = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (adj[v].size() > m.max_degree) {
      m.max_degree = adj[v].size();
      worst = v;
    }
  }
  const VertexId far = Bfs(adj, 0, dist).first;
  m.diameter = Bfs(adj, far, dist).second;
  r.metrics = m;
  r.path = m.max_degree <= 2;
  if (!r.path) {
    Witness w;
    w.type = Witness::Type::kDegree;
    w.vertex = worst;
    w.count = m.max_degree;
    r.path_witness = w;
  }
}

}  // namespace

bool VerifySpanningTree(const PointSet& s, const GraphStructure& g) {
  MemberReport r;
  CheckConnectivity(s, g, r);
  return r.tree;
}

bool VerifySpanningPath(const PointSet& s, const GraphStructure& g) {
  MemberReport r;
  CheckConnectivity(s, g, r);
  return r.path;
}

TreeMetrics ComputeTreeMetrics(const PointSet& s, const GraphStructure& g) {
  MemberReport r;
  CheckConnectivity(s, g, r);
  if (!r.tree) {
    throw Error(ErrorCode::kNotATree,
                "not a spanning tree: " + r.tree_witness->Describe());
  }
  return *r.metrics;
}

bool MemberReport::RequiredOk() const {
  switch (kind) {
    case StructureKind::kTree:
      return plane && tree;
    case StructureKind::kPath:
      return plane && path;
    case StructureKind::kGeneric:
      return plane;
  }
  return false;
}

bool VerificationReport::AllRequiredOk() const {
  if (!edge_disjoint) return false;
  if (partition_required && !is_partition) return false;
  return std::all_of(members.begin(), members.end(),
                     [](const MemberReport& m) { return m.RequiredOk(); });
}

std::string VerificationReport::Format() const {
  std::ostringstream os;
  auto flag = [](bool b) { return b ? "yes" : "no"; };
  for (std::size_t i = 0; i < members.size(); ++i) {
    const MemberReport& m = members[i];
    os << "member " << i << " [" << KindName(m.kind) << "]: plane="
       << flag(m.plane) << " spanning=" << flag(m.spanning)
       << " tree=" << flag(m.tree) << " path=" << flag(m.path);
    if (m.metrics) {
      os << " max_degree=" << m.metrics->max_degree
         << " diameter=" << m.metrics->diameter;
    }
    os << (m.RequiredOk() ? "" : "  FAILED") << "\n";
    if (!m.plane) os << "  witness: " << m.plane_witness->Describe() << "\n";
    if (m.RequiredOk()) continue;
    if (!m.tree && m.kind != StructureKind::kGeneric) {
      os << "  witness: " << m.tree_witness->Describe() << "\n";
    } else if (!m.path && m.kind == StructureKind::kPath) {
      os << "  witness: " << m.path_witness->Describe() << "\n";
    }
  }
  os << "edge_disjoint=" << flag(edge_disjoint) << "\n";
  if (disjoint_witness) {
    os << "  witness: " << disjoint_witness->Describe() << "\n";
  }
  os << "is_partition=" << flag(is_partition)
     << (partition_required ? " (required)" : "") << "\n";
  if (partition_required && partition_witness) {
    os << "  witness: " << partition_witness->Describe() << "\n";
  }
  os << "result: " << (AllRequiredOk() ? "OK" : "FAILED") << "\n";
  return os.str();
}

VerificationReport VerifyPacking(const Packing& p, bool require_partition) {
  const PointSet& s = p.ground();
  VerificationReport report;
  report.partition_required = require_partition;
  // Edge -> first member containing it.
  std::map<EdgeRef, std::size_t> owner;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const GraphStructure& g = p.members()[i];
    MemberReport r;
    r.kind = g.kind;
    PlaneCheck plane = VerifyPlane(s, g);
    r.plane = plane.plane;
    r.plane_witness = plane.witness;
    CheckConnectivity(s, g, r);
    report.members.push_back(std::move(r));
    for (const EdgeRef& e : g.edges) {
      auto [it, inserted] = owner.emplace(e, i);
      if (inserted) continue;
      if (!report.disjoint_witness || e < report.disjoint_witness->e) {
        Witness w;
        w.type = Witness::Type::kRepeatedEdge;
        w.e = e;
        w.member = it->second;
        w.other_member = i;
        report.disjoint_witness = w;
      }
      report.edge_disjoint = false;
    }
  }
  const std::size_t n = s.size();
  report.is_partition = report.edge_disjoint;
  if (report.edge_disjoint) {
    for (VertexId a = 0; a < n && !report.partition_witness; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (!owner.contains(EdgeRef{a, b})) {
          Witness w;
          w.type = Witness::Type::kUncoveredEdge;
          w.e = EdgeRef{a, b};
          report.partition_witness = w;
          report.is_partition = false;
          break;
        }
      }
    }
  } else {
    report.partition_witness = report.disjoint_witness;
  }
  return report;
}

}  // namespace planepack
