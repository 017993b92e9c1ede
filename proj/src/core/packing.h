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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "common.h"
#include "geometry.h"

namespace planepack {

enum class StructureKind { kTree, kPath, kGeneric };

const char* KindName(StructureKind kind);
std::optional<StructureKind> ParseKind(const std::string& name);

// An edge set over some ground PointSet. The kind tag states what the
// structure claims to be; the verifier decides whether it is.
struct GraphStructure {
  StructureKind kind = StructureKind::kGeneric;
  std::vector<EdgeRef> edges;

  bool operator==(const GraphStructure&) const = default;
};

// Structures sharing one ground set. Edge indices are checked against the
// ground on construction (Error(kDanglingIndex)); disjointness and planarity
// are left to VerifyPacking.
class Packing {
 public:
  Packing(std::shared_ptr<const PointSet> ground,
          std::vector<GraphStructure> members = {});

  const PointSet& ground() const { return *ground_; }
  const std::shared_ptr<const PointSet>& ground_ptr() const { return ground_; }
  const std::vector<GraphStructure>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t total_edges() const;

  void Add(GraphStructure member);

 private:
  std::shared_ptr<const PointSet> ground_;
  std::vector<GraphStructure> members_;
};

struct Witness {
  enum class Type {
    kCrossingPair,   // edges e and f properly cross
    kRepeatedEdge,   // e appears in `member` and `other_member`
    kUncoveredEdge,  // e is in no member
    kUnreachable,    // `vertex` is not connected to vertex 0
    kEdgeCount,      // `count` distinct edges instead of `expected`
    kDegree,         // `vertex` has degree `count` > 2
  };
  Type type = Type::kCrossingPair;
  EdgeRef e;
  EdgeRef f;
  std::size_t member = 0;
  std::size_t other_member = 0;
  VertexId vertex = 0;
  std::size_t count = 0;
  std::size_t expected = 0;

  std::string Describe() const;
};

struct PlaneCheck {
  bool plane = true;
  std::optional<Witness> witness;  // lexicographically smallest crossing pair
};

PlaneCheck VerifyPlane(const PointSet& s, const GraphStructure& g);
bool VerifySpanningTree(const PointSet& s, const GraphStructure& g);
bool VerifySpanningPath(const PointSet& s, const GraphStructure& g);

struct TreeMetrics {
  std::size_t max_degree = 0;
  std::size_t diameter = 0;  // in edges
};

// Throws Error(kNotATree) unless g is a spanning tree of s.
TreeMetrics ComputeTreeMetrics(const PointSet& s, const GraphStructure& g);

struct MemberReport {
  StructureKind kind = StructureKind::kGeneric;
  bool plane = false;
  bool spanning = false;  // connected on all vertices
  bool tree = false;      // spanning with exactly n-1 distinct edges
  bool path = false;      // tree with maximum degree <= 2
  std::optional<Witness> plane_witness;
  std::optional<Witness> spanning_witness;
  std::optional<Witness> tree_witness;
  std::optional<Witness> path_witness;
  std::optional<TreeMetrics> metrics;  // present iff tree

  // Flags the member's kind tag requires.
  bool RequiredOk() const;
};

struct VerificationReport {
  std::vector<MemberReport> members;
  bool edge_disjoint = true;
  bool is_partition = false;
  bool partition_required = false;
  std::optional<Witness> disjoint_witness;
  std::optional<Witness> partition_witness;

  bool AllRequiredOk() const;
  std::string Format() const;
};

VerificationReport VerifyPacking(const Packing& p, bool require_partition);

}  // namespace planepack
