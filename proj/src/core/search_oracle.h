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

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "geometry.h"
#include "packing.h"

namespace planepack {

// Structures are edge bitmasks over EdgeIndex, so n is limited to 11.
inline constexpr std::size_t kMaxMaskVertices = 11;

using EdgeMask = std::uint64_t;

EdgeMask MaskOf(const std::vector<EdgeRef>& edges, std::size_t n);
std::vector<EdgeRef> EdgesOf(EdgeMask mask, std::size_t n);

// All plane spanning trees, by include/exclude search over edges in index
// order with cycle and crossing pruning. Output is in increasing
// lexicographic order of the sorted edge lists.
std::vector<EdgeMask> EnumeratePlaneSpanningTreeMasks(const PointSet& s);

// All plane spanning paths, by extending vertex sequences; each path is
// emitted once (first vertex < last vertex). Sorted like the trees.
std::vector<EdgeMask> EnumeratePlaneSpanningPathMasks(const PointSet& s);

std::vector<GraphStructure> EnumeratePlaneSpanningStructures(
    const PointSet& s, StructureKind kind);

struct OracleOutcome {
  std::size_t maximum = 0;  // exact iff complete, else a lower bound
  Packing witness;
  bool complete = false;
  std::uint64_t nodes = 0;
};

// Exact maximum number of edge-disjoint plane spanning trees. When
// `shuffle_seed` is set the candidate list is permuted first, which changes
// the branch order but not the maximum.
OracleOutcome MaxTreePackingExact(
    const std::shared_ptr<const PointSet>& s, std::uint64_t budget,
    std::optional<std::uint64_t> shuffle_seed = std::nullopt);

OracleOutcome MaxPathPackingExact(
    const std::shared_ptr<const PointSet>& s, std::uint64_t budget,
    std::optional<std::uint64_t> shuffle_seed = std::nullopt);

}  // namespace planepack
