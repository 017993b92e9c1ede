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
#include "wheel_config.h"

namespace planepack {

inline constexpr std::int64_t kDefaultWheelRadius = std::int64_t{1} << 20;

struct WheelCoordinates {
  std::vector<Point> points;  // hub first, then the rim counterclockwise
  // True when the rounded points are distinct and every triple has the
  // orientation the combinatorial predicate gives it.
  bool orientation_exact = false;
};

// Rounded drawing coordinates; radius must lie in [2^16, 2^30].
WheelCoordinates ComputeWheelCoordinates(int half, std::int64_t radius);

// A wheel-tagged PointSet: predicates are combinatorial, the coordinates
// only serve rendering.
std::shared_ptr<const PointSet> MakeWheel(
    int half, std::int64_t radius = kDefaultWheelRadius);

struct WheelPackingResult {
  Packing packing;
  bool used_fallback = false;
};

// Partition of all n(2n-1) edges into n plane spanning trees. Member 0 is
// the red tree holding n radial edges; every other member is a balanced
// double star with a single radial edge.
WheelPackingResult WheelPartition(int half);

// Finishes a partial colouring of the wheel's edges into `forced.size()`
// plane spanning trees by backtracking over the unassigned edges in index
// order. Returns nullopt when no completion exists within `budget` nodes.
std::optional<std::vector<std::vector<EdgeRef>>> CompleteWheelPartition(
    const PointSet& wheel, std::vector<std::vector<EdgeRef>> forced,
    std::uint64_t budget);

// n-1 edge-disjoint plane spanning paths: rotated rim zigzags, each taking
// the hub in place of one of its two longest chords.
WheelPackingResult WheelZigzagPaths(int half);

struct WheelCertificate {
  int half = 0;
  std::size_t plane_trees = 0;       // plane spanning trees of the wheel
  std::uint64_t partitions = 0;      // partitions into `half` plane trees
  std::size_t max_path_members = 0;  // over all partitions found
  bool complete = false;
  std::uint64_t nodes = 0;
};

// Enumerates every partition of the wheel's edges into `half` plane
// spanning trees and records how many members can be paths. half <= 5.
WheelCertificate WheelPartitionPathImpossibility(int half,
                                                 std::uint64_t budget);

}  // namespace planepack
