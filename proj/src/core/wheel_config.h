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

#include "common.h"
#include "geometry.h"

namespace planepack {

// The regular wheel on 2n points: hub v0 at the center of a circle carrying
// 2n-1 equally spaced rim vertices v1..v_{2n-1} in counterclockwise order.
// Because the rim count is odd no chord passes through the hub, so every
// predicate below is decided by index arithmetic alone.
class WheelConfig {
 public:
  explicit WheelConfig(int half);

  int half() const { return half_; }
  int rim_count() const { return 2 * half_ - 1; }
  std::size_t vertex_count() const { return 2 * static_cast<std::size_t>(half_); }
  std::size_t edge_count() const {
    return static_cast<std::size_t>(half_) * rim_count();
  }

  static constexpr VertexId kHub = 0;
  // Vertex id of rim position p (taken modulo the rim count).
  VertexId Rim(long p) const;
  // Rim position 0..2n-2 of a rim vertex.
  int Position(VertexId v) const { return static_cast<int>(v) - 1; }

  bool IsRadial(EdgeRef e) const { return e.a == kHub; }
  // Length class 1..n-1 of a rim chord.
  int LengthClass(EdgeRef chord) const;

  Orientation Orient(VertexId a, VertexId b, VertexId c) const;
  bool Crossing(EdgeRef e, EdgeRef f) const;

 private:
  int Mod(long p) const;

  int half_;
};

// Free-function form used by PointSet for wheel-tagged sets.
Orientation WheelOrient(int half, VertexId a, VertexId b, VertexId c);
bool WheelCrossing(int half, EdgeRef e, EdgeRef f);

}  // namespace planepack
