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
#include <vector>

#include "common.h"
#include "crossing_family.h"
#include "geometry.h"
#include "packing.h"

namespace planepack {

using PointSetPtr = std::shared_ptr<const PointSet>;

// The edge rb with a fixed number of points strictly on its left, plus the
// roles the constructions give to nearby points.
struct JEdgeWitness {
  VertexId r = 0;
  VertexId b = 0;
  std::vector<VertexId> side;    // strictly left of r->b, ascending
  std::optional<VertexId> p;     // two_trees roles
  std::optional<VertexId> q;
  std::vector<VertexId> subset;  // {r, b} + side, ascending (three_trees)

  EdgeRef edge() const { return EdgeRef::Make(r, b); }
};

// One double star per family edge pq: the edge itself, p joined to every
// point left of p->q and q joined to every point right of it.
Packing DoubleStarPack(const PointSetPtr& s, const CrossingFamily& f);

enum class TwoTreesCase { kConvex, kInterior };

struct TwoTreesResult {
  Packing packing;
  JEdgeWitness witness;
  TwoTreesCase which = TwoTreesCase::kConvex;
};

TwoTreesResult TwoTrees(const PointSetPtr& s);

// Splits all 15 edges of K6 into three plane spanning trees; the first
// solution in a fixed enumeration order is returned. `forced` (if given)
// lands in the first tree. Throws Error(kNoPartition) if none exists.
Packing PartitionK6ThreeTrees(const PointSetPtr& s6,
                              std::optional<EdgeRef> forced = std::nullopt);

// The same search over six vertices of a larger set; returns the three
// trees' edges in global ids.
std::vector<std::vector<EdgeRef>> PartitionSixThreeTrees(
    const PointSet& s, const std::vector<VertexId>& six,
    std::optional<EdgeRef> forced);

enum class GreenExtension { kNone, kCrossingEdge, kHullEdge };

struct ThreeTreesResult {
  Packing packing;  // red, blue, green
  JEdgeWitness witness;
  GreenExtension extension = GreenExtension::kNone;
  std::optional<VertexId> green_q;     // apex of the green triangle on rb
  std::optional<VertexId> green_hub;   // q' or the hull-edge endpoint p
};

ThreeTreesResult ThreeTrees(const PointSetPtr& s);

enum class Side { kA, kB };

struct ZigzagResult {
  GraphStructure path;
  std::vector<VertexId> order;  // start first
  VertexId second = 0;
  bool used_fallback = false;
};

// Plane alternating Hamiltonian path from `start` over a_side and b_side.
// Each step moves to a hull vertex of the unvisited points that is visible
// from the current vertex and adjacent on that hull to a point of the other
// side. `a_side` and `b_side` must be separated by a line through `start`.
ZigzagResult ZigzagAlternatingPath(const PointSet& s,
                                   const std::vector<VertexId>& a_side,
                                   const std::vector<VertexId>& b_side,
                                   VertexId start, Side second_in);

// Which way the blue path runs over B.
enum class BlueBranch {
  kFromFirst,  // q == b_l: p -> b_f, then clockwise
  kFromLast,   // q != b_l: p -> b_l, then counterclockwise
};

struct TwoPathsResult {
  Packing packing;  // red, blue
  VertexId p = 0;
  VertexId q = 0;
  std::vector<VertexId> a_side;  // clockwise around p
  std::vector<VertexId> b_side;  // clockwise around p
  BlueBranch branch = BlueBranch::kFromLast;
  bool used_fallback = false;
};

TwoPathsResult TwoPaths(const PointSetPtr& s);

}  // namespace planepack
