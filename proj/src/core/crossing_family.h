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
#include <vector>

#include "common.h"
#include "geometry.h"

namespace planepack {

// A set of edges that pairwise properly cross. Edges are kept sorted.
struct CrossingFamily {
  std::vector<EdgeRef> edges;

  std::size_t size() const { return edges.size(); }
  bool operator==(const CrossingFamily&) const = default;
};

bool IsCrossingFamily(const PointSet& s, const CrossingFamily& f);

// The crossing graph: one vertex per edge of the complete geometric graph
// (in EdgeIndex order), adjacent iff the two segments properly cross.
class CrossingGraph {
 public:
  explicit CrossingGraph(const PointSet& s);

  std::size_t vertex_count() const { return edges_.size(); }
  EdgeRef edge(std::size_t i) const { return edges_[i]; }
  bool Adjacent(std::size_t i, std::size_t j) const {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1;
  }
  std::size_t AdjacentPairCount() const;

  std::size_t words() const { return words_; }
  const std::uint64_t* Row(std::size_t i) const {
    return rows_.data() + i * words_;
  }

 private:
  std::vector<EdgeRef> edges_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct ExactFamilyOutcome {
  CrossingFamily family;  // best found; maximum iff complete
  bool complete = false;  // false: node budget exhausted first
  std::uint64_t nodes = 0;
};

// Maximum clique of the crossing graph by branch and bound with a greedy
// colouring bound; vertices are coloured and branched in edge-index order, so
// the result is deterministic. Intended for n <= 16.
ExactFamilyOutcome MaxCrossingFamilyExact(const PointSet& s,
                                          std::uint64_t node_budget);

// Same search, stopping as soon as a family of `target` edges is known.
// `complete` is true when the search either reached the target or proved no
// such family exists.
ExactFamilyOutcome FindCrossingFamilyOfSize(const PointSet& s,
                                            std::size_t target,
                                            std::uint64_t node_budget);

// Maximal family grown greedily (smallest compatible edge first) from each
// rotation of the hull pairing and from the empty family; the largest wins.
// A positive target truncates the result to its first `target` edges.
CrossingFamily CrossingFamilyGreedy(const PointSet& s, std::size_t target);

// Hull vertex i paired with hull vertex i + floor(h/2).
CrossingFamily ConvexPositionFamily(const PointSet& s);

}  // namespace planepack
