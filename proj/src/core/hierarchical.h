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

#include "crossing_family.h"
#include "geometry.h"
#include "packing.h"

namespace planepack {

struct Cluster {
  std::vector<VertexId> vertices;  // ascending
  VertexId u = 0;                  // the j-edge that cut the cluster off
  VertexId v = 0;
  std::optional<VertexId> connector;  // shared with the parent
  std::optional<std::size_t> parent;
  std::size_t absorbed = 0;  // leftover points added at a stopping step
};

struct ClusterDecomposition {
  std::size_t k = 0;
  std::size_t base_size = 0;      // 12k^2
  std::size_t cluster_bound = 0;  // floor(n / (12k^2 - 1))
  std::vector<Cluster> clusters;  // preorder; clusters[0] is the root
  // Splits skipped because the halving line left one side too small.
  std::size_t unbalanced_stops = 0;
};

// Largest k the decomposition accepts: floor(sqrt(n / 12)).
std::size_t MaxHierarchicalK(std::size_t n);

// Recursively cuts off clusters of 12k^2 points along j-edges, splitting the
// rest by a line through the midpoint of the last j-edge. Throws
// Error(kInvalidK) for k outside [1, MaxHierarchicalK(n)] and
// Error(kInfeasibleStep) if a required j-edge is missing.
ClusterDecomposition DecomposeClusters(const PointSet& s, std::size_t k);

// 6 * ceil(log2(cluster_bound)); 0 when the bound is 1.
std::size_t HierarchicalDiameterBound(std::size_t cluster_bound);
// 2 * (36k^2 - 3).
std::size_t HierarchicalDegreeBound(std::size_t k);

struct HierarchicalResult {
  Packing packing;
  ClusterDecomposition decomposition;
  std::vector<CrossingFamily> families;  // per cluster
  std::vector<TreeMetrics> metrics;      // per tree
};

// k edge-disjoint plane spanning trees: a double-star packing inside every
// cluster, with local tree i glued into global tree i at the connectors.
HierarchicalResult HierarchicalPack(const std::shared_ptr<const PointSet>& s,
                                    std::size_t k);

}  // namespace planepack
