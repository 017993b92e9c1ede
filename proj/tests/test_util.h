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
#include <random>
#include <vector>

#include "geometry.h"
#include "packing.h"

namespace planepack::testing {

std::shared_ptr<const PointSet> Pts(std::vector<Point> points);

// Proper crossing decided from the intersection parameters of the two
// supporting lines rather than from orientation signs.
bool ReferenceCross(Point a, Point b, Point c, Point d);

// Hull vertices as a set: a point is on the hull iff it lies in no triangle
// of three other points. Sorted ascending.
std::vector<VertexId> ReferenceHullVertices(const PointSet& s);

// Points strictly left of a->b, from raw coordinates.
std::size_t ReferenceLeftCount(const PointSet& s, VertexId a, VertexId b);

// Plane + spanning + n-1 distinct edges, by union-find and ReferenceCross.
bool ReferencePlaneSpanningTree(const PointSet& s,
                                const std::vector<EdgeRef>& edges);

// Largest pairwise crossing edge set by plain subset DFS; small n only.
std::size_t ReferenceMaxCrossingFamily(const PointSet& s);

// Uniformly random labelled tree on n vertices via a random Pruefer code.
std::vector<EdgeRef> RandomTree(std::size_t n, std::mt19937_64& rng);

std::vector<std::size_t> Degrees(std::size_t n,
                                 const std::vector<EdgeRef>& edges);

}  // namespace planepack::testing
