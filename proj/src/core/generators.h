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

#include "geometry.h"

namespace planepack {

inline constexpr std::int64_t kRandomCoordinateRange = std::int64_t{1} << 20;
inline constexpr std::int64_t kConvexRadius = std::int64_t{1} << 24;

// n points with coordinates in [0, range), drawn from a 64-bit Mersenne
// Twister seeded with `seed`. Candidates that repeat a point or complete a
// collinear triple are redrawn, so the result is in general position.
std::shared_ptr<const PointSet> GenerateRandom(
    std::size_t n, std::uint64_t seed,
    std::int64_t range = kRandomCoordinateRange);

// n points on a circle of radius 2^24, rounded to integers; n >= 3.
std::shared_ptr<const PointSet> GenerateConvex(std::size_t n);

}  // namespace planepack
