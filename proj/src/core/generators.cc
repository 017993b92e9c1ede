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

#include "generators.h"

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace planepack {

std::shared_ptr<const PointSet> GenerateRandom(std::size_t n,
                                               std::uint64_t seed,
                                               std::int64_t range) {
  if (range < 2 || range > kMaxCoordinate) {
    throw Error(ErrorCode::kInvalidArgument,
                "coordinate range must lie in [2, 2^30]");
  }
  if (n > static_cast<std::size_t>(range)) {
    throw Error(ErrorCode::kInvalidArgument,
                "too many points for the coordinate range");
  }
  // Plain modulo keeps the stream identical across standard libraries.
  std::mt19937_64 rng(seed);
  const auto r = static_cast<std::uint64_t>(range);
  std::vector<Point> pts;
  std::set<Point> seen;
  pts.reserve(n);
  std::size_t rejected = 0;
  while (pts.size() < n) {
    const std::int64_t x = static_cast<std::int64_t>(rng() % r);
    const std::int64_t y = static_cast<std::int64_t>(rng() % r);
    const Point c{x, y};
    bool ok = !seen.contains(c);
    for (std::size_t i = 0; ok && i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (Orient(pts[i], pts[j], c) == Orientation::kCollinear) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      if (++rejected > 1000 * (n + 1)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "could not place " + std::to_string(n) +
                        " points in general position");
      }
      continue;
    }
    seen.insert(c);
    pts.push_back(c);
  }
  return std::make_shared<const PointSet>(std::move(pts));
}

std::shared_ptr<const PointSet> GenerateConvex(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kTooFewPoints, "convex generation needs n >= 3");
  }
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const long double angle =
        2 * std::numbers::pi_v<long double> * static_cast<long double>(i) / n;
    pts.push_back({std::llround(kConvexRadius * std::cos(angle)),
                   std::llround(kConvexRadius * std::sin(angle))});
  }
  return std::make_shared<const PointSet>(std::move(pts));
}

}  // namespace planepack
