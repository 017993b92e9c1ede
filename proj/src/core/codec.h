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
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "geometry.h"
#include "packing.h"

namespace planepack {

// Point set files:
//   {"format": "planepack.points", "version": 1, "n": N,
//    "tag": "wheel:H" (wheel sets only), "points": [[x, y], ...]}
std::string PointSetToJson(const PointSet& s);
// Throws Error(kFormat) naming the offending field and
// Error(kGeneralPosition) naming a collinear triple.
std::shared_ptr<const PointSet> PointSetFromJson(std::string_view text);

// Lowercase hex SHA-256 of PointSetToJson(s).
std::string PointSetDigest(const PointSet& s);

struct PackingRecord {
  Packing packing;
  std::string method;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> k;
};

// Packing files embed the point set under "points", or reference a point
// set file under "points_ref": {"path": ..., "sha256": ...}.
std::string PackingToJson(const PackingRecord& r,
                          const std::optional<std::string>& points_ref = {});
// A reference path is resolved against `base_dir`; a digest mismatch throws
// Error(kDigestMismatch). Out-of-range edges throw Error(kDanglingIndex).
PackingRecord PackingFromJson(std::string_view text,
                              const std::filesystem::path& base_dir = ".");

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

std::shared_ptr<const PointSet> ReadPointSetFile(
    const std::filesystem::path& path);
PackingRecord ReadPackingFile(const std::filesystem::path& path);

}  // namespace planepack
