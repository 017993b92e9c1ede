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

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace planepack {

using VertexId = std::uint32_t;

enum class ErrorCode {
  kInvalidArgument,
  kFormat,
  kGeneralPosition,
  kDanglingIndex,
  kDigestMismatch,
  kIo,
  kTooFewPoints,
  kNotFound,
  kNoPartition,
  kConstructionFailed,
  kInfeasibleStep,
  kInvalidK,
  kCrossingFamilyTooSmall,
  kNotATree,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this one exception type; the
// code decides how a caller (or the C API) classifies it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Undirected edge between two vertex indices, stored with a < b.
struct EdgeRef {
  VertexId a = 0;
  VertexId b = 0;

  static EdgeRef Make(VertexId u, VertexId v) {
    return u < v ? EdgeRef{u, v} : EdgeRef{v, u};
  }
  bool Touches(VertexId v) const { return a == v || b == v; }
  bool SharesEndpoint(const EdgeRef& o) const {
    return Touches(o.a) || Touches(o.b);
  }
  auto operator<=>(const EdgeRef&) const = default;
};

// Index of edge {a, b} (a < b) in the lexicographic list of all n(n-1)/2
// edges of the complete graph on n vertices.
inline std::size_t EdgeIndex(EdgeRef e, std::size_t n) {
  return e.a * (2 * n - e.a - 1) / 2 + (e.b - e.a - 1);
}

std::string ToString(const EdgeRef& e);

}  // namespace planepack
