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

#include "search_oracle.h"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <string>

namespace planepack {

namespace {

void CheckMaskSize(const PointSet& s) {
  if (s.size() < 2) {
    throw Error(ErrorCode::kTooFewPoints, "need at least 2 points");
  }
  if (s.size() > kMaxMaskVertices) {
    throw Error(ErrorCode::kInvalidArgument,
                "exhaustive search supports at most " +
                    std::to_string(kMaxMaskVertices) + " points, got " +
                    std::to_string(s.size()));
  }
}

struct EdgeTable {
  std::vector<EdgeRef> edges;
  std::vector<EdgeMask> crossing;

  explicit EdgeTable(const PointSet& s) {
    const std::size_t n = s.size();
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) edges.push_back({a, b});
    }
    crossing.assign(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (s.EdgesCross(edges[i], edges[j])) {
          crossing[i] |= EdgeMask{1} << j;
          crossing[j] |= EdgeMask{1} << i;
        }
      }
    }
  }
};

// Lexicographic order of sorted edge lists, for masks of equal popcount.
bool LexLess(EdgeMask a, EdgeMask b) {
  const EdgeMask d = a ^ b;
  return d && (a & (d & -d));
}

class TreeEnumerator {
 public:
  TreeEnumerator(const PointSet& s, const EdgeTable& t)
      : n_(s.size()), t_(t) {}

  std::vector<EdgeMask> Run() {
    std::array<std::uint8_t, kMaxMaskVertices> comp{};
    for (std::size_t v = 0; v < n_; ++v) comp[v] = static_cast<std::uint8_t>(v);
    Rec(0, 0, 0, 0, comp);
    return std::move(out_);
  }

 private:
  void Rec(std::size_t idx, EdgeMask chosen, EdgeMask forbidden,
           std::size_t count,
           const std::array<std::uint8_t, kMaxMaskVertices>& comp) {
    if (count + 1 == n_) {
      out_.push_back(chosen);
      return;
    }
    if (t_.edges.size() - idx < n_ - 1 - count) return;
    const EdgeRef e = t_.edges[idx];
    if (!(forbidden >> idx & 1) && comp[e.a] != comp[e.b]) {
      std::array<std::uint8_t, kMaxMaskVertices> next = comp;
      const std::uint8_t from = comp[e.b];
      for (std::size_t v = 0; v < n_; ++v) {
        if (next[v] == from) next[v] = comp[e.a];
      }
      Rec(idx + 1, chosen | EdgeMask{1} << idx, forbidden | t_.crossing[idx],
          count + 1, next);
    }
    Rec(idx + 1, chosen, forbidden, count, comp);
  }

  std::size_t n_;
  const EdgeTable& t_;
  std::vector<EdgeMask> out_;
};

class PathEnumerator {
 public:
  PathEnumerator(const PointSet& s, const EdgeTable& t)
      : n_(s.size()), t_(t) {}

  std::vector<EdgeMask> Run() {
    for (VertexId v = 0; v < n_; ++v) {
      order_.assign(1, v);
      visited_ = 1u << v;
      Rec(0);
    }
    std::sort(out_.begin(), out_.end(), LexLess);
    return std::move(out_);
  }

 private:
  void Rec(EdgeMask path) {
    if (order_.size() == n_) {
      if (order_.front() < order_.back()) out_.push_back(path);
      return;
    }
    const VertexId last = order_.back();
    for (VertexId w = 0; w < n_; ++w) {
      if (visited_ >> w & 1) continue;
      const std::size_t idx = EdgeIndex(EdgeRef::Make(last, w), n_);
      if (t_.crossing[idx] & path) continue;
      order_.push_back(w);
      visited_ |= 1u << w;
      Rec(path | EdgeMask{1} << idx);
      visited_ &= ~(1u << w);
      order_.pop_back();
    }
  }

  std::size_t n_;
  const EdgeTable& t_;
  std::vector<VertexId> order_;
  std::uint32_t visited_ = 0;
  std::vector<EdgeMask> out_;
};

class PackingSearch {
 public:
  PackingSearch(std::vector<EdgeMask> candidates, std::size_t n,
                std::uint64_t budget)
      : candidates_(std::move(candidates)),
        n_(n),
        edges_(n * (n - 1) / 2),
        ceiling_(n / 2),
        budget_(budget) {}

  void Run() {
    Rec(0, 0);
  }

  const std::vector<EdgeMask>& best() const { return best_; }
  bool complete() const { return !aborted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Returns false to stop the whole search.
  bool Rec(std::size_t start, EdgeMask used) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (chosen_.size() > best_.size()) {
      best_ = chosen_;
      if (best_.size() >= ceiling_) return false;
    }
    const std::size_t free = edges_ - std::popcount(used);
    if (chosen_.size() + free / (n_ - 1) <= best_.size()) return true;
    for (std::size_t i = start; i < candidates_.size(); ++i) {
      if (candidates_[i] & used) continue;
      chosen_.push_back(candidates_[i]);
      const bool go_on = Rec(i + 1, used | candidates_[i]);
      chosen_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  std::vector<EdgeMask> candidates_;
  std::size_t n_;
  std::size_t edges_;
  std::size_t ceiling_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<EdgeMask> chosen_;
  std::vector<EdgeMask> best_;
};

OracleOutcome MaxPacking(const std::shared_ptr<const PointSet>& s,
                         std::uint64_t budget,
                         std::optional<std::uint64_t> shuffle_seed,
                         StructureKind kind) {
  CheckMaskSize(*s);
  std::vector<EdgeMask> candidates =
      kind == StructureKind::kTree ? EnumeratePlaneSpanningTreeMasks(*s)
                                   : EnumeratePlaneSpanningPathMasks(*s);
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }
  PackingSearch search(std::move(candidates), s->size(), budget);
  search.Run();
  OracleOutcome out{search.best().size(), Packing(s), search.complete(),
                    search.nodes()};
  for (EdgeMask m : search.best()) {
    out.witness.Add(GraphStructure{kind, EdgesOf(m, s->size())});
  }
  return out;
}

}  // namespace

EdgeMask MaskOf(const std::vector<EdgeRef>& edges, std::size_t n) {
  EdgeMask mask = 0;
  for (const EdgeRef& e : edges) mask |= EdgeMask{1} << EdgeIndex(e, n);
  return mask;
}

std::vector<EdgeRef> EdgesOf(EdgeMask mask, std::size_t n) {
  std::vector<EdgeRef> edges;
  std::size_t idx = 0;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b, ++idx) {
      if (mask >> idx & 1) edges.push_back({a, b});
    }
  }
  return edges;
}

std::vector<EdgeMask> EnumeratePlaneSpanningTreeMasks(const PointSet& s) {
  CheckMaskSize(s);
  const EdgeTable table(s);
  return TreeEnumerator(s, table).Run();
}

std::vector<EdgeMask> EnumeratePlaneSpanningPathMasks(const PointSet& s) {
  CheckMaskSize(s);
  const EdgeTable table(s);
  return PathEnumerator(s, table).Run();
}

std::vector<GraphStructure> EnumeratePlaneSpanningStructures(
    const PointSet& s, StructureKind kind) {
  if (kind == StructureKind::kGeneric) {
    throw Error(ErrorCode::kInvalidArgument,
                "enumeration needs kind TREE or PATH");
  }
  const std::vector<EdgeMask> masks =
      kind == StructureKind::kTree ? EnumeratePlaneSpanningTreeMasks(s)
                                   : EnumeratePlaneSpanningPathMasks(s);
  std::vector<GraphStructure> out;
  out.reserve(masks.size());
  for (EdgeMask m : masks) out.push_back({kind, EdgesOf(m, s.size())});
  return out;
}

OracleOutcome MaxTreePackingExact(const std::shared_ptr<const PointSet>& s,
                                  std::uint64_t budget,
                                  std::optional<std::uint64_t> shuffle_seed) {
  return MaxPacking(s, budget, shuffle_seed, StructureKind::kTree);
}

OracleOutcome MaxPathPackingExact(const std::shared_ptr<const PointSet>& s,
                                  std::uint64_t budget,
                                  std::optional<std::uint64_t> shuffle_seed) {
  return MaxPacking(s, budget, shuffle_seed, StructureKind::kPath);
}

}  // namespace planepack
