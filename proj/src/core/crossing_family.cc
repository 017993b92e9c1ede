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

#include "crossing_family.h"

#include <algorithm>
#include <bit>

namespace planepack {

bool IsCrossingFamily(const PointSet& s, const CrossingFamily& f) {
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < f.edges.size(); ++j) {
      if (!s.EdgesCross(f.edges[i], f.edges[j])) return false;
    }
  }
  return true;
}

CrossingGraph::CrossingGraph(const PointSet& s) {
  const std::size_t n = s.size();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) edges_.push_back({a, b});
  }
  const std::size_t m = edges_.size();
  words_ = (m + 63) / 64;
  rows_.assign(m * words_, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!s.EdgesCross(edges_[i], edges_[j])) continue;
      rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
      rows_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
}

std::size_t CrossingGraph::AdjacentPairCount() const {
  std::size_t total = 0;
  for (std::uint64_t w : rows_) total += std::popcount(w);
  return total / 2;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool Empty(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return !w; });
}

// Branch and bound in the style of MCQ: colour the candidate set greedily,
// then branch on vertices in reverse colour order while the colour count
// can still beat the incumbent.
class CliqueSearch {
 public:
  CliqueSearch(const CrossingGraph& g, std::uint64_t budget, std::size_t stop)
      : g_(g), budget_(budget), stop_(stop) {}

  ExactFamilyOutcome Run() {
    Bits all(g_.words(), 0);
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      all[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    aborted_ = false;
    if (g_.vertex_count() > 0) Expand(all);
    ExactFamilyOutcome out;
    for (std::size_t v : best_) out.family.edges.push_back(g_.edge(v));
    std::sort(out.family.edges.begin(), out.family.edges.end());
    out.complete = !aborted_ || Done();
    out.nodes = nodes_;
    return out;
  }

 private:
  bool Done() const { return stop_ > 0 && best_.size() >= stop_; }

  void Expand(Bits p) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    Colour(p, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (aborted_) return;
      if (current_.size() + colour[i] <= best_.size()) return;
      if (++nodes_ > budget_) {
        aborted_ = true;
        return;
      }
      const std::size_t v = order[i];
      Bits next(p.size());
      const std::uint64_t* row = g_.Row(v);
      for (std::size_t w = 0; w < p.size(); ++w) next[w] = p[w] & row[w];
      current_.push_back(v);
      if (current_.size() > best_.size()) {
        best_ = current_;
        if (Done()) {
          aborted_ = true;
          current_.pop_back();
          return;
        }
      }
      if (!Empty(next)) Expand(std::move(next));
      current_.pop_back();
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  void Colour(const Bits& p, std::vector<std::size_t>& order,
              std::vector<std::size_t>& colour) const {
    Bits uncoloured = p;
    std::size_t k = 0;
    while (!Empty(uncoloured)) {
      ++k;
      Bits q = uncoloured;
      for (std::size_t w = 0; w < q.size(); ++w) {
        while (q[w]) {
          const std::size_t v = w * 64 + std::countr_zero(q[w]);
          q[w] &= q[w] - 1;
          const std::uint64_t* row = g_.Row(v);
          for (std::size_t x = w; x < q.size(); ++x) q[x] &= ~row[x];
          uncoloured[v / 64] &= ~(std::uint64_t{1} << (v % 64));
          order.push_back(v);
          colour.push_back(k);
        }
      }
    }
  }

  const CrossingGraph& g_;
  std::uint64_t budget_;
  std::size_t stop_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

ExactFamilyOutcome MaxCrossingFamilyExact(const PointSet& s,
                                          std::uint64_t node_budget) {
  const CrossingGraph g(s);
  return CliqueSearch(g, node_budget, 0).Run();
}

ExactFamilyOutcome FindCrossingFamilyOfSize(const PointSet& s,
                                            std::size_t target,
                                            std::uint64_t node_budget) {
  const CrossingGraph g(s);
  ExactFamilyOutcome out = CliqueSearch(g, node_budget, target).Run();
  if (out.family.size() > target) out.family.edges.resize(target);
  return out;
}

CrossingFamily ConvexPositionFamily(const PointSet& s) {
  const std::vector<VertexId> hull = ConvexHull(s);
  const std::size_t h = hull.size();
  CrossingFamily f;
  for (std::size_t i = 0; i < h / 2; ++i) {
    f.edges.push_back(EdgeRef::Make(hull[i], hull[i + h / 2]));
  }
  std::sort(f.edges.begin(), f.edges.end());
  return f;
}

CrossingFamily CrossingFamilyGreedy(const PointSet& s, std::size_t target) {
  const std::size_t n = s.size();
  const std::vector<VertexId> hull = ConvexHull(s);
  const std::size_t h = hull.size();
  const std::size_t half = h / 2;

  std::vector<std::vector<EdgeRef>> seeds;
  for (std::size_t r = 0; r < half; ++r) {
    std::vector<EdgeRef> seed;
    for (std::size_t i = 0; i < half; ++i) {
      seed.push_back(EdgeRef::Make(hull[(r + i) % h], hull[(r + i + half) % h]));
    }
    seeds.push_back(std::move(seed));
  }
  seeds.emplace_back();

  CrossingFamily best;
  bool have_best = false;
  for (std::vector<EdgeRef>& family : seeds) {
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        const EdgeRef e{a, b};
        const bool fits = std::all_of(
            family.begin(), family.end(),
            [&](const EdgeRef& f) { return s.EdgesCross(e, f); });
        if (fits) family.push_back(e);
      }
    }
    if (!have_best || family.size() > best.size()) {
      have_best = true;
      best.edges = family;
    }
  }
  std::sort(best.edges.begin(), best.edges.end());
  if (target > 0 && best.size() > target) best.edges.resize(target);
  return best;
}

}  // namespace planepack
