// Copyright 2026 The trienum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent reference implementations shared by the tests.

#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "trienum/enumerate.hpp"

namespace trienum::testing {

// All triangles by checking every vertex triple against an adjacency set.
inline std::vector<Triangle> brute_triangles(const Graph& g) {
  const std::uint64_t n = g.n_vertices();
  std::set<std::pair<VertexId, VertexId>> adj;
  for (const Edge& e : g.edges()) {
    adj.emplace(e.u, e.v);
    adj.emplace(e.v, e.u);
  }
  std::vector<Triangle> out;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!adj.contains({a, b})) continue;
      for (VertexId c = b + 1; c < n; ++c) {
        if (adj.contains({a, c}) && adj.contains({b, c})) out.push_back(g.make_triangle(a, b, c));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Collision statistic by enumerating every pair of oriented edges.
inline CollisionStats brute_collisions(std::span<const RawEdge> edges, const ColorAssignment& xi) {
  CollisionStats s;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const RawEdge& p = edges[i];
      const RawEdge& q = edges[j];
      if (xi[p.a] != xi[q.a] || xi[p.b] != xi[q.b]) continue;
      ++s.x_total;
      if (p.a == q.a || p.a == q.b || p.b == q.a || p.b == q.b) ++s.x_adj;
    }
  }
  s.x_nonadj = s.x_total - s.x_adj;
  return s;
}

inline std::vector<RawEdge> oriented(const Graph& g) {
  std::vector<RawEdge> out;
  for (const Edge& e : g.edges()) out.push_back(RawEdge{e.u, e.v});
  return out;
}

}  // namespace trienum::testing
