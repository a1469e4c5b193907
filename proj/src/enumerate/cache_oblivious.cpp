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

// Recursive color-refinement enumeration. Nothing below reads M or B; the
// subproblems live contiguously on the engine's stack disk.

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

#include "internal.hpp"
#include "trienum/random.hpp"

namespace trienum {

namespace detail {

namespace {

struct Wedge {
  Word pair;  // closing edge (w, u)
  Word cone;  // v
};

}  // namespace

void base_run(Engine& io, const EdgeRun& edges, ColorVector target,
              const std::function<std::uint32_t(Rank)>& color, Emitter& em) {
  if (edges.count < 3) return;
  ExtRun<Wedge> wedges;
  {
    Writer<Wedge> out(io);
    Reader<Word> scan(io, edges);
    std::uint64_t i = 0;
    while (!scan.done()) {
      // One out-list: edges[i, end).
      const Rank v = edge_lo(scan.peek());
      std::uint64_t end = i;
      const bool cone_ok = color(v) == target.c0;
      while (!scan.done() && edge_lo(scan.peek()) == v) {
        scan.next();
        ++end;
      }
      if (cone_ok && end - i >= 2) {
        Reader<Word> first(io, edges.slice(i, end - i));
        for (std::uint64_t k = i; k + 1 < end; ++k) {
          const Rank w = edge_hi(first.next());
          if (color(w) != target.c1) continue;
          Reader<Word> second(io, edges.slice(k + 1, end - k - 1));
          while (!second.done()) {
            const Rank u = edge_hi(second.next());
            if (color(u) == target.c2) out.push(Wedge{pack_edge(w, u), v});
          }
        }
      }
      i = end;
    }
    wedges = out.finish();
  }
  if (wedges.empty()) return;
  const auto sorted = ext_sort(io, wedges, [](const Wedge& a, const Wedge& b) {
    return a.pair < b.pair || (a.pair == b.pair && a.cone < b.cone);
  });
  Reader<Word> e(io, edges);
  Reader<Wedge> q(io, sorted);
  while (!q.done()) {
    const Wedge x = q.next();
    while (!e.done() && e.peek() < x.pair) e.next();
    if (e.done()) break;
    if (e.peek() == x.pair) {
      em.emit(static_cast<Rank>(x.cone), edge_lo(x.pair), edge_hi(x.pair), true);
    }
  }
}

namespace {

class Recursion {
 public:
  Recursion(Engine& io, const Graph& g, Emitter& em, std::uint64_t seed, std::uint64_t cap)
      : io_(io), g_(g), em_(em), seed_(seed), cap_(cap) {
    tables_.push_back(std::vector<std::uint32_t>(g.n_vertices(), 1));
  }

  std::uint64_t subproblems() const { return subproblems_; }
  std::uint64_t max_depth() const { return max_depth_; }

  void solve(EdgeRun edges, ColorVector target, std::uint64_t depth) {
    ++subproblems_;
    max_depth_ = std::max(max_depth_, depth);
    if (depth > cap_) throw std::logic_error("cache_oblivious: recursion depth guard exceeded");
    const auto& disk = io_.stack_disk();
    const std::uint64_t mark = disk->length();
    const std::vector<std::uint32_t>& xi = colors(depth);
    auto proper = [&](Rank a, Rank b, Rank c) {
      return xi[a] == target.c0 && xi[b] == target.c1 && xi[c] == target.c2;
    };

    // Step 1: local high-degree vertices, degree >= E/8.
    for (Rank v : local_high_degree(edges)) {
      star_run(io_, edges, v, em_, proper);
      edges = remove_vertex(io_, edges, v, disk);
    }
    if (edges.empty()) {
      disk->truncate(mark);
      return;
    }
    if (depth == cap_) {
      base_run(io_, edges, target, [&](Rank r) { return xi[r]; }, em_);
      disk->truncate(mark);
      return;
    }

    // Steps 2 and 3: one more color bit, then the eight children.
    const std::vector<std::uint32_t>& next = colors(depth + 1);
    std::array<ColorVector, 8> child;
    for (int k = 0; k < 8; ++k) {
      child[k] = ColorVector{2 * target.c0 - ((k >> 2) & 1), 2 * target.c1 - ((k >> 1) & 1),
                             2 * target.c2 - (k & 1)};
    }
    // fits[k][p]: edges of child k in class position p (01, 02, 12).
    std::array<std::array<std::uint64_t, 3>, 8> fits{};
    ext_scan(io_, edges, [&](Word e) {
      for (int k = 0; k < 8; ++k) {
        const unsigned p = positions(child[k], next, e);
        for (int i = 0; i < 3; ++i) fits[k][i] += (p >> i) & 1u;
      }
    });
    for (int k = 0; k < 8; ++k) {
      if (fits[k][0] == 0 || fits[k][1] == 0 || fits[k][2] == 0) continue;
      const std::uint64_t child_mark = disk->length();
      Writer<Word> out(io_, disk);
      ext_scan(io_, edges, [&](Word e) {
        if (positions(child[k], next, e) != 0) out.push(e);
      });
      solve(out.finish(SortOrder::lexicographic), child[k], depth + 1);
      disk->truncate(child_mark);
    }
    disk->truncate(mark);
  }

 private:
  // Class positions (bit 0: 01, bit 1: 02, bit 2: 12) edge e can fill under
  // target t; 0 when incompatible.
  static unsigned positions(const ColorVector& t, const std::vector<std::uint32_t>& xi, Word e) {
    const std::uint32_t a = xi[edge_lo(e)];
    const std::uint32_t b = xi[edge_hi(e)];
    return (a == t.c0 && b == t.c1 ? 1u : 0u) | (a == t.c0 && b == t.c2 ? 2u : 0u) |
           (a == t.c1 && b == t.c2 ? 4u : 0u);
  }

  // xi_{d+1}(v) = 2 xi_d(v) - b_d(v), one 4-wise independent bit per depth.
  const std::vector<std::uint32_t>& colors(std::uint64_t depth) {
    while (tables_.size() <= depth) {
      const std::uint64_t d = tables_.size() - 1;
      const FourWiseHash bit = sample_four_wise(mix_seed(seed_ ^ mix_seed(d)), 2, g_.n_vertices());
      const std::vector<std::uint32_t>& prev = tables_.back();
      std::vector<std::uint32_t> t(prev.size());
      for (std::uint64_t r = 0; r < t.size(); ++r) {
        t[r] = 2 * prev[r] - (bit(g_.vertex_at(static_cast<Rank>(r))) - 1);
      }
      tables_.push_back(std::move(t));
    }
    return tables_[depth];
  }

  std::vector<Rank> local_high_degree(const EdgeRun& edges) {
    std::vector<Rank> out;
    if (edges.empty()) return out;
    Writer<Word> ends(io_);
    ext_scan(io_, edges, [&](Word e) {
      ends.push(edge_lo(e));
      ends.push(edge_hi(e));
    });
    const ExtRun<Word> sorted = ext_sort(io_, ends.finish());
    bool any = false;
    Word current = 0;
    std::uint64_t count = 0;
    auto close = [&] {
      if (any && 8 * count >= edges.count) out.push_back(static_cast<Rank>(current));
    };
    ext_scan(io_, sorted, [&](Word v) {
      if (any && v == current) {
        ++count;
        return;
      }
      close();
      any = true;
      current = v;
      count = 1;
    });
    close();
    return out;
  }

  Engine& io_;
  const Graph& g_;
  Emitter& em_;
  std::uint64_t seed_;
  std::uint64_t cap_;
  std::deque<std::vector<std::uint32_t>> tables_;  // indexed by rank; stable references
  std::uint64_t subproblems_ = 0;
  std::uint64_t max_depth_ = 0;
};

std::uint64_t floor_log4(std::uint64_t x) {
  std::uint64_t d = 0;
  while (x >= 4) {
    x /= 4;
    ++d;
  }
  return d;
}

}  // namespace

}  // namespace detail

AlgoResult cache_oblivious(const Graph& g, Engine& io, TriangleSink& sink, const AlgoConfig& cfg) {
  if (!io.lru_mode()) throw std::invalid_argument("cache_oblivious requires an LRU engine");
  const auto edges = detail::stage_graph(io, g);
  const IOStats before = io.stats();
  detail::Emitter em(g, sink, cfg.check_witness);
  const std::uint64_t cap = detail::floor_log4(edges.count);
  detail::Recursion rec(io, g, em, cfg.seed, cap);
  rec.solve(edges, ColorVector{1, 1, 1}, 0);
  AlgoResult r = detail::finish_result(io, before, em);
  r.subproblems = rec.subproblems();
  r.max_depth = rec.max_depth();
  r.depth_cap = cap;
  return r;
}

AlgoResult base_enumerate(const Graph& g, const ColorAssignment& xi, ColorVector target,
                          Engine& io, TriangleSink& sink, const AlgoConfig& cfg) {
  if (xi.size() < g.n_vertices()) {
    throw std::invalid_argument("base_enumerate: coloring does not cover the graph");
  }
  const auto edges = detail::stage_graph(io, g);
  const IOStats before = io.stats();
  detail::Emitter em(g, sink, cfg.check_witness);
  detail::base_run(io, edges, target, [&](Rank r) { return xi[g.vertex_at(r)]; }, em);
  return detail::finish_result(io, before, em);
}

}  // namespace trienum
