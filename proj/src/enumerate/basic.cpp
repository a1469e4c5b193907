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

// Block nested loop join and the single-vertex (star) enumerator.

#include <algorithm>
#include <array>
#include <stdexcept>

#include "internal.hpp"

namespace trienum {

namespace detail {

namespace {

// Key ordering edges by larger endpoint, then smaller.
Word by_hi_key(Word e) { return (Word{edge_hi(e)} << 32) | edge_lo(e); }

struct Chunk {
  std::vector<Word> keys;  // by_hi_key, ascending
  MemoryLease lease;

  std::span<const Word> with_hi(Rank x) const {
    const auto lo = std::lower_bound(keys.begin(), keys.end(), Word{x} << 32);
    const auto hi = std::lower_bound(lo, keys.end(), Word{x + 1} << 32);
    return {lo, hi};
  }
};

Chunk load_chunk(Engine& io, const EdgeRun& part) {
  Chunk c;
  c.lease = io.reserve(part.count);
  c.keys.reserve(part.count);
  Reader<Word> r(io, part);
  while (!r.done()) c.keys.push_back(by_hi_key(r.next()));
  std::sort(c.keys.begin(), c.keys.end());
  return c;
}

}  // namespace

void nested_loop_run(Engine& io, const EdgeRun& edges, Emitter& em) {
  if (edges.empty()) return;
  const IOConfig& cfg = io.config();
  const std::uint64_t cap = cfg.M > cfg.B ? (cfg.M - cfg.B) / 2 : 0;
  if (cap == 0) throw std::invalid_argument("nested_loop requires M >= 3B");
  const std::uint64_t k = (edges.count + cap - 1) / cap;
  auto part = [&](std::uint64_t i) {
    return edges.slice(i * cap, std::min(cap, edges.count - i * cap));
  };

  // Triangle a < b < c: (a, b) in the first chunk, (a, c) in the second,
  // (b, c) found by the scan.
  for (std::uint64_t i = 0; i < k; ++i) {
    const Chunk first = load_chunk(io, part(i));
    for (std::uint64_t j = 0; j < k; ++j) {
      Chunk other;
      if (j != i) other = load_chunk(io, part(j));
      const Chunk& second = j == i ? first : other;
      Reader<Word> scan(io, edges);
      while (!scan.done()) {
        const Word e = scan.next();
        const Rank b = edge_lo(e);
        const Rank c = edge_hi(e);
        const auto la = first.with_hi(b);
        if (la.empty()) continue;
        const auto lc = second.with_hi(c);
        auto x = la.begin();
        auto y = lc.begin();
        while (x != la.end() && y != lc.end()) {
          const Rank ax = static_cast<Rank>(*x);
          const Rank ay = static_cast<Rank>(*y);
          if (ax < ay) {
            ++x;
          } else if (ay < ax) {
            ++y;
          } else {
            bool held = true;
            if (em.checking()) {
              held = std::binary_search(first.keys.begin(), first.keys.end(),
                                        by_hi_key(pack_edge(ax, b))) &&
                     std::binary_search(second.keys.begin(), second.keys.end(),
                                        by_hi_key(pack_edge(ax, c)));
            }
            em.emit(ax, b, c, held);
            ++x;
            ++y;
          }
        }
      }
    }
  }
}

void star_run(Engine& io, const EdgeRun& edges, Rank v, Emitter& em, const Accept& accept) {
  const IOConfig& cfg = io.config();
  if (cfg.M < 5 * cfg.B) throw std::invalid_argument("star_enumerate requires M >= 5B");
  if (edges.empty()) return;

  // Neighbors of v. In lexicographic order the edges (u, v), u < v, come
  // first by u, then the out-list (v, w) by w, so the list is already sorted.
  EdgeRun sorted = edges;
  if (edges.order != SortOrder::lexicographic) {
    sorted = ext_sort(io, edges, std::less<Word>{}, SortOrder::lexicographic);
  }
  EdgeRun gamma;
  {
    Writer<Word> out(io);
    ext_scan(io, sorted, [&](Word e) {
      if (edge_lo(e) == v) out.push(edge_hi(e));
      if (edge_hi(e) == v) out.push(edge_lo(e));
    });
    gamma = out.finish(SortOrder::lexicographic);
  }
  if (gamma.count < 2) return;

  // Edges with the smaller endpoint in gamma, re-sorted by the larger one.
  auto by_hi = [](Word x, Word y) { return by_hi_key(x) < by_hi_key(y); };
  Sorter<Word, decltype(by_hi)> sorter(io, cfg.M - 2 * cfg.B, by_hi);
  {
    Reader<Word> e(io, sorted);
    Reader<Word> g(io, gamma);
    while (!e.done()) {
      const Word x = e.next();
      const Rank lo = edge_lo(x);
      if (lo == v || edge_hi(x) == v) continue;
      while (!g.done() && g.peek() < lo) g.next();
      if (g.done()) break;
      if (g.peek() == lo) sorter.push(x);
    }
  }
  Reader<Word> g(io, gamma);
  sorter.drain([&](Word x) {
    const Rank hi = edge_hi(x);
    while (!g.done() && g.peek() < hi) g.next();
    if (g.done() || g.peek() != hi) return;
    std::array<Rank, 3> t{v, edge_lo(x), hi};
    std::sort(t.begin(), t.end());
    // The record x stands for (v, lo) through its admission; (v, hi) is the
    // current gamma entry.
    if (!accept || accept(t[0], t[1], t[2])) em.emit(t[0], t[1], t[2], g.peek() == hi);
  });
}

EdgeRun remove_vertex(Engine& io, const EdgeRun& edges, Rank v,
                      std::shared_ptr<VirtualDisk> dest) {
  Writer<Word> out(io, dest ? std::move(dest) : io.new_disk());
  ext_scan(io, edges, [&](Word e) {
    if (edge_lo(e) != v && edge_hi(e) != v) out.push(e);
  });
  return out.finish(edges.order);
}

}  // namespace detail

AlgoResult nested_loop(const Graph& g, Engine& io, TriangleSink& sink, const AlgoConfig& cfg) {
  const auto run = detail::stage_graph(io, g);
  const IOStats before = io.stats();
  detail::Emitter em(g, sink, cfg.check_witness);
  detail::nested_loop_run(io, run, em);
  return detail::finish_result(io, before, em);
}

AlgoResult star_enumerate(const Graph& g, VertexId v, Engine& io, TriangleSink& sink,
                          const AlgoConfig& cfg) {
  const auto run = detail::stage_graph(io, g);
  const IOStats before = io.stats();
  detail::Emitter em(g, sink, cfg.check_witness);
  if (v < g.n_vertices()) detail::star_run(io, run, g.rank(v), em, {});
  return detail::finish_result(io, before, em);
}

}  // namespace trienum
