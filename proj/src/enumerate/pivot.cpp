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

// Pivot-edge enumeration: pivot edges are loaded in rounds and every scan
// streams out-lists against them.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "internal.hpp"

namespace trienum {

namespace detail {

namespace {

constexpr Word kStampMask = 0xffffffffULL;

Word by_hi_key(Word e) { return (Word{edge_hi(e)} << 32) | edge_lo(e); }

}  // namespace

std::uint64_t pivot_rounds(Engine& io, const EdgeRun& pivots, std::span<const PivotScan> scans,
                           Emitter& em, double alpha) {
  if (pivots.empty()) return 0;
  const IOConfig& cfg = io.config();
  const auto cap = static_cast<std::uint64_t>(std::floor(alpha * static_cast<double>(cfg.M)));
  if (!(alpha > 0.0 && alpha <= 1.0) || cap < cfg.B) {
    throw std::invalid_argument("pivot_load_fraction must satisfy 0 < alpha <= 1, alpha*M >= B");
  }

  Reader<Word> source(io, pivots);
  // Loaded pivots plus one word per distinct smaller endpoint.
  MemoryLease lease = io.reserve(2 * cap);
  std::vector<Word> loaded;  // by_hi_key, ascending
  std::vector<Word> gamma;   // vertex << 32 | stamp, ascending
  loaded.reserve(cap);
  gamma.reserve(cap);
  std::uint64_t rounds = 0;

  auto find_gamma = [&](Rank x) -> Word* {
    const auto it = std::lower_bound(gamma.begin(), gamma.end(), Word{x} << 32);
    return it != gamma.end() && (*it >> 32) == x ? &*it : nullptr;
  };

  while (!source.done()) {
    ++rounds;
    loaded.clear();
    while (!source.done() && loaded.size() < cap) loaded.push_back(by_hi_key(source.next()));
    std::sort(loaded.begin(), loaded.end());
    gamma.clear();
    for (Word k : loaded) gamma.push_back((k & kStampMask) << 32);
    std::sort(gamma.begin(), gamma.end());
    gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());

    std::uint32_t stamp = 0;
    for (const PivotScan& scan : scans) {
      std::vector<Reader<Word>> readers;
      readers.reserve(scan.runs.size());
      for (const EdgeRun& r : scan.runs) {
        if (!r.empty()) readers.emplace_back(io, r);
      }
      bool started = false;
      Rank current = 0;
      for (;;) {
        Reader<Word>* next = nullptr;
        for (auto& r : readers) {
          if (!r.done() && (next == nullptr || r.peek() < next->peek())) next = &r;
        }
        if (next == nullptr) break;
        const Word e = next->next();
        const Rank v = edge_lo(e);
        const Rank x = edge_hi(e);
        if (!started || v != current) {
          started = true;
          current = v;
          if (++stamp == 0) {
            for (Word& g : gamma) g &= ~kStampMask;
            stamp = 1;
          }
        }
        // Pivots (w, x): a triangle when (v, w) was seen earlier in v's list.
        const auto lo = std::lower_bound(loaded.begin(), loaded.end(), Word{x} << 32);
        for (auto it = lo; it != loaded.end() && (*it >> 32) == x; ++it) {
          const auto w = static_cast<Rank>(*it & kStampMask);
          const Word* g = find_gamma(w);
          if (g != nullptr && (*g & kStampMask) == stamp) em.emit(v, w, x, true);
        }
        if (Word* g = find_gamma(x)) *g = (*g & ~kStampMask) | stamp;
      }
    }
  }
  return rounds;
}

}  // namespace detail

AlgoResult pivot_enumerate(const Graph& g, std::span<const RawEdge> pivots, Engine& io,
                           TriangleSink& sink, const AlgoConfig& cfg) {
  const std::vector<Word> all = g.packed_rank_edges();
  std::vector<Word> chosen;
  chosen.reserve(pivots.size());
  for (const RawEdge& p : pivots) {
    if (p.a >= g.n_vertices() || p.b >= g.n_vertices()) {
      throw std::invalid_argument("pivot_enumerate: pivot is not an edge of the graph");
    }
    Rank x = g.rank(p.a);
    Rank y = g.rank(p.b);
    if (x > y) std::swap(x, y);
    const Word e = pack_edge(x, y);
    if (!std::binary_search(all.begin(), all.end(), e)) {
      throw std::invalid_argument("pivot_enumerate: pivot is not an edge of the graph");
    }
    chosen.push_back(e);
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

  const auto edges = preload_run(io, all, SortOrder::lexicographic);
  const auto pivot_run = preload_run(io, chosen, SortOrder::lexicographic);
  const IOStats before = io.stats();
  detail::Emitter em(g, sink, cfg.check_witness);
  const detail::PivotScan scan{{edges}};
  const std::uint64_t rounds =
      detail::pivot_rounds(io, pivot_run, std::span(&scan, 1), em, cfg.pivot_load_fraction);
  AlgoResult r = detail::finish_result(io, before, em);
  r.rounds = rounds;
  return r;
}

}  // namespace trienum
