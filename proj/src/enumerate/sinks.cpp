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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "internal.hpp"

namespace trienum {

std::vector<Triangle> CollectSink::sorted() const {
  std::vector<Triangle> out = triangles_;
  std::sort(out.begin(), out.end());
  return out;
}

ListSink::~ListSink() {
  try {
    finish();
  } catch (...) {
  }
}

void ListSink::finish() {
  if (written_) return;
  written_ = true;
  std::ofstream out(path_);
  if (!out) throw std::runtime_error("cannot write " + path_.string());
  for (const Triangle& t : sorted()) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
}

namespace {

// Calls f(v, w, u) for every triangle v < w < u of lexicographically sorted
// packed edges.
template <class F>
void join_sorted(std::span<const Word> edges, F&& f) {
  auto out_list = [&](Rank v) {
    const auto lo = std::lower_bound(edges.begin(), edges.end(), pack_edge(v, 0));
    const auto hi = std::lower_bound(lo, edges.end(), pack_edge(v + 1, 0));
    return std::span<const Word>(lo, hi);
  };
  for (std::size_t i = 0; i < edges.size();) {
    const Rank v = edge_lo(edges[i]);
    std::size_t end = i;
    while (end < edges.size() && edge_lo(edges[end]) == v) ++end;
    for (std::size_t k = i; k < end; ++k) {
      const Rank w = edge_hi(edges[k]);
      const auto nw = out_list(w);
      auto a = edges.begin() + static_cast<std::ptrdiff_t>(k + 1);
      const auto a_end = edges.begin() + static_cast<std::ptrdiff_t>(end);
      auto b = nw.begin();
      while (a != a_end && b != nw.end()) {
        const Rank x = edge_hi(*a);
        const Rank y = edge_hi(*b);
        if (x < y) {
          ++a;
        } else if (y < x) {
          ++b;
        } else {
          f(v, w, x);
          ++a;
          ++b;
        }
      }
    }
    i = end;
  }
}

}  // namespace

std::vector<Triangle> oracle_enumerate(const Graph& g) {
  const std::vector<Word> edges = g.packed_rank_edges();
  std::vector<Triangle> out;
  join_sorted(edges, [&](Rank a, Rank b, Rank c) {
    out.push_back(Triangle{g.vertex_at(a), g.vertex_at(b), g.vertex_at(c)});
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

EdgeRun stage_graph(Engine& io, const Graph& g) {
  return preload_run(io, g.packed_rank_edges(), SortOrder::lexicographic);
}

void in_memory_pass(Engine& io, const EdgeRun& edges, Emitter& em) {
  if (edges.empty()) return;
  const std::uint64_t B = io.config().B;
  MemoryLease lease = io.reserve((edges.words() + B - 1) / B * B);
  std::vector<Word> all;
  all.reserve(edges.count);
  Reader<Word> reader(io, edges, Buffering::borrowed);
  while (!reader.done()) all.push_back(reader.next());
  if (edges.order != SortOrder::lexicographic) std::sort(all.begin(), all.end());
  join_sorted(all, [&](Rank a, Rank b, Rank c) { em.emit(a, b, c); });
}

AlgoResult finish_result(const Engine& io, const IOStats& before, const Emitter& em) {
  AlgoResult r;
  r.io = io.stats() - before;
  r.triangles = em.emitted();
  r.witness_failures = em.witness_failures();
  return r;
}

}  // namespace detail

Algorithm parse_algorithm(std::string_view name) {
  if (name == "nested_loop") return Algorithm::nested_loop;
  if (name == "cache_aware") return Algorithm::cache_aware;
  if (name == "cache_oblivious") return Algorithm::cache_oblivious;
  if (name == "deterministic") return Algorithm::deterministic;
  if (name == "pivot_all") return Algorithm::pivot_all;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::nested_loop: return "nested_loop";
    case Algorithm::cache_aware: return "cache_aware";
    case Algorithm::cache_oblivious: return "cache_oblivious";
    case Algorithm::deterministic: return "deterministic";
    case Algorithm::pivot_all: return "pivot_all";
  }
  return "?";
}

IoMode required_mode(Algorithm a) {
  return a == Algorithm::cache_oblivious ? IoMode::lru : IoMode::explicit_blocks;
}

AlgoResult run_algorithm(Algorithm a, const Graph& g, Engine& io, TriangleSink& sink,
                         const AlgoConfig& cfg) {
  switch (a) {
    case Algorithm::nested_loop: return nested_loop(g, io, sink, cfg);
    case Algorithm::cache_aware: return cache_aware(g, io, sink, cfg);
    case Algorithm::cache_oblivious: return cache_oblivious(g, io, sink, cfg);
    case Algorithm::deterministic: return deterministic(g, io, sink, cfg);
    case Algorithm::pivot_all: {
      const auto pivots = g.raw_edges();
      return pivot_enumerate(g, pivots, io, sink, cfg);
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace trienum
