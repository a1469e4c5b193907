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

// Shared pieces of the enumeration algorithms. Everything here works in rank
// space: an edge is one word (rank(u) << 32 | rank(v)) with u before v.

#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "trienum/enumerate.hpp"
#include "trienum/extsort.hpp"

namespace trienum::detail {

using EdgeRun = ExtRun<Word>;

class Emitter {
 public:
  Emitter(const Graph& g, TriangleSink& sink, bool check_witness)
      : graph_(&g), sink_(&sink), check_(check_witness) {}

  // a < b < c in rank order.
  void emit(Rank a, Rank b, Rank c, bool witnessed = true) {
    if (check_ && !witnessed) ++failures_;
    ++emitted_;
    sink_->emit(Triangle{graph_->vertex_at(a), graph_->vertex_at(b), graph_->vertex_at(c)});
  }

  bool checking() const { return check_; }
  std::uint64_t emitted() const { return emitted_; }
  std::uint64_t witness_failures() const { return failures_; }

 private:
  const Graph* graph_;
  TriangleSink* sink_;
  bool check_;
  std::uint64_t emitted_ = 0;
  std::uint64_t failures_ = 0;
};

// Filter on (a, b, c) ranks, a < b < c; empty accepts everything.
using Accept = std::function<bool(Rank, Rank, Rank)>;

EdgeRun stage_graph(Engine& io, const Graph& g);

// Loads all edges (ceil(E/B) reads) and joins them in memory.
void in_memory_pass(Engine& io, const EdgeRun& edges, Emitter& em);

void nested_loop_run(Engine& io, const EdgeRun& edges, Emitter& em);

// `edges` must be sorted lexicographically.
void star_run(Engine& io, const EdgeRun& edges, Rank v, Emitter& em, const Accept& accept);

// Copy of `edges` without the edges incident to v, appended to `dest`.
EdgeRun remove_vertex(Engine& io, const EdgeRun& edges, Rank v,
                      std::shared_ptr<VirtualDisk> dest);

// A lexicographic scan formed by merging sorted runs.
struct PivotScan {
  std::vector<EdgeRun> runs;
};

// Loads floor(alpha M) pivots per round and, for every scan, streams the
// out-lists of the scan's edges against them. Emits triangle (v, w, u) when
// (w, u) is a loaded pivot and (v, w), (v, u) occur in the same scan. Returns
// the number of rounds.
std::uint64_t pivot_rounds(Engine& io, const EdgeRun& pivots, std::span<const PivotScan> scans,
                           Emitter& em, double alpha);

// Sort-based wedge join restricted to triangles with colors `target`.
void base_run(Engine& io, const EdgeRun& edges, ColorVector target,
              const std::function<std::uint32_t(Rank)>& color, Emitter& em);

// Result fields common to every algorithm.
AlgoResult finish_result(const Engine& io, const IOStats& before, const Emitter& em);

}  // namespace trienum::detail
