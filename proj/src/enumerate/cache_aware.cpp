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

// Color-coding enumeration for known M and B, with a random 4-wise
// independent coloring (cache_aware) or a derandomized one (deterministic).

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "internal.hpp"
#include "trienum/random.hpp"

namespace trienum {

namespace {

using detail::EdgeRun;

// Vertices of degree > sqrt(E M) are among the top 2 sqrt(E/M) ranks, since
// ranks follow degree. One scan counts the degrees of those ranks.
std::vector<Rank> high_degree_ranks(Engine& io, const EdgeRun& edges, std::uint64_t V) {
  const std::uint64_t E = edges.count;
  const std::uint64_t M = io.config().M;
  const auto k = std::min<std::uint64_t>(
      V, static_cast<std::uint64_t>(2.0 * std::sqrt(static_cast<double>(E) / M)) + 1);
  const std::uint64_t first = V - k;
  MemoryLease lease = io.reserve(k);
  std::vector<std::uint64_t> deg(k, 0);
  ext_scan(io, edges, [&](Word e) {
    if (edge_lo(e) >= first) ++deg[edge_lo(e) - first];
    if (edge_hi(e) >= first) ++deg[edge_hi(e) - first];
  });
  std::vector<Rank> out;
  const auto em = static_cast<unsigned __int128>(E) * M;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (static_cast<unsigned __int128>(deg[i]) * deg[i] > em) {
      out.push_back(static_cast<Rank>(first + i));
    }
  }
  return out;
}

std::vector<RawEdge> vertex_edges(const Graph& g, const EdgeRun& run) {
  std::vector<RawEdge> out;
  out.reserve(run.count);
  for (Word e : peek_run(run)) out.push_back(RawEdge{g.vertex_at(edge_lo(e)), g.vertex_at(edge_hi(e))});
  return out;
}

AlgoResult color_coded(const Graph& g, Engine& io, TriangleSink& sink, const AlgoConfig& cfg,
                       bool derandomized) {
  const IOConfig& mc = io.config();
  EdgeRun edges = detail::stage_graph(io, g);
  const IOStats before = io.stats();
  detail::Emitter em(g, sink, cfg.check_witness);
  const std::uint64_t E = edges.count;

  if ((E + mc.B - 1) / mc.B * mc.B <= mc.M) {
    detail::in_memory_pass(io, edges, em);
    AlgoResult r = detail::finish_result(io, before, em);
    r.colors = 1;
    r.low_edges = E;
    return r;
  }

  // Step 1: high-degree vertices, each removed once its triangles are out.
  const std::vector<Rank> high = high_degree_ranks(io, edges, g.n_vertices());
  for (Rank v : high) {
    detail::star_run(io, edges, v, em, {});
    edges = detail::remove_vertex(io, edges, v, nullptr);
  }

  // Step 2: coloring and the buckets E_{t1,t2}.
  const std::uint64_t c =
      ceil_power_of_two(std::sqrt(static_cast<double>(E) / static_cast<double>(mc.M)));
  const std::vector<RawEdge> low = vertex_edges(g, edges);
  ColorAssignment xi = constant_coloring(g.n_vertices());
  Derandomized derand;
  if (c >= 2) {
    if (derandomized) {
      derand = greedy_derandomize(g.n_vertices(), low, c, mc.M);
      xi = derand.coloring;
      // Each level is one scan computing every candidate's counters plus a
      // sort grouping the edges by their class so far.
      const int L = log2_exact(c);
      for (int i = 1; i <= L; ++i) {
        ext_scan(io, edges, [](Word) {});
        auto cls = [&](Rank r) { return (xi[g.vertex_at(r)] - 1u) >> (L - i); };
        auto key = [&](Word e) { return (Word{cls(edge_lo(e))} << 32) | cls(edge_hi(e)); };
        ext_sort(io, edges, [&](Word a, Word b) { return key(a) < key(b); });
      }
    } else {
      xi = assign_colors(sample_four_wise(mix_seed(cfg.seed), c, g.n_vertices()),
                         g.n_vertices());
    }
  }
  std::vector<std::uint32_t> by_rank(g.n_vertices());
  for (std::uint64_t r = 0; r < by_rank.size(); ++r) by_rank[r] = xi[g.vertex_at(static_cast<Rank>(r))];
  const std::vector<EdgeRun> bucket = ext_partition(
      io, edges,
      [&](Word e) { return Word{by_rank[edge_lo(e)] - 1u} * c + (by_rank[edge_hi(e)] - 1u); },
      c * c);
  auto at = [&](std::uint64_t t1, std::uint64_t t2) -> const EdgeRun& { return bucket[t1 * c + t2]; };

  // Step 3: pivots from E_{t2,t3}, loaded once per pivot bucket; the scans run
  // over E_{t1,t2} and E_{t1,t3} for every cone color t1.
  std::uint64_t rounds = 0;
  for (std::uint64_t t2 = 0; t2 < c; ++t2) {
    for (std::uint64_t t3 = 0; t3 < c; ++t3) {
      const EdgeRun& pivots = at(t2, t3);
      if (pivots.empty()) continue;
      std::vector<detail::PivotScan> scans;
      for (std::uint64_t t1 = 0; t1 < c; ++t1) {
        if (at(t1, t2).empty() || at(t1, t3).empty()) continue;
        detail::PivotScan s{{at(t1, t2)}};
        if (t3 != t2) s.runs.push_back(at(t1, t3));
        scans.push_back(std::move(s));
      }
      if (scans.empty()) continue;
      rounds += detail::pivot_rounds(io, pivots, scans, em, cfg.pivot_load_fraction);
    }
  }

  AlgoResult r = detail::finish_result(io, before, em);
  r.colors = c;
  r.high_degree = high.size();
  r.low_edges = low.size();
  r.coloring_stats = collision_statistic(low, xi);
  r.rounds = rounds;
  if (derandomized) {
    r.derandomize_levels = derand.levels;
    r.derandomize_bound_ok = c < 2 || derand.bound_ok;
  }
  return r;
}

}  // namespace

AlgoResult cache_aware(const Graph& g, Engine& io, TriangleSink& sink, const AlgoConfig& cfg) {
  return color_coded(g, io, sink, cfg, false);
}

AlgoResult deterministic(const Graph& g, Engine& io, TriangleSink& sink, const AlgoConfig& cfg) {
  return color_coded(g, io, sink, cfg, true);
}

}  // namespace trienum
