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

#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "support.hpp"
#include "trienum/enumerate.hpp"

using namespace trienum;

namespace {

Graph make(const std::vector<RawEdge>& raw) { return canonicalize(raw); }

struct Run {
  std::vector<Triangle> sorted;
  std::vector<Triangle> order;
  AlgoResult result;
};

Run run(Algorithm a, const Graph& g, std::uint64_t M, std::uint64_t B, std::uint64_t seed = 0) {
  Engine io(IOConfig{M, B, required_mode(a)});
  CollectSink sink;
  AlgoConfig cfg;
  cfg.seed = seed;
  cfg.check_witness = true;
  Run r;
  r.result = run_algorithm(a, g, io, sink, cfg);
  r.order = sink.triangles();
  r.sorted = sink.sorted();
  return r;
}

// Triangles whose two later vertices are x and y.
std::vector<Triangle> pivoted_at(const Graph& g, VertexId x, VertexId y) {
  std::vector<Triangle> out;
  for (const Triangle& t : oracle_enumerate(g)) {
    if ((t.b == x && t.c == y) || (t.b == y && t.c == x)) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("oracle") {
  CHECK(oracle_enumerate(make(gen_clique(4))).size() == 4);
  CHECK(oracle_enumerate(make(gen_cycle(5))).empty());
  const Graph k222 = make(gen_tripartite_join(2, 2, 2, 1.0, 0));
  CHECK(oracle_enumerate(k222) == testing::brute_triangles(k222));
  CHECK(oracle_enumerate(k222).size() == 8);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Graph g = make(gen_gnm(40, 200, s));
    CHECK(oracle_enumerate(g) == testing::brute_triangles(g));
  }
}

TEST_CASE("triangles are reported in degree order") {
  const Graph g = make(gen_gnm(30, 120, 2));
  for (const Triangle& t : oracle_enumerate(g)) {
    CHECK(g.precedes(t.a, t.b));
    CHECK(g.precedes(t.b, t.c));
  }
}

TEST_CASE("nested loop") {
  const Graph small = make(gen_clique(6));  // E = 15 <= M / 2
  const Run a = run(Algorithm::nested_loop, small, 64, 8);
  CHECK(a.sorted == oracle_enumerate(small));
  CHECK(a.result.io.total() <= 3 * ((15 + 7) / 8));
  const Graph k32 = make(gen_clique(32));
  const Run b = run(Algorithm::nested_loop, k32, 128, 8);
  CHECK(b.sorted == oracle_enumerate(k32));
  const double E = 496;
  CHECK(b.result.io.total() <= 8 * (E / 128) * (E / 128) * E / 8);
  const Run c = run(Algorithm::nested_loop, Graph{}, 64, 8);
  CHECK(c.sorted.empty());
  CHECK(c.result.io.total() <= 1);
}

TEST_CASE("star enumeration") {
  auto star_of = [](const Graph& g, VertexId v) {
    Engine io(IOConfig{64, 8});
    CollectSink sink;
    const AlgoResult r = star_enumerate(g, v, io, sink);
    CHECK(r.io.peak_mem_words <= 64);
    return sink.sorted();
  };
  const Graph k4 = make(gen_clique(4));
  for (VertexId v = 0; v < 4; ++v) CHECK(star_of(k4, v).size() == 3);
  CHECK(star_of(make(gen_star(6)), 0).empty());
  const Graph k222 = make(gen_tripartite_join(2, 2, 2, 1.0, 0));
  std::vector<Triangle> want;
  for (const Triangle& t : oracle_enumerate(k222)) {
    if (t.a == 3 || t.b == 3 || t.c == 3) want.push_back(t);
  }
  CHECK(want.size() == 4);
  CHECK(star_of(k222, 3) == want);
  CHECK(star_of(k4, 99).empty());
  Engine tiny(IOConfig{32, 8});
  CountSink sink;
  CHECK_THROWS_AS(star_enumerate(k4, 0, tiny, sink), std::invalid_argument);
}

TEST_CASE("star enumeration over many vertices") {
  const Graph g = make(gen_gnm(120, 900, 6));
  const auto all = oracle_enumerate(g);
  for (VertexId v = 0; v < 120; v += 7) {
    Engine io(IOConfig{64, 8});
    CollectSink sink;
    star_enumerate(g, v, io, sink);
    std::vector<Triangle> want;
    for (const Triangle& t : all) {
      if (t.a == v || t.b == v || t.c == v) want.push_back(t);
    }
    CHECK(sink.sorted() == want);
  }
}

TEST_CASE("pivot enumeration") {
  const Graph k4 = make(gen_clique(4));
  {
    Engine io(IOConfig{64, 8});
    CollectSink sink;
    const auto pivots = k4.raw_edges();
    pivot_enumerate(k4, pivots, io, sink);
    CHECK(sink.sorted() == oracle_enumerate(k4));
  }
  const Graph k32 = make(gen_clique(32));
  {
    Engine io(IOConfig{64, 8});
    CountSink sink;
    const AlgoResult r = pivot_enumerate(k32, std::vector<RawEdge>{}, io, sink);
    CHECK(sink.count() == 0);
    CHECK(r.io.total() <= (496 + 7) / 8 + 1);
  }
  {
    const Edge e = k32.edges()[100];
    Engine io(IOConfig{64, 8});
    CollectSink sink;
    pivot_enumerate(k32, std::vector<RawEdge>{{e.v, e.u}}, io, sink);
    const auto want = pivoted_at(k32, e.u, e.v);
    CHECK(sink.sorted() == want);
    // The pair ranked k-th from the bottom closes triangles with the k
    // vertices before it; check against the direct count.
    CHECK(want.size() == std::min(k32.rank(e.u), k32.rank(e.v)));
  }
  {
    const Edge top = k32.edges().back();
    Engine io(IOConfig{64, 8});
    CountSink sink;
    pivot_enumerate(k32, std::vector<RawEdge>{{top.u, top.v}}, io, sink);
    CHECK(sink.count() == 30);
  }
  {
    const Graph path = make(gen_path(5));
    Engine io(IOConfig{64, 8});
    CountSink sink;
    CHECK_THROWS_AS(pivot_enumerate(path, std::vector<RawEdge>{{0, 2}}, io, sink), std::invalid_argument);
  }
  {
    Engine io(IOConfig{64, 32});
    CountSink sink;
    const auto pivots = k4.raw_edges();
    CHECK_THROWS_AS(pivot_enumerate(k4, pivots, io, sink), std::invalid_argument);
  }
}

TEST_CASE("pivot rounds follow the load fraction") {
  const Graph g = make(gen_gnm(100, 700, 3));
  Engine io(IOConfig{64, 8});
  CountSink sink;
  const auto pivots = g.raw_edges();
  const AlgoResult r = pivot_enumerate(g, pivots, io, sink);
  CHECK(r.rounds == (700 + 15) / 16);
  CHECK(sink.count() == oracle_enumerate(g).size());
  CHECK(r.io.peak_mem_words <= 64);
}

TEST_CASE("cache-aware") {
  const Graph k32 = make(gen_clique(32));
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const Run r = run(Algorithm::cache_aware, k32, 64, 8, seed);
    CHECK(r.sorted == oracle_enumerate(k32));
    CHECK(r.sorted.size() == 4960);
    CHECK(r.result.witness_failures == 0);
    CHECK(r.result.io.peak_mem_words <= 64);
  }
  const Graph tri = make(gen_clique(3));
  CHECK(run(Algorithm::cache_aware, tri, 64, 8).order.size() == 1);
  const Graph g = make(gen_gnm(200, 2000, 3));
  const auto want = oracle_enumerate(g);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(run(Algorithm::cache_aware, g, 256, 16, seed).sorted == want);
  }
}

TEST_CASE("cache-aware high-degree vertices are processed once") {
  // Two hubs joined to everything plus a sparse background.
  std::vector<RawEdge> raw = gen_gnm(400, 200, 1);
  for (VertexId v = 0; v < 400; ++v) {
    raw.push_back({400, v});
    raw.push_back({401, v});
  }
  raw.push_back({400, 401});
  const Graph g = make(raw);
  const Run r = run(Algorithm::cache_aware, g, 64, 8, 4);
  CHECK(r.result.high_degree >= 2);
  CHECK(r.sorted == oracle_enumerate(g));
  CHECK(r.result.low_edges < g.n_edges());
  const Run d = run(Algorithm::deterministic, g, 64, 8);
  CHECK(d.sorted == oracle_enumerate(g));
}

TEST_CASE("cache-aware partition keeps every low-degree edge") {
  const Graph g = make(gen_gnm(150, 1500, 2));
  const Run r = run(Algorithm::cache_aware, g, 64, 8, 9);
  CHECK(r.result.colors == 8);  // ceil_pow2(sqrt(1500 / 64))
  CHECK(r.result.high_degree == 0);
  CHECK(r.result.low_edges == 1500);
  const auto pairs = std::uint64_t{1500} * 1499 / 2;
  CHECK(r.result.coloring_stats.x_total < pairs);
}

TEST_CASE("cache-oblivious") {
  const Graph k4 = make(gen_clique(4));
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    CHECK(run(Algorithm::cache_oblivious, k4, 64, 8, seed).sorted == oracle_enumerate(k4));
  }
  const Graph k32 = make(gen_clique(32));
  const Run r = run(Algorithm::cache_oblivious, k32, 64, 8, 5);
  CHECK(r.sorted == oracle_enumerate(k32));
  CHECK(r.result.max_depth <= r.result.depth_cap);
  CHECK(r.result.depth_cap == 4);  // floor(log4 496)
  CHECK(r.result.witness_failures == 0);

  Engine io(IOConfig{64, 8, IoMode::lru});
  io.record_trace(true);
  CountSink sink;
  const AlgoResult traced = cache_oblivious(k32, io, sink);
  const auto at_m = replay_trace(io.trace(), 8);
  const auto at_2m = replay_trace(io.trace(), 16);
  CHECK(at_m.reads == traced.io.reads);
  CHECK(at_2m.reads <= at_m.reads);

  Engine explicit_io(IOConfig{64, 8});
  CHECK_THROWS_AS(cache_oblivious(k4, explicit_io, sink), std::invalid_argument);
}

TEST_CASE("base enumeration") {
  const Graph tri = make(gen_clique(3));
  const Triangle t = oracle_enumerate(tri)[0];
  ColorAssignment xi{{0, 0, 0}, 3};
  xi.colors[t.a] = 1;
  xi.colors[t.b] = 2;
  xi.colors[t.c] = 3;
  auto count = [](const Graph& g, const ColorAssignment& col, ColorVector target) {
    Engine io(IOConfig{64, 8});
    CountSink sink;
    base_enumerate(g, col, target, io, sink);
    return sink.count();
  };
  CHECK(count(tri, xi, {1, 2, 3}) == 1);
  CHECK(count(tri, xi, {1, 3, 2}) == 0);
  const Graph k8 = make(gen_clique(8));
  CHECK(count(k8, constant_coloring(8), {1, 1, 1}) == 56);
  // Summing over every target reproduces the full set.
  const Graph g = make(gen_gnm(60, 400, 8));
  const auto col = assign_colors(sample_four_wise(2, 2, 60), 60);
  std::uint64_t total = 0;
  for (std::uint32_t a = 1; a <= 2; ++a) {
    for (std::uint32_t b = 1; b <= 2; ++b) {
      for (std::uint32_t c = 1; c <= 2; ++c) total += count(g, col, {a, b, c});
    }
  }
  CHECK(total == oracle_enumerate(g).size());
}

TEST_CASE("deterministic") {
  const Graph k32 = make(gen_clique(32));
  const Run a = run(Algorithm::deterministic, k32, 64, 8);
  const Run b = run(Algorithm::deterministic, k32, 64, 8);
  CHECK(a.sorted == oracle_enumerate(k32));
  CHECK(a.order == b.order);
  CHECK(a.result.io == b.result.io);
  CHECK(a.result.derandomize_bound_ok);

  const Graph small = make(gen_clique(5));
  const Run s = run(Algorithm::deterministic, small, 64, 8);
  CHECK(s.result.colors == 1);
  CHECK(s.result.derandomize_levels.empty());

  const Graph g = make(gen_gnm(100, 800, 1));
  const Run r = run(Algorithm::deterministic, g, 128, 8);
  CHECK(r.sorted == oracle_enumerate(g));
  const double bound = std::exp(1.0) * static_cast<double>(r.result.low_edges) * 128;
  CHECK(static_cast<double>(r.result.coloring_stats.x_total) < bound);
  for (const auto& lv : r.result.derandomize_levels) CHECK(lv.potential_ok);
}

TEST_CASE("list sink writes sorted lines") {
  const auto path = std::filesystem::temp_directory_path() / "trienum_list_sink.txt";
  const Graph k4 = make(gen_clique(4));
  {
    ListSink sink(path);
    Engine io(IOConfig{64, 8});
    cache_aware(k4, io, sink);
  }
  std::ifstream in(path);
  std::vector<Triangle> got;
  Triangle t;
  while (in >> t.a >> t.b >> t.c) got.push_back(t);
  CHECK(got == oracle_enumerate(k4));
}

TEST_CASE("algorithm names") {
  for (Algorithm a : {Algorithm::nested_loop, Algorithm::cache_aware, Algorithm::cache_oblivious,
                      Algorithm::deterministic, Algorithm::pivot_all}) {
    CHECK(parse_algorithm(algorithm_name(a)) == a);
  }
  CHECK(required_mode(Algorithm::cache_oblivious) == IoMode::lru);
  CHECK_THROWS_AS(parse_algorithm("quadratic"), std::invalid_argument);
}

}  // TEST_SUITE
