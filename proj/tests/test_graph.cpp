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

#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "trienum/graph.hpp"

using namespace trienum;

TEST_SUITE("graph") {

TEST_CASE("canonicalize drops loops and duplicates") {
  const std::vector<RawEdge> raw = {{1, 0}, {0, 1}, {2, 2}};
  const Graph g = canonicalize(raw);
  CHECK(g.n_edges() == 1);
  CHECK(g.edges()[0] == Edge{0, 1});
  const Graph empty = canonicalize(std::vector<RawEdge>{});
  CHECK(empty.n_edges() == 0);
  CHECK(empty.n_vertices() == 0);
}

TEST_CASE("K4 in any order gives 6 sorted oriented edges") {
  std::vector<RawEdge> raw = {{3, 2}, {0, 3}, {1, 0}, {2, 1}, {3, 1}, {2, 0}};
  const Graph g = canonicalize(raw);
  CHECK(g.n_edges() == 6);
  CHECK(g.packed_rank_edges() == canonicalize(gen_clique(4)).packed_rank_edges());
  const auto p = g.packed_rank_edges();
  CHECK(std::is_sorted(p.begin(), p.end()));
}

TEST_CASE("star center comes last and every edge points at it") {
  const Graph g = canonicalize(gen_star(5));
  CHECK(g.rank(0) == 5);
  for (const Edge& e : g.edges()) CHECK(e.v == 0);
  // Leaves tie on degree 1, so raw id decides.
  for (VertexId leaf = 1; leaf < 5; ++leaf) CHECK(g.precedes(leaf, leaf + 1));
}

TEST_CASE("canonical orientation, degree sum and idempotence") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = canonicalize(gen_gnm(60, 300, seed));
    std::uint64_t sum = 0;
    for (auto d : g.degrees()) sum += d;
    CHECK(sum == 2 * g.n_edges());
    for (const Edge& e : g.edges()) {
      const bool ok = g.degree(e.u) < g.degree(e.v) || (g.degree(e.u) == g.degree(e.v) && e.u < e.v);
      CHECK(ok);
    }
    const Graph again = canonicalize(g.raw_edges());
    CHECK(again.packed_rank_edges() == g.packed_rank_edges());
    CHECK(std::equal(again.edges().begin(), again.edges().end(), g.edges().begin(), g.edges().end()));
  }
}

TEST_CASE("clique sizes") {
  CHECK(gen_clique(3).size() == 3);
  CHECK(testing::brute_triangles(canonicalize(gen_clique(3))).size() == 1);
  CHECK(testing::brute_triangles(canonicalize(gen_clique(4))).size() == 4);
  CHECK(gen_clique(32).size() == 496);
  CHECK(testing::brute_triangles(canonicalize(gen_clique(32))).size() == 4960);
}

TEST_CASE("gnm") {
  CHECK(canonicalize(gen_gnm(10, 45, 1)).n_edges() == 45);
  CHECK(canonicalize(gen_gnm(10, 45, 99)).packed_rank_edges() ==
        canonicalize(gen_clique(10)).packed_rank_edges());
  CHECK(gen_gnm(100, 0, 4).empty());
  CHECK(gen_gnm(50, 200, 7) == gen_gnm(50, 200, 7));
  CHECK(gen_gnm(50, 200, 7) != gen_gnm(50, 200, 8));
  const auto e = gen_gnm(50, 200, 7);
  std::set<RawEdge> distinct(e.begin(), e.end());
  CHECK(distinct.size() == 200);
  for (const RawEdge& x : e) CHECK(x.a < x.b);
  CHECK(gen_gnm(20, 180, 1).size() == 180);  // complement branch
  CHECK_THROWS_AS(gen_gnm(10, 46, 0), std::invalid_argument);
}

TEST_CASE("tripartite join") {
  const Graph k222 = canonicalize(gen_tripartite_join(2, 2, 2, 1.0, 0));
  CHECK(k222.n_edges() == 12);
  CHECK(testing::brute_triangles(k222).size() == 8);
  CHECK(gen_tripartite_join(5, 5, 5, 0.0, 3).empty());
  CHECK(testing::brute_triangles(canonicalize(gen_tripartite_join(1, 1, 1, 1.0, 0))).size() == 1);
  const auto some = gen_tripartite_join(6, 7, 8, 0.5, 2);
  for (const RawEdge& e : some) {
    auto part = [](VertexId v) { return v < 6 ? 0 : v < 13 ? 1 : 2; };
    CHECK(part(e.a) != part(e.b));
  }
  CHECK_THROWS_AS(gen_tripartite_join(1, 1, 1, 1.5, 0), std::invalid_argument);
}

TEST_CASE("path, cycle, star") {
  CHECK(gen_path(5).size() == 4);
  CHECK(gen_cycle(5).size() == 5);
  CHECK(gen_star(7).size() == 7);
  CHECK(gen_path(0).empty());
  CHECK(gen_cycle(2).size() == 1);
}

TEST_CASE("text format") {
  const Graph k3 = canonicalize(parse_edge_list("0 1\n1 2\n0 2\n"));
  CHECK(k3.n_edges() == 3);
  CHECK(parse_edge_list("# header\n0 1 # trailing\n\n  2 3\n").size() == 2);
  try {
    parse_edge_list("0 1\n0 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("-1 2\n"), ParseError);
}

TEST_CASE("file round trips") {
  const auto dir = std::filesystem::temp_directory_path();
  const Graph g = canonicalize(gen_gnm(40, 150, 2));
  save(g, dir / "trienum_graph_test.txt");
  CHECK(canonicalize(load(dir / "trienum_graph_test.txt")).packed_rank_edges() == g.packed_rank_edges());
  save_binary(g, dir / "trienum_graph_test.bin");
  const auto back = load_binary(dir / "trienum_graph_test.bin");
  CHECK(back == g.raw_edges());
  {
    std::ifstream in(dir / "trienum_graph_test.bin", std::ios::binary);
    unsigned char head[16];
    in.read(reinterpret_cast<char*>(head), 16);
    CHECK(head[0] == g.n_vertices());
    CHECK(head[8] == 150);
  }
  CHECK_THROWS(load(dir / "definitely_missing_trienum.txt"));
}

}  // TEST_SUITE
