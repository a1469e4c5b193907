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
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "trienum/coloring.hpp"

using namespace trienum;

TEST_SUITE("coloring") {

TEST_CASE("GF(2) arithmetic") {
  // x^2 + x + 1 is the only irreducible quadratic; counts by degree.
  CHECK(gf2::irreducibles(1).size() == 2);
  CHECK(gf2::irreducibles(2) == std::vector<gf2::Poly>{0b111});
  CHECK(gf2::irreducibles(3).size() == 2);
  CHECK(gf2::irreducibles(4).size() == 3);
  CHECK(gf2::irreducibles(5).size() == 6);
  CHECK(gf2::irreducibles(8).size() == 30);
  CHECK_FALSE(gf2::is_irreducible(0b101));  // (x + 1)^2
  CHECK(gf2::is_irreducible(0b1011));
  CHECK(gf2::clmul(0b11, 0b11) == 0b101);
  CHECK(gf2::mod(0b1000, 0b1011) == 0b011);
  CHECK(gf2::degree(0) == -1);
  CHECK(gf2::degree(0b1000) == 3);
  const gf2::Field f(8);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const gf2::Poly a = rng() & 0xff, b = rng() & 0xff, c = rng() & 0xff;
    CHECK(f.mul(a, b) == f.mul(b, a));
    CHECK(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
    CHECK(f.mul(a, 1) == a);
  }
  // Every nonzero element has an inverse.
  for (gf2::Poly a = 1; a < 256; ++a) {
    bool found = false;
    for (gf2::Poly b = 1; b < 256 && !found; ++b) found = f.mul(a, b) == 1;
    CHECK(found);
  }
}

TEST_CASE("powers of two") {
  CHECK(ceil_power_of_two(0.3) == 1);
  CHECK(ceil_power_of_two(4.0) == 4);
  CHECK(ceil_power_of_two(4.01) == 8);
  CHECK(log2_exact(64) == 6);
  CHECK_THROWS(log2_exact(12));
}

TEST_CASE("sample_four_wise") {
  const auto h1 = sample_four_wise(42, 8, 1000);
  const auto h2 = sample_four_wise(42, 8, 1000);
  CHECK(h1.coefficients() == h2.coefficients());
  CHECK(h1.field_bits() == 10);
  CHECK(sample_four_wise(1, 4, 2).field_bits() == 2);
  for (VertexId v = 0; v < 1000; ++v) {
    CHECK(h1(v) >= 1);
    CHECK(h1(v) <= 8);
  }
  CHECK_THROWS_AS(sample_four_wise(1, 6, 100), std::invalid_argument);
  CHECK_THROWS_AS(sample_four_wise(1, 1, 100), std::invalid_argument);
}

TEST_CASE("exact 4-wise independence over GF(2^4)") {
  // Every coefficient vector once; each 4-bit color pattern of four distinct
  // points must occur 2^16 / 16 = 4096 times.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    std::array<VertexId, 4> pts{};
    std::vector<VertexId> pool(16);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::copy_n(pool.begin(), 4, pts.begin());
    std::array<int, 16> hist{};
    for (gf2::Poly code = 0; code < (1u << 16); ++code) {
      const FourWiseHash h({code & 15, (code >> 4) & 15, (code >> 8) & 15, code >> 12}, 4, 2);
      int pattern = 0;
      for (int i = 0; i < 4; ++i) pattern |= static_cast<int>(h(pts[i]) - 1) << i;
      ++hist[pattern];
    }
    for (int count : hist) CHECK(count == 4096);
  }
}

TEST_CASE("single-vertex colors are uniform across seeds") {
  const int c = 4;
  const int seeds = 10000;
  std::array<int, c> hist{};
  for (int s = 0; s < seeds; ++s) ++hist[sample_four_wise(s, c, 300)(17) - 1];
  double chi2 = 0;
  for (int h : hist) chi2 += std::pow(h - seeds / c, 2.0) / (seeds / c);
  CHECK(chi2 < 16.27);  // 3 degrees of freedom, p = 0.001
}

TEST_CASE("collision statistic from bucket sizes") {
  const std::vector<std::uint64_t> one{2};
  CHECK(collision_statistic(one, std::vector<std::uint64_t>{1, 1, 1, 1}) == CollisionStats{1, 0, 1});
  const std::vector<std::uint64_t> three{3};
  CHECK(collision_statistic(three, std::vector<std::uint64_t>{3, 1, 1, 1}) == CollisionStats{3, 3, 0});
  CHECK_THROWS_AS(collision_statistic(one, std::vector<std::uint64_t>{1, 1}), std::invalid_argument);
}

TEST_CASE("collision statistic equals the pair-enumeration oracle") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = canonicalize(gen_gnm(50, 300, seed));
    const auto edges = testing::oriented(g);
    const auto xi = assign_colors(sample_four_wise(seed + 100, 4, 50), 50);
    CHECK(collision_statistic(edges, xi) == testing::brute_collisions(edges, xi));
    CHECK(collision_statistic(g, xi) == testing::brute_collisions(edges, xi));
  }
  const Graph star = canonicalize(gen_star(3));
  CHECK(collision_statistic(star, constant_coloring(4)) == CollisionStats{3, 3, 0});
}

TEST_CASE("small-bias family") {
  const SmallBiasFamily f1(1.0, 16);
  const SmallBiasFamily f2(0.5, 16);
  CHECK(f1.size() == 2304);
  CHECK(f2.size() == 28672);
  CHECK(f2.size() >= f1.size());
  CHECK(SmallBiasFamily(0.25, 16).size() >= f2.size());
  CHECK(f1.bias_bound() <= 1.0 / 16);
  CHECK_THROWS_AS(SmallBiasFamily(0.0, 16), std::invalid_argument);
  CHECK_THROWS_AS(SmallBiasFamily(1.5, 16), std::invalid_argument);
  // One-point marginals.
  for (const SmallBiasFamily* f : {&f1, &f2}) {
    for (VertexId v = 0; v < 16; ++v) {
      std::uint64_t ones = 0;
      for (std::size_t j = 0; j < f->size(); ++j) ones += (*f)(j, v);
      const double frac = static_cast<double>(ones) / f->size();
      CHECK(frac <= (1 + f->alpha()) / 2);
      CHECK(frac >= (1 - f->alpha()) / 2);
    }
  }
}

TEST_CASE("refine_bit") {
  const auto one = constant_coloring(5);
  CHECK(refine_bit(one, [](VertexId) { return false; }).colors == std::vector<std::uint32_t>(5, 2));
  CHECK(refine_bit(one, [](VertexId) { return true; }).colors == std::vector<std::uint32_t>(5, 1));
  const auto xi = assign_colors(sample_four_wise(3, 2, 40), 40);
  const auto next = refine_bit(xi, [](VertexId v) { return v % 3 == 0; });
  CHECK(next.c == 4);
  for (VertexId v = 0; v < 40; ++v) {
    CHECK((next[v] == 2 * xi[v] - 1 || next[v] == 2 * xi[v]));
  }
}

TEST_CASE("color table text format") {
  const auto xi = assign_colors(sample_four_wise(5, 8, 30), 30);
  CHECK(parse_colors(serialize(xi), 8) == xi);
  CHECK_THROWS(parse_colors("0 9\n", 8));
  ColorAssignment bad{{1, 0}, 2};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("spectral candidate scores equal direct evaluation") {
  const Graph g = canonicalize(gen_gnm(40, 200, 4));
  const auto edges = testing::oriented(g);
  const SmallBiasFamily fam(1.0, 40);
  for (const ColorAssignment& xi : {constant_coloring(40), assign_colors(sample_four_wise(1, 2, 40), 40)}) {
    const auto a = score_candidates(edges, xi, fam);
    const auto b = score_candidates_direct(edges, xi, fam);
    CHECK(a.x_total == b.x_total);
    CHECK(a.x_adj == b.x_adj);
  }
}

TEST_CASE("derandomizer with c = 2 does no worse than the family average") {
  const Graph g = canonicalize(gen_gnm(20, 60, 1));
  const auto edges = testing::oriented(g);
  const auto d = greedy_derandomize(g, 2, 64);
  const SmallBiasFamily fam(1.0, 20);
  double sum = 0;
  for (std::size_t j = 0; j < fam.size(); ++j) {
    const auto xi = refine_bit(constant_coloring(20), [&](VertexId v) { return fam(j, v); });
    sum += static_cast<double>(testing::brute_collisions(edges, xi).x_total);
  }
  const double mean = sum / fam.size();
  CHECK(static_cast<double>(d.stats.x_total) <= mean + 1e-9);
  CHECK(d.levels.size() == 1);
  CHECK(d.levels[0].family_mean == doctest::Approx(mean));
}

TEST_CASE("derandomizer bounds") {
  SUBCASE("K4, slack bound") {
    const Graph g = canonicalize(gen_clique(4));
    const auto d = greedy_derandomize(g, 2, 100);
    CHECK(d.bound_ok);
    CHECK(static_cast<double>(d.stats.x_total) < std::exp(1.0) * 6 * 100);
  }
  SUBCASE("G(64, 512), c = 4, M = E / c^2") {
    const Graph g = canonicalize(gen_gnm(64, 512, 5));
    const std::uint64_t M = 512 / 16;
    const auto d = greedy_derandomize(g, 4, M);
    CHECK(static_cast<double>(d.stats.x_total) < std::exp(1.0) * 512 * M);
    CHECK(d.bound_ok);
    for (const auto& lv : d.levels) CHECK(lv.potential_ok);
    CHECK(d.stats == testing::brute_collisions(testing::oriented(g), d.coloring));
    const auto again = greedy_derandomize(g, 4, M);
    CHECK(again.coloring == d.coloring);
  }
}

}  // TEST_SUITE
