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

// Vertex colorings: an exactly 4-wise independent hash family, an almost
// 4-wise independent small-bias family, the collision statistic X, and the
// greedy bit-by-bit derandomizer built on top of them.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "trienum/gf2.hpp"
#include "trienum/graph.hpp"

namespace trienum {

bool is_power_of_two(std::uint64_t c);
// Smallest power of two >= x (1 for x <= 1).
std::uint64_t ceil_power_of_two(double x);
// log2 of a power of two.
int log2_exact(std::uint64_t c);

// h(x) = a0 + a1 x + a2 x^2 + a3 x^3 over GF(2^k); color = 1 + low log2(c)
// bits of h(v). Exactly 4-wise independent over the coefficient choice.
class FourWiseHash {
 public:
  FourWiseHash(std::array<gf2::Poly, 4> coeffs, int k, std::uint64_t c,
               std::uint64_t seed = 0);

  std::uint64_t colors() const { return c_; }
  int field_bits() const { return field_.bits(); }
  std::uint64_t seed() const { return seed_; }
  const std::array<gf2::Poly, 4>& coefficients() const { return a_; }

  gf2::Poly evaluate(VertexId v) const;
  std::uint32_t operator()(VertexId v) const {
    return 1 + static_cast<std::uint32_t>(evaluate(v) & (c_ - 1));
  }

 private:
  gf2::Field field_;
  std::array<gf2::Poly, 4> a_;
  std::uint64_t c_;
  std::uint64_t seed_;
};

// Field width k = max(ceil(log2 universe), log2 c, 1). Throws
// std::invalid_argument unless c >= 2 is a power of two.
FourWiseHash sample_four_wise(std::uint64_t seed, std::uint64_t c, std::uint64_t universe);

// b_j(v) = <y_j, h(v)> over GF(2), where h(v) = (x, x^3) in GF(2^q)^2 with
// x = v + 1 (any four distinct h(v) are linearly independent), and y_j runs
// over the LFSR small-bias space: y_j is the output of the shift register with
// feedback polynomial f (irreducible, degree m) and start state s. The degree
// m is the least one whose bias bound floor((L-1)/m) / #irreducibles(m) is at
// most alpha/16, which keeps every 4-bit pattern within (1+alpha)/16.
class SmallBiasFamily {
 public:
  SmallBiasFamily(double alpha, std::uint64_t universe);

  std::uint64_t size() const { return masks_.size(); }
  double alpha() const { return alpha_; }
  std::uint64_t universe() const { return universe_; }
  int test_bits() const { return 2 * q_; }
  int seed_degree() const { return m_; }
  double bias_bound() const { return bias_; }

  std::uint64_t embed(VertexId v) const;
  std::uint64_t mask(std::size_t j) const { return masks_[j]; }
  bool operator()(std::size_t j, VertexId v) const;

 private:
  double alpha_;
  std::uint64_t universe_;
  int q_;
  int m_ = 0;
  double bias_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> embedding_;
};

SmallBiasFamily enumerate_small_bias(double alpha, std::uint64_t universe);

// Colors in {1..c}, indexed by vertex id.
struct ColorAssignment {
  std::vector<std::uint32_t> colors;
  std::uint64_t c = 1;

  std::uint32_t operator[](VertexId v) const { return colors[v]; }
  std::size_t size() const { return colors.size(); }
  // Throws std::invalid_argument on a color outside {1..c}.
  void validate() const;
  friend bool operator==(const ColorAssignment&, const ColorAssignment&) = default;
};

ColorAssignment constant_coloring(std::uint64_t n_vertices);
ColorAssignment assign_colors(const FourWiseHash& xi, std::uint64_t n_vertices);

// xi'(v) = 2 xi(v) - b(v); the color count doubles.
ColorAssignment refine_bit(const ColorAssignment& xi,
                           const std::function<bool(VertexId)>& b);

// "v color" lines.
std::string serialize(const ColorAssignment& xi);
ColorAssignment parse_colors(const std::string& text, std::uint64_t c);

struct CollisionStats {
  std::uint64_t x_total = 0;
  std::uint64_t x_adj = 0;
  std::uint64_t x_nonadj = 0;
  friend bool operator==(const CollisionStats&, const CollisionStats&) = default;
};

// x_total = sum C(size, 2); x_adj = sum C(inc, 2) over (vertex, bucket)
// incidence counts. Throws std::invalid_argument when the incidences do not
// add up to twice the bucket sizes or x_adj exceeds x_total.
CollisionStats collision_statistic(std::span<const std::uint64_t> bucket_sizes,
                                   std::span<const std::uint64_t> incidence);

// Buckets E_{t1,t2} = {(u,v) : xi(u) = t1, xi(v) = t2} of oriented edges.
CollisionStats collision_statistic(std::span<const RawEdge> oriented_edges,
                                   const ColorAssignment& xi);
CollisionStats collision_statistic(const Graph& g, const ColorAssignment& xi);

// Collision statistics of refine_bit(xi, b_j) for every member j of a family.
struct CandidateScores {
  std::vector<std::uint64_t> x_total;
  std::vector<std::uint64_t> x_adj;
};

// Uses Walsh-Hadamard transforms over the 2^L test space when L <= 22, and a
// direct evaluation of every candidate otherwise.
CandidateScores score_candidates(std::span<const RawEdge> oriented_edges,
                                 const ColorAssignment& xi, const SmallBiasFamily& family);
CandidateScores score_candidates_direct(std::span<const RawEdge> oriented_edges,
                                        const ColorAssignment& xi,
                                        const SmallBiasFamily& family);

struct DerandomizeLevel {
  int level = 0;
  std::size_t chosen = 0;
  CollisionStats stats;
  double potential = 0;       // 4^i X_nonadj / c^2 + 2^i X_adj / c
  double previous = 0;        // the same for level i - 1
  double family_mean = 0;     // mean potential over the family
  double potential_bound = 0; // (1 + alpha)^i E M
  bool potential_ok = false;
};

struct Derandomized {
  ColorAssignment coloring;
  CollisionStats stats;
  double alpha = 0;
  std::uint64_t family_size = 0;
  double initial_potential = 0;
  std::vector<DerandomizeLevel> levels;
  // X < e E M.
  bool bound_ok = false;
};

// Fixes log2(c) bits of the coloring one at a time, each time picking the
// family member of least potential (lowest index on ties), with alpha =
// 1/log2(c). `universe` bounds the vertex ids. M only enters the recorded
// bounds. Throws std::logic_error if a level exceeds (1 + alpha) times the
// previous potential, which the averaging argument rules out.
Derandomized greedy_derandomize(std::uint64_t universe,
                                std::span<const RawEdge> oriented_edges,
                                std::uint64_t c, std::uint64_t M);
Derandomized greedy_derandomize(const Graph& g, std::uint64_t c, std::uint64_t M);

}  // namespace trienum
