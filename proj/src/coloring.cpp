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

#include "trienum/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "trienum/random.hpp"

namespace trienum {

bool is_power_of_two(std::uint64_t c) { return c != 0 && (c & (c - 1)) == 0; }

std::uint64_t ceil_power_of_two(double x) {
  std::uint64_t c = 1;
  while (static_cast<double>(c) < x) c *= 2;
  return c;
}

int log2_exact(std::uint64_t c) {
  if (!is_power_of_two(c)) throw std::invalid_argument("not a power of two");
  return std::countr_zero(c);
}

namespace {

// Smallest k with 2^k >= n.
int ceil_log2(std::uint64_t n) {
  int k = 0;
  while (k < 64 && (std::uint64_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

FourWiseHash::FourWiseHash(std::array<gf2::Poly, 4> coeffs, int k, std::uint64_t c,
                           std::uint64_t seed)
    : field_(k), a_(coeffs), c_(c), seed_(seed) {
  if (c < 2 || !is_power_of_two(c)) {
    throw std::invalid_argument("FourWiseHash: c must be a power of two >= 2");
  }
  if (log2_exact(c) > k) throw std::invalid_argument("FourWiseHash: c exceeds 2^k");
  const gf2::Poly mask = (gf2::Poly{1} << k) - 1;
  for (gf2::Poly a : a_) {
    if ((a & ~mask) != 0) throw std::invalid_argument("FourWiseHash: coefficient wider than k");
  }
}

gf2::Poly FourWiseHash::evaluate(VertexId v) const {
  if (v >> field_.bits() != 0) throw std::out_of_range("FourWiseHash: vertex outside field");
  gf2::Poly r = a_[3];
  for (int i = 2; i >= 0; --i) r = field_.mul(r, v) ^ a_[i];
  return r;
}

FourWiseHash sample_four_wise(std::uint64_t seed, std::uint64_t c, std::uint64_t universe) {
  if (c < 2 || !is_power_of_two(c)) {
    throw std::invalid_argument("sample_four_wise: c must be a power of two >= 2");
  }
  const int k = std::max({ceil_log2(universe), log2_exact(c), 1});
  if (k > 32) throw std::invalid_argument("sample_four_wise: universe too large");
  Rng rng(seed);
  const gf2::Poly mask = (gf2::Poly{1} << k) - 1;
  std::array<gf2::Poly, 4> a{};
  for (auto& x : a) x = rng.next() & mask;
  return FourWiseHash(a, k, c, seed);
}

namespace {

// Number of monic irreducible polynomials of degree m over GF(2).
std::uint64_t count_irreducible(int m) {
  auto mobius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
    return n > 1 ? -result : result;
  };
  std::int64_t sum = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d == 0) sum += mobius(d) * (std::int64_t{1} << (m / d));
  }
  return static_cast<std::uint64_t>(sum / m);
}

constexpr std::uint64_t kMaxFamily = std::uint64_t{1} << 26;

}  // namespace

SmallBiasFamily::SmallBiasFamily(double alpha, std::uint64_t universe)
    : alpha_(alpha), universe_(universe) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("SmallBiasFamily: alpha must be in (0, 1]");
  }
  q_ = 1;
  while (q_ < 32 && (std::uint64_t{1} << q_) <= universe) ++q_;
  if ((std::uint64_t{1} << q_) <= universe) {
    throw std::invalid_argument("SmallBiasFamily: universe too large");
  }
  const int L = 2 * q_;
  for (int m = 1;; ++m) {
    const std::uint64_t n_m = count_irreducible(m);
    const double bias = static_cast<double>((L - 1) / m) / static_cast<double>(n_m);
    if (bias <= alpha / 16.0) {
      m_ = m;
      bias_ = bias;
      break;
    }
    if (m >= 24 || n_m << m > kMaxFamily) {
      throw std::invalid_argument("SmallBiasFamily: alpha too small for this universe");
    }
  }

  const std::vector<gf2::Poly> feedback = gf2::irreducibles(m_);
  const std::uint64_t states = std::uint64_t{1} << m_;
  masks_.reserve(feedback.size() * states);
  std::vector<gf2::Poly> powers(L);
  for (gf2::Poly f : feedback) {
    // Output bit i is <s, x^i mod f>.
    gf2::Poly p = 1;
    for (int i = 0; i < L; ++i) {
      powers[i] = p;
      p = gf2::mod(p << 1, f);
    }
    for (std::uint64_t s = 0; s < states; ++s) {
      std::uint64_t y = 0;
      for (int i = 0; i < L; ++i) {
        y |= static_cast<std::uint64_t>(std::popcount(s & powers[i]) & 1) << i;
      }
      masks_.push_back(y);
    }
  }

  const gf2::Field field(q_);
  embedding_.resize(universe);
  for (VertexId v = 0; v < universe; ++v) {
    const gf2::Poly x = v + 1;
    embedding_[v] = x | (field.mul(field.mul(x, x), x) << q_);
  }
}

std::uint64_t SmallBiasFamily::embed(VertexId v) const {
  if (v >= universe_) throw std::out_of_range("SmallBiasFamily: vertex outside universe");
  return embedding_[v];
}

bool SmallBiasFamily::operator()(std::size_t j, VertexId v) const {
  return (std::popcount(masks_[j] & embed(v)) & 1) != 0;
}

SmallBiasFamily enumerate_small_bias(double alpha, std::uint64_t universe) {
  return SmallBiasFamily(alpha, universe);
}

void ColorAssignment::validate() const {
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] < 1 || colors[v] > c) {
      throw std::invalid_argument("color of vertex " + std::to_string(v) + " out of range");
    }
  }
}

ColorAssignment constant_coloring(std::uint64_t n_vertices) {
  return ColorAssignment{std::vector<std::uint32_t>(n_vertices, 1), 1};
}

ColorAssignment assign_colors(const FourWiseHash& xi, std::uint64_t n_vertices) {
  ColorAssignment out{std::vector<std::uint32_t>(n_vertices), xi.colors()};
  for (VertexId v = 0; v < n_vertices; ++v) out.colors[v] = xi(v);
  return out;
}

ColorAssignment refine_bit(const ColorAssignment& xi, const std::function<bool(VertexId)>& b) {
  ColorAssignment out{std::vector<std::uint32_t>(xi.size()), 2 * xi.c};
  for (VertexId v = 0; v < xi.size(); ++v) out.colors[v] = 2 * xi.colors[v] - (b(v) ? 1 : 0);
  return out;
}

std::string serialize(const ColorAssignment& xi) {
  std::ostringstream out;
  for (std::size_t v = 0; v < xi.size(); ++v) out << v << ' ' << xi.colors[v] << '\n';
  return out.str();
}

ColorAssignment parse_colors(const std::string& text, std::uint64_t c) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (const RawEdge& e : parse_edge_list(text)) pairs.emplace_back(e.a, e.b);
  std::sort(pairs.begin(), pairs.end());
  ColorAssignment out{std::vector<std::uint32_t>(pairs.size()), c};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first != i) {
      throw std::invalid_argument("coloring must list vertices 0..n-1 exactly once");
    }
    out.colors[i] = static_cast<std::uint32_t>(pairs[i].second);
  }
  out.validate();
  return out;
}

namespace {

std::uint64_t pairs_of(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

CollisionStats collision_statistic(std::span<const std::uint64_t> bucket_sizes,
                                   std::span<const std::uint64_t> incidence) {
  CollisionStats s;
  std::uint64_t edges = 0;
  std::uint64_t incidences = 0;
  for (std::uint64_t n : bucket_sizes) {
    s.x_total += pairs_of(n);
    edges += n;
  }
  for (std::uint64_t n : incidence) {
    s.x_adj += pairs_of(n);
    incidences += n;
  }
  if (incidences != 2 * edges || s.x_adj > s.x_total) {
    throw std::invalid_argument("collision_statistic: incidence does not match buckets");
  }
  s.x_nonadj = s.x_total - s.x_adj;
  return s;
}

CollisionStats collision_statistic(std::span<const RawEdge> oriented_edges,
                                   const ColorAssignment& xi) {
  // Bucket key (xi(u), xi(v)); incidence key (vertex, bucket).
  std::vector<std::uint64_t> buckets;
  std::vector<std::pair<VertexId, std::uint64_t>> inc;
  buckets.reserve(oriented_edges.size());
  inc.reserve(2 * oriented_edges.size());
  for (const RawEdge& e : oriented_edges) {
    const std::uint64_t key = (std::uint64_t{xi[e.a]} << 32) | xi[e.b];
    buckets.push_back(key);
    inc.emplace_back(e.a, key);
    inc.emplace_back(e.b, key);
  }
  auto run_lengths = [](auto& items) {
    std::sort(items.begin(), items.end());
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < items.size();) {
      std::size_t j = i;
      while (j < items.size() && items[j] == items[i]) ++j;
      out.push_back(j - i);
      i = j;
    }
    return out;
  };
  const auto sizes = run_lengths(buckets);
  const auto incidence = run_lengths(inc);
  return collision_statistic(sizes, incidence);
}

CollisionStats collision_statistic(const Graph& g, const ColorAssignment& xi) {
  const auto edges = g.raw_edges();
  return collision_statistic(edges, xi);
}

}  // namespace trienum
