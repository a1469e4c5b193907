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

// Simple undirected graphs in degree-ordered canonical form, generators and
// file formats.

#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trienum {

using VertexId = std::uint64_t;

// Position of a vertex in the degree order (degree ascending, ties by id).
using Rank = std::uint32_t;

struct RawEdge {
  VertexId a;
  VertexId b;
  friend auto operator<=>(const RawEdge&, const RawEdge&) = default;
};

// u precedes v in the degree order.
struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// a < b < c in the degree order; a is the cone vertex, {b, c} the pivot edge.
struct Triangle {
  VertexId a;
  VertexId b;
  VertexId c;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Immutable canonical graph. Vertex ids are kept as given; the vertex range
// is [0, max id + 1), so isolated ids below the maximum are vertices of
// degree zero.
class Graph {
 public:
  Graph() = default;

  std::uint64_t n_vertices() const { return degrees_.size(); }
  std::uint64_t n_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::uint64_t degree(VertexId v) const { return degrees_.at(v); }
  std::span<const std::uint64_t> degrees() const { return degrees_; }
  std::uint64_t max_degree() const;

  Rank rank(VertexId v) const { return rank_of_.at(v); }
  VertexId vertex_at(Rank r) const { return vertex_of_[r]; }
  bool precedes(VertexId x, VertexId y) const { return rank_of_[x] < rank_of_[y]; }

  // Orders three vertices of a triangle by degree order.
  Triangle make_triangle(VertexId x, VertexId y, VertexId z) const;

  // Edges as (rank(u) << 32 | rank(v)), ascending; this is the on-disk form.
  std::vector<std::uint64_t> packed_rank_edges() const;

  // Raw edges in canonical order.
  std::vector<RawEdge> raw_edges() const;

 private:
  friend Graph canonicalize(std::span<const RawEdge> raw);

  std::vector<Edge> edges_;
  std::vector<std::uint64_t> degrees_;
  std::vector<Rank> rank_of_;
  std::vector<VertexId> vertex_of_;
};

// Drops self-loops, merges duplicates, computes the degree order, orients and
// sorts edges. Deterministic.
Graph canonicalize(std::span<const RawEdge> raw);

// Packs ranks into one word: high half = lower-ranked endpoint.
inline std::uint64_t pack_edge(Rank lo, Rank hi) {
  return (std::uint64_t{lo} << 32) | hi;
}
inline Rank edge_lo(std::uint64_t e) { return static_cast<Rank>(e >> 32); }
inline Rank edge_hi(std::uint64_t e) { return static_cast<Rank>(e); }

// Generators. All return raw edges; canonicalize separately.
std::vector<RawEdge> gen_clique(std::uint64_t n);
std::vector<RawEdge> gen_gnm(std::uint64_t n, std::uint64_t m, std::uint64_t seed);
std::vector<RawEdge> gen_tripartite_join(std::uint64_t a, std::uint64_t b,
                                         std::uint64_t c, double density,
                                         std::uint64_t seed);
std::vector<RawEdge> gen_path(std::uint64_t n);
std::vector<RawEdge> gen_cycle(std::uint64_t n);
std::vector<RawEdge> gen_star(std::uint64_t leaves);

// Text format: one "u v" pair per line; '#' starts a comment; blank lines ok.
std::vector<RawEdge> parse_edge_list(const std::string& text);
std::vector<RawEdge> load(const std::filesystem::path& path);
void save(const Graph& g, const std::filesystem::path& path);

// Binary format: n_vertices, n_edges as u64 little endian, then (u, v) pairs
// as u64 little endian in canonical order.
void save_binary(const Graph& g, const std::filesystem::path& path);
std::vector<RawEdge> load_binary(const std::filesystem::path& path);

// Number of triangles of K_n etc. without enumeration.
inline std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline std::uint64_t choose3(std::uint64_t n) {
  return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3;
}

}  // namespace trienum
