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

// Triangle enumeration algorithms on the simulated machine. Every algorithm
// calls TriangleSink::emit exactly once per triangle of the input graph.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trienum/blockio.hpp"
#include "trienum/coloring.hpp"
#include "trienum/graph.hpp"

namespace trienum {

class TriangleSink {
 public:
  virtual ~TriangleSink() = default;
  void emit(const Triangle& t) {
    ++count_;
    on_triangle(t);
  }
  std::uint64_t count() const { return count_; }

 protected:
  virtual void on_triangle(const Triangle&) {}

 private:
  std::uint64_t count_ = 0;
};

// Counts only.
class CountSink : public TriangleSink {};

// Discards; used for pure I/O measurement.
class NullSink : public TriangleSink {};

class CollectSink : public TriangleSink {
 public:
  const std::vector<Triangle>& triangles() const { return triangles_; }
  std::vector<Triangle> sorted() const;

 protected:
  void on_triangle(const Triangle& t) override { triangles_.push_back(t); }

 private:
  std::vector<Triangle> triangles_;
};

// Writes "a b c" lines, canonically sorted, when finished or destroyed.
class ListSink : public CollectSink {
 public:
  explicit ListSink(std::filesystem::path path) : path_(std::move(path)) {}
  ~ListSink() override;
  void finish();

 private:
  std::filesystem::path path_;
  bool written_ = false;
};

struct ColorVector {
  std::uint32_t c0 = 1;
  std::uint32_t c1 = 1;
  std::uint32_t c2 = 1;
  friend bool operator==(const ColorVector&, const ColorVector&) = default;
};

struct AlgoConfig {
  // Pivot edges loaded per round, as a fraction of M. Needs alpha * M >= B.
  double pivot_load_fraction = 0.25;
  std::uint64_t seed = 0;
  // Counts emissions whose three edges are not held by the emitting step.
  bool check_witness = false;
};

struct AlgoResult {
  IOStats io;
  std::uint64_t triangles = 0;
  std::uint64_t witness_failures = 0;

  // cache_aware / deterministic
  std::uint64_t colors = 0;
  std::uint64_t high_degree = 0;
  std::uint64_t low_edges = 0;
  CollisionStats coloring_stats;
  std::vector<DerandomizeLevel> derandomize_levels;
  bool derandomize_bound_ok = true;

  // cache_oblivious
  std::uint64_t subproblems = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t depth_cap = 0;

  // pivot_enumerate
  std::uint64_t rounds = 0;
};

// In-memory wedge join; triangles sorted canonically.
std::vector<Triangle> oracle_enumerate(const Graph& g);

// Pairs of edge chunks held in memory, joined by a scan of all edges.
AlgoResult nested_loop(const Graph& g, Engine& io, TriangleSink& sink,
                       const AlgoConfig& cfg = {});

// Triangles containing v by sorting and scanning. Requires M >= 5B.
AlgoResult star_enumerate(const Graph& g, VertexId v, Engine& io, TriangleSink& sink,
                          const AlgoConfig& cfg = {});

// Triangles whose pivot edge is in `pivots` (a subset of the graph's edges,
// oriented either way). Throws std::invalid_argument on a non-edge.
AlgoResult pivot_enumerate(const Graph& g, std::span<const RawEdge> pivots, Engine& io,
                           TriangleSink& sink, const AlgoConfig& cfg = {});

AlgoResult cache_aware(const Graph& g, Engine& io, TriangleSink& sink,
                       const AlgoConfig& cfg = {});

// Requires an LRU engine; the recursion itself never reads M or B.
AlgoResult cache_oblivious(const Graph& g, Engine& io, TriangleSink& sink,
                           const AlgoConfig& cfg = {});

// Sort-based wedge join emitting only triangles a < b < c with colors
// (xi(a), xi(b), xi(c)) == target. `xi` is indexed by vertex id.
AlgoResult base_enumerate(const Graph& g, const ColorAssignment& xi, ColorVector target,
                          Engine& io, TriangleSink& sink, const AlgoConfig& cfg = {});

AlgoResult deterministic(const Graph& g, Engine& io, TriangleSink& sink,
                         const AlgoConfig& cfg = {});

enum class Algorithm {
  nested_loop,
  cache_aware,
  cache_oblivious,
  deterministic,
  pivot_all,  // pivot_enumerate with every edge as a pivot
};

Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);
// LRU for cache_oblivious, explicit otherwise.
IoMode required_mode(Algorithm a);

AlgoResult run_algorithm(Algorithm a, const Graph& g, Engine& io, TriangleSink& sink,
                         const AlgoConfig& cfg = {});

}  // namespace trienum
