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

#include "trienum/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "trienum/random.hpp"

namespace trienum {

std::uint64_t Graph::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

Triangle Graph::make_triangle(VertexId x, VertexId y, VertexId z) const {
  std::array<VertexId, 3> t{x, y, z};
  std::sort(t.begin(), t.end(),
            [&](VertexId p, VertexId q) { return rank_of_[p] < rank_of_[q]; });
  return Triangle{t[0], t[1], t[2]};
}

std::vector<std::uint64_t> Graph::packed_rank_edges() const {
  std::vector<std::uint64_t> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(pack_edge(rank_of_[e.u], rank_of_[e.v]));
  return out;
}

std::vector<RawEdge> Graph::raw_edges() const {
  std::vector<RawEdge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(RawEdge{e.u, e.v});
  return out;
}

Graph canonicalize(std::span<const RawEdge> raw) {
  std::vector<RawEdge> norm;
  norm.reserve(raw.size());
  VertexId max_id = 0;
  bool any = false;
  for (const RawEdge& e : raw) {
    if (e.a == e.b) continue;
    norm.push_back(RawEdge{std::min(e.a, e.b), std::max(e.a, e.b)});
    max_id = std::max(max_id, std::max(e.a, e.b));
    any = true;
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  const std::uint64_t n = any ? max_id + 1 : 0;
  if (n > std::numeric_limits<Rank>::max()) {
    throw std::invalid_argument("canonicalize: more than 2^32-1 vertices");
  }
  g.degrees_.assign(n, 0);
  for (const RawEdge& e : norm) {
    ++g.degrees_[e.a];
    ++g.degrees_[e.b];
  }
  g.vertex_of_.resize(n);
  std::iota(g.vertex_of_.begin(), g.vertex_of_.end(), VertexId{0});
  std::stable_sort(g.vertex_of_.begin(), g.vertex_of_.end(),
                   [&](VertexId x, VertexId y) { return g.degrees_[x] < g.degrees_[y]; });
  g.rank_of_.resize(n);
  for (std::uint64_t r = 0; r < n; ++r) g.rank_of_[g.vertex_of_[r]] = static_cast<Rank>(r);

  std::vector<std::uint64_t> packed;
  packed.reserve(norm.size());
  for (const RawEdge& e : norm) {
    Rank x = g.rank_of_[e.a];
    Rank y = g.rank_of_[e.b];
    if (x > y) std::swap(x, y);
    packed.push_back(pack_edge(x, y));
  }
  std::sort(packed.begin(), packed.end());
  g.edges_.reserve(packed.size());
  for (std::uint64_t p : packed) {
    g.edges_.push_back(Edge{g.vertex_of_[edge_lo(p)], g.vertex_of_[edge_hi(p)]});
  }
  return g;
}

std::vector<RawEdge> gen_clique(std::uint64_t n) {
  std::vector<RawEdge> out;
  out.reserve(choose2(n));
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) out.push_back(RawEdge{i, j});
  }
  return out;
}

namespace {

// Index k in [0, n(n-1)/2) -> pair (i, j), i < j, row-major over i.
RawEdge decode_pair(std::uint64_t k, std::uint64_t n) {
  const double nn = static_cast<double>(2 * n - 1);
  auto i = static_cast<std::uint64_t>(
      (nn - std::sqrt(nn * nn - 8.0 * static_cast<double>(k))) / 2.0);
  auto row_start = [&](std::uint64_t r) { return r * (2 * n - r - 1) / 2; };
  while (i > 0 && row_start(i) > k) --i;
  while (i + 1 < n && row_start(i + 1) <= k) ++i;
  return RawEdge{i, i + 1 + (k - row_start(i))};
}

}  // namespace

std::vector<RawEdge> gen_gnm(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t pairs = choose2(n);
  if (m > pairs) {
    throw std::invalid_argument("gen_gnm: m=" + std::to_string(m) +
                                " exceeds n(n-1)/2=" + std::to_string(pairs));
  }
  // Floyd's sampling of min(m, pairs - m) indices; take the complement when
  // more than half of all pairs are requested.
  const bool complement = m > pairs / 2;
  const std::uint64_t k = complement ? pairs - m : m;
  Rng rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(k * 2);
  for (std::uint64_t j = pairs - k; j < pairs; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> idx;
  idx.reserve(m);
  if (complement) {
    for (std::uint64_t i = 0; i < pairs; ++i) {
      if (!chosen.contains(i)) idx.push_back(i);
    }
  } else {
    idx.assign(chosen.begin(), chosen.end());
    std::sort(idx.begin(), idx.end());
  }
  std::vector<RawEdge> out;
  out.reserve(m);
  for (std::uint64_t i : idx) out.push_back(decode_pair(i, n));
  return out;
}

std::vector<RawEdge> gen_tripartite_join(std::uint64_t a, std::uint64_t b,
                                         std::uint64_t c, double density,
                                         std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("gen_tripartite_join: density must be in [0, 1]");
  }
  Rng rng(seed);
  const std::uint64_t start[3] = {0, a, a + b};
  const std::uint64_t size[3] = {a, b, c};
  std::vector<RawEdge> out;
  for (int p = 0; p < 3; ++p) {
    for (int q = p + 1; q < 3; ++q) {
      for (std::uint64_t i = 0; i < size[p]; ++i) {
        for (std::uint64_t j = 0; j < size[q]; ++j) {
          if (density >= 1.0 || rng.unit() < density) {
            out.push_back(RawEdge{start[p] + i, start[q] + j});
          }
        }
      }
    }
  }
  return out;
}

std::vector<RawEdge> gen_path(std::uint64_t n) {
  std::vector<RawEdge> out;
  for (VertexId i = 0; i + 1 < n; ++i) out.push_back(RawEdge{i, i + 1});
  return out;
}

std::vector<RawEdge> gen_cycle(std::uint64_t n) {
  std::vector<RawEdge> out = gen_path(n);
  if (n >= 3) out.push_back(RawEdge{n - 1, 0});
  return out;
}

std::vector<RawEdge> gen_star(std::uint64_t leaves) {
  std::vector<RawEdge> out;
  for (VertexId i = 1; i <= leaves; ++i) out.push_back(RawEdge{0, i});
  return out;
}

namespace {

bool parse_id(std::string_view tok, VertexId& out) {
  const auto* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc{} && p == end;
}

}  // namespace

std::vector<RawEdge> parse_edge_list(const std::string& text) {
  std::vector<RawEdge> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"", lineno);
    }
    RawEdge e{};
    if (!parse_id(a, e.a) || !parse_id(b, e.b)) {
      throw ParseError("line " + std::to_string(lineno) +
                           ": vertex ids must be non-negative integers",
                       lineno);
    }
    out.push_back(e);
  }
  return out;
}

std::vector<RawEdge> load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

void save(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# " << g.n_vertices() << " vertices, " << g.n_edges() << " edges\n";
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

namespace {

void put_u64(std::ostream& out, std::uint64_t x) {
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(x >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes), 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) {
    throw std::runtime_error("binary graph: truncated file");
  }
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= std::uint64_t{bytes[i]} << (8 * i);
  return x;
}

}  // namespace

void save_binary(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  put_u64(out, g.n_vertices());
  put_u64(out, g.n_edges());
  for (const Edge& e : g.edges()) {
    put_u64(out, e.u);
    put_u64(out, e.v);
  }
}

std::vector<RawEdge> load_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  get_u64(in);  // n_vertices is implied by the edges
  const std::uint64_t m = get_u64(in);
  std::vector<RawEdge> out;
  out.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const VertexId u = get_u64(in);
    const VertexId v = get_u64(in);
    out.push_back(RawEdge{u, v});
  }
  return out;
}

}  // namespace trienum
