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

// Candidate scoring for the greedy derandomizer.
//
// For a candidate b(v) = <y, h(v)> write chi(g) = (-1)^<y, g>. Two edges of the
// same parent class land in the same child class iff b agrees on both low and
// both high endpoints, so summing over ordered pairs of a class gives
//   4 sum_ab n_ab^2 = n^2 + S_u(y)^2 + S_v(y)^2 + S_uv(y)^2,
// with S_u(y) = sum_e chi(h(u_e)), S_uv(y) = sum_e chi(h(u_e) ^ h(v_e)).
// Adjacent pairs reduce the same way per (shared vertex, class) group. Every
// squared or mixed term is a Walsh-Hadamard coefficient of a histogram over
// the 2^L test vectors, so one transform per level scores all candidates.

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "trienum/coloring.hpp"

namespace trienum {

namespace {

constexpr int kMaxSpectralBits = 22;

using Points = std::vector<std::pair<std::uint64_t, std::int64_t>>;

void fwht(std::vector<std::int64_t>& a) {
  for (std::size_t h = 1; h < a.size(); h *= 2) {
    for (std::size_t i = 0; i < a.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t x = a[j];
        const std::int64_t y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
}

// Merges equal points.
Points compact(std::vector<std::uint64_t> g) {
  std::sort(g.begin(), g.end());
  Points out;
  for (std::size_t i = 0; i < g.size();) {
    std::size_t j = i;
    while (j < g.size() && g[j] == g[i]) ++j;
    out.emplace_back(g[i], static_cast<std::int64_t>(j - i));
    i = j;
  }
  return out;
}

// Accumulates sum_g H[g] chi(y_j . g) for every family member j.
class Spectrum {
 public:
  Spectrum(int bits, const SmallBiasFamily& family)
      : bits_(bits), family_(family), hist_(std::size_t{1} << bits, 0),
        direct_(family.size(), 0) {}

  void add_point(std::uint64_t g, std::int64_t w) { hist_[g] += w; }

  // sum over p in P, q in Q of w_p w_q chi(g_p ^ g_q).
  void add_product(const Points& p, const Points& q) {
    const double pairwise = static_cast<double>(p.size()) * static_cast<double>(q.size());
    if (pairwise <= 2.0 * bits_ * static_cast<double>(hist_.size())) {
      for (const auto& [gp, wp] : p) {
        for (const auto& [gq, wq] : q) hist_[gp ^ gq] += wp * wq;
      }
      return;
    }
    const auto wp = transform(p);
    const auto wq = &p == &q ? wp : transform(q);
    for (std::size_t j = 0; j < family_.size(); ++j) {
      const std::uint64_t y = family_.mask(j);
      direct_[j] += wp[y] * wq[y];
    }
  }

  std::vector<std::int64_t> finish() {
    fwht(hist_);
    for (std::size_t j = 0; j < family_.size(); ++j) direct_[j] += hist_[family_.mask(j)];
    return std::move(direct_);
  }

 private:
  std::vector<std::int64_t> transform(const Points& p) const {
    std::vector<std::int64_t> a(hist_.size(), 0);
    for (const auto& [g, w] : p) a[g] += w;
    fwht(a);
    return a;
  }

  int bits_;
  const SmallBiasFamily& family_;
  std::vector<std::int64_t> hist_;
  std::vector<std::int64_t> direct_;
};

}  // namespace

CandidateScores score_candidates_direct(std::span<const RawEdge> oriented_edges,
                                        const ColorAssignment& xi,
                                        const SmallBiasFamily& family) {
  CandidateScores out;
  out.x_total.reserve(family.size());
  out.x_adj.reserve(family.size());
  for (std::size_t j = 0; j < family.size(); ++j) {
    const auto next = refine_bit(xi, [&](VertexId v) { return family(j, v); });
    const CollisionStats s = collision_statistic(oriented_edges, next);
    out.x_total.push_back(s.x_total);
    out.x_adj.push_back(s.x_adj);
  }
  return out;
}

CandidateScores score_candidates(std::span<const RawEdge> oriented_edges,
                                 const ColorAssignment& xi, const SmallBiasFamily& family) {
  const int L = family.test_bits();
  if (L > kMaxSpectralBits) return score_candidates_direct(oriented_edges, xi, family);

  std::vector<RawEdge> edges(oriented_edges.begin(), oriented_edges.end());
  auto class_of = [&](const RawEdge& e) {
    return (std::uint64_t{xi[e.a]} << 32) | xi[e.b];
  };
  std::sort(edges.begin(), edges.end(), [&](const RawEdge& x, const RawEdge& y) {
    const auto cx = class_of(x);
    const auto cy = class_of(y);
    return cx != cy ? cx < cy : x < y;
  });

  Spectrum total(L, family);
  Spectrum adj(L, family);
  std::int64_t total_const = 0;
  std::int64_t adj_const = 0;
  auto h = [&](VertexId v) { return family.embed(v); };

  for (std::size_t lo = 0; lo < edges.size();) {
    std::size_t hi = lo;
    const std::uint64_t cls = class_of(edges[lo]);
    while (hi < edges.size() && class_of(edges[hi]) == cls) ++hi;
    const std::span<const RawEdge> in_class(edges.data() + lo, hi - lo);
    const auto n = static_cast<std::int64_t>(in_class.size());
    const bool diagonal = (cls >> 32) == (cls & 0xffffffffULL);

    std::vector<std::uint64_t> gu, gv, guv;
    for (const RawEdge& e : in_class) {
      gu.push_back(h(e.a));
      gv.push_back(h(e.b));
      guv.push_back(h(e.a) ^ h(e.b));
    }
    total_const += n * n;
    for (auto* g : {&gu, &gv, &guv}) {
      const Points p = compact(std::move(*g));
      total.add_product(p, p);
    }

    // Groups by shared vertex x: L = edges (x, a), H = edges (z, x).
    std::vector<std::pair<VertexId, VertexId>> low, high;
    for (const RawEdge& e : in_class) {
      low.emplace_back(e.a, e.b);
      high.emplace_back(e.b, e.a);
    }
    std::sort(high.begin(), high.end());
    std::size_t i = 0, k = 0;
    while (i < low.size() || k < high.size()) {
      VertexId x = ~VertexId{0};
      if (i < low.size()) x = low[i].first;
      if (k < high.size()) x = std::min(x, high[k].first);
      Points pl, ph;
      for (; i < low.size() && low[i].first == x; ++i) pl.emplace_back(h(low[i].second), 1);
      for (; k < high.size() && high[k].first == x; ++k) ph.emplace_back(h(high[k].second), 1);
      const auto dl = static_cast<std::int64_t>(pl.size());
      const auto dh = static_cast<std::int64_t>(ph.size());
      adj_const += dl * dl - 2 * dl + dh * dh - 2 * dh;
      if (dl > 0) adj.add_product(pl, pl);
      if (dh > 0) adj.add_product(ph, ph);
      if (diagonal && dl > 0 && dh > 0) {
        adj_const += dl * dh;
        adj.add_product(pl, ph);
        for (const auto& [g, w] : ph) adj.add_point(h(x) ^ g, dl);
        for (const auto& [g, w] : pl) adj.add_point(h(x) ^ g, dh);
      }
    }
    lo = hi;
  }

  const auto t_spec = total.finish();
  const auto a_spec = adj.finish();
  CandidateScores out;
  out.x_total.resize(family.size());
  out.x_adj.resize(family.size());
  const auto E = static_cast<std::int64_t>(edges.size());
  for (std::size_t j = 0; j < family.size(); ++j) {
    const std::int64_t t4 = total_const + t_spec[j];
    const std::int64_t a4 = adj_const + a_spec[j];
    if (t4 % 4 != 0 || a4 % 4 != 0 || t4 / 4 < E || (t4 / 4 - E) % 2 != 0) {
      throw std::logic_error("score_candidates: non-integral spectrum");
    }
    out.x_total[j] = static_cast<std::uint64_t>((t4 / 4 - E) / 2);
    out.x_adj[j] = static_cast<std::uint64_t>(a4 / 4);
  }
  return out;
}

namespace {

double potential(int level, const CollisionStats& s, std::uint64_t c) {
  const double cd = static_cast<double>(c);
  return std::ldexp(static_cast<double>(s.x_nonadj), 2 * level) / (cd * cd) +
         std::ldexp(static_cast<double>(s.x_adj), level) / cd;
}

}  // namespace

Derandomized greedy_derandomize(std::uint64_t universe,
                                std::span<const RawEdge> oriented_edges,
                                std::uint64_t c, std::uint64_t M) {
  if (!is_power_of_two(c)) {
    throw std::invalid_argument("greedy_derandomize: c must be a power of two");
  }
  for (const RawEdge& e : oriented_edges) {
    if (e.a >= universe || e.b >= universe) {
      throw std::out_of_range("greedy_derandomize: vertex outside universe");
    }
  }
  const int levels = log2_exact(c);
  const double E = static_cast<double>(oriented_edges.size());
  const double EM = E * static_cast<double>(M);

  Derandomized out;
  out.coloring = constant_coloring(universe);
  out.stats = collision_statistic(oriented_edges, out.coloring);
  out.alpha = levels > 0 ? 1.0 / levels : 0.0;
  out.initial_potential = potential(0, out.stats, c);
  double previous = out.initial_potential;

  if (levels > 0 && universe > 0) {
    const SmallBiasFamily family(out.alpha, universe);
    out.family_size = family.size();
    for (int i = 1; i <= levels; ++i) {
      const CandidateScores scores = score_candidates(oriented_edges, out.coloring, family);
      // Compare c^2 * potential exactly: 4^i X_nonadj + 2^i c X_adj.
      auto scaled = [&](std::size_t j) {
        const auto nonadj = static_cast<unsigned __int128>(scores.x_total[j] - scores.x_adj[j]);
        return (nonadj << (2 * i)) + ((static_cast<unsigned __int128>(scores.x_adj[j]) * c) << i);
      };
      std::size_t best = 0;
      auto best_value = scaled(0);
      double sum = 0;
      for (std::size_t j = 0; j < family.size(); ++j) {
        const auto value = scaled(j);
        sum += static_cast<double>(value);
        if (value < best_value) {
          best = j;
          best_value = value;
        }
      }

      out.coloring = refine_bit(out.coloring, [&](VertexId v) { return family(best, v); });
      const CollisionStats stats = collision_statistic(oriented_edges, out.coloring);
      if (stats.x_total != scores.x_total[best] || stats.x_adj != scores.x_adj[best]) {
        throw std::logic_error("greedy_derandomize: candidate score mismatch");
      }

      DerandomizeLevel rec;
      rec.level = i;
      rec.chosen = best;
      rec.stats = stats;
      rec.potential = potential(i, stats, c);
      rec.previous = previous;
      rec.family_mean = sum / static_cast<double>(family.size()) /
                        (static_cast<double>(c) * static_cast<double>(c));
      rec.potential_bound = std::pow(1.0 + out.alpha, i) * EM;
      rec.potential_ok = rec.potential <= rec.potential_bound * (1 + 1e-12);
      if (rec.potential > (1.0 + out.alpha) * previous * (1 + 1e-9) + 1e-9) {
        throw std::logic_error("greedy_derandomize: no candidate meets the averaging bound");
      }
      previous = rec.potential;
      out.levels.push_back(rec);
    }
    out.stats = out.levels.back().stats;
  }
  out.coloring.c = c;
  out.bound_ok = oriented_edges.empty() ||
                 static_cast<double>(out.stats.x_total) < std::exp(1.0) * EM;
  return out;
}

Derandomized greedy_derandomize(const Graph& g, std::uint64_t c, std::uint64_t M) {
  const auto edges = g.raw_edges();
  return greedy_derandomize(g.n_vertices(), edges, c, M);
}

}  // namespace trienum
