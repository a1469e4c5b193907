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

// Experiment driver: graph generators by name, single runs, parameter sweeps,
// the theoretical bounds and log-log scaling fits.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trienum/enumerate.hpp"

namespace trienum {

// t/(sqrt(M) B) + t^(2/3)/B.
double lower_bound(double t, std::uint64_t M, std::uint64_t B);
// E^1.5/(sqrt(M) B).
double upper_bound(double E, std::uint64_t M, std::uint64_t B);
// E^2/(M B).
double hu_bound(double E, std::uint64_t M, std::uint64_t B);
// ceil(E/B): reading the input once.
std::uint64_t scan_floor(std::uint64_t E, std::uint64_t B);

enum class GenKind { clique, gnm, tripartite, path, cycle, star, empty };

GenKind parse_gen_kind(const std::string& name);
std::string gen_kind_name(GenKind k);

struct GenSpec {
  GenKind kind = GenKind::clique;
  std::uint64_t n = 0;   // vertices; part size for tripartite; leaves for star
  std::uint64_t m = 0;   // gnm edge count
  double density = 1.0;  // tripartite
  std::uint64_t seed = 0;

  std::string describe() const;
};

std::vector<RawEdge> generate(const GenSpec& spec);

struct RunReport {
  std::string algo;
  std::string gen;
  std::uint64_t V = 0;
  std::uint64_t E = 0;
  std::uint64_t t = 0;
  std::uint64_t M = 0;
  std::uint64_t B = 0;
  std::uint64_t seed = 0;
  IOStats io;
  double bound_upper = 0;
  double bound_hu = 0;
  double bound_lower = 0;
  double wall_ms = 0;
  std::optional<std::uint64_t> oracle_t;
  std::string error;  // non-empty when the cell failed

  bool ok() const { return error.empty(); }
  bool below_scan_floor() const { return ok() && E > 0 && io.total() < scan_floor(E, B); }
};

enum class SinkMode { count, list, null };

// One algorithm run on a fresh engine. `list_path` is used with SinkMode::list.
RunReport run_once(Algorithm algo, const Graph& g, const std::string& gen, std::uint64_t M,
                   std::uint64_t B, std::uint64_t seed, SinkMode sink = SinkMode::count,
                   const std::filesystem::path& list_path = {},
                   AlgoResult* detail = nullptr);

// Flat "key = value" text; '#' starts a comment. Keys:
//   gen       clique | gnm | tripartite | path | cycle | star | empty
//   sizes     comma separated, strictly increasing (n, or part size)
//   edges     gnm only: m per size, same length as sizes
//   density   tripartite only, default 1
//   graph_seed  generator seed, default 0
//   algos     comma separated algorithm names
//   M, B      comma separated ladders
//   seeds     comma separated, default 0
//   oracle    true | false, adds the oracle_t column
//   timing    true | false, false writes wall_ms as 0 (byte-identical reruns)
//   out       output path; .json selects JSON, anything else CSV
struct SweepSpec {
  GenKind gen = GenKind::clique;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> edges;
  double density = 1.0;
  std::uint64_t graph_seed = 0;
  std::vector<Algorithm> algos;
  std::vector<std::uint64_t> Ms;
  std::vector<std::uint64_t> Bs;
  std::vector<std::uint64_t> seeds{0};
  bool oracle = false;
  bool timing = true;
  std::filesystem::path out;

  // Throws std::invalid_argument on an inconsistent spec.
  void validate() const;
};

SweepSpec parse_sweep_spec(const std::string& text);
SweepSpec load_sweep_spec(const std::filesystem::path& path);

// One report per (size, algo, M, B, seed) cell, in that nesting order. A cell
// that throws is recorded with its error and the sweep continues.
std::vector<RunReport> run_sweep(const SweepSpec& spec);

std::string csv_header(bool oracle_column);
std::string to_csv(std::span<const RunReport> reports, bool oracle_column);
std::string to_json(std::span<const RunReport> reports);
std::string to_json(const RunReport& r);

struct Fit {
  double slope = 0;
  double intercept = 0;
};

// Least squares on (log x, log y). Throws std::invalid_argument on fewer than
// 3 points or a non-positive value.
Fit fit_loglog(std::span<const double> x, std::span<const double> y);
// x = E, y = io_total over the successful reports.
Fit fit_scaling(std::span<const RunReport> reports);

}  // namespace trienum
