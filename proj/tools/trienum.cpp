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

// trienum: generate graphs, run one algorithm on the simulated machine, run
// parameter sweeps, or print the bound formulas.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trienum/bench.hpp"

namespace {

using namespace trienum;

std::vector<RawEdge> read_graph(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".bin") return load_binary(path);
  return load(path);
}

int cmd_gen(const std::string& kind, std::uint64_t n, std::uint64_t m, double density,
            std::uint64_t seed, const std::string& out, bool binary) {
  GenSpec spec;
  spec.kind = parse_gen_kind(kind);
  spec.n = n;
  spec.m = m;
  spec.density = density;
  spec.seed = seed;
  const Graph g = canonicalize(generate(spec));
  if (binary) {
    save_binary(g, out);
  } else {
    save(g, out);
  }
  std::cerr << spec.describe() << ": " << g.n_vertices() << " vertices, " << g.n_edges()
            << " edges -> " << out << '\n';
  return 0;
}

int cmd_run(const std::string& algo_name, const std::string& graph_path, std::uint64_t M,
            std::uint64_t B, std::uint64_t seed, const std::string& sink_name,
            const std::string& list_path, const std::string& out) {
  const Algorithm algo = parse_algorithm(algo_name);
  SinkMode sink = SinkMode::count;
  if (sink_name == "list") sink = SinkMode::list;
  if (sink_name == "null") sink = SinkMode::null;
  const Graph g = canonicalize(read_graph(graph_path));
  AlgoResult detail;
  const RunReport r = run_once(algo, g, graph_path, M, B, seed, sink, list_path, &detail);
  if (r.below_scan_floor()) {
    std::cerr << "warning: " << r.io.total() << " I/Os is below the input scan floor "
              << scan_floor(r.E, r.B) << '\n';
  }
  if (out == "json") {
    nlohmann::json j = nlohmann::json::parse(to_json(r));
    j["result"] = {{"colors", detail.colors},
                   {"high_degree", detail.high_degree},
                   {"low_edges", detail.low_edges},
                   {"x_total", detail.coloring_stats.x_total},
                   {"x_adj", detail.coloring_stats.x_adj},
                   {"subproblems", detail.subproblems},
                   {"max_depth", detail.max_depth},
                   {"rounds", detail.rounds}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << csv_header(false) << to_csv(std::span(&r, 1), false).substr(csv_header(false).size());
  }
  return r.below_scan_floor() ? 3 : 0;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_override) {
  SweepSpec spec = load_sweep_spec(spec_path);
  if (!out_override.empty()) spec.out = out_override;
  const std::vector<RunReport> reports = run_sweep(spec);
  const bool json = spec.out.extension() == ".json";
  const std::string text = json ? to_json(reports) + "\n" : to_csv(reports, spec.oracle);
  if (spec.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(spec.out);
    if (!f) throw std::runtime_error("cannot write " + spec.out.string());
    f << text;
  }
  int status = 0;
  for (const RunReport& r : reports) {
    if (!r.ok()) {
      std::cerr << "cell failed: " << r.algo << ' ' << r.gen << " M=" << r.M << " B=" << r.B
                << " seed=" << r.seed << ": " << r.error << '\n';
      status = 2;
    } else if (r.below_scan_floor()) {
      std::cerr << "warning: below scan floor: " << r.algo << ' ' << r.gen << '\n';
      status = 3;
    } else if (r.oracle_t && *r.oracle_t != r.t) {
      std::cerr << "mismatch: " << r.algo << ' ' << r.gen << " t=" << r.t
                << " oracle=" << *r.oracle_t << '\n';
      status = 4;
    }
  }
  return status;
}

int cmd_bounds(double E, double t, std::uint64_t M, std::uint64_t B) {
  IOConfig cfg{M, B, IoMode::explicit_blocks};
  cfg.validate();
  nlohmann::json j = {{"E", E},
                      {"t", t},
                      {"M", M},
                      {"B", B},
                      {"bound_upper", upper_bound(E, M, B)},
                      {"bound_hu", hu_bound(E, M, B)},
                      {"bound_lower", lower_bound(t, M, B)},
                      {"sort_E", sort_bound(E, cfg)},
                      {"tall_cache", cfg.tall_cache()}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle enumeration on a simulated external-memory machine"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  std::string kind = "clique", gen_out;
  std::uint64_t n = 0, m = 0, gen_seed = 0;
  double density = 1.0;
  bool binary = false;
  gen->add_option("--kind", kind, "clique|gnm|tripartite|path|cycle|star|empty");
  gen->add_option("-n,--n", n, "vertices (part size for tripartite, leaves for star)")->required();
  gen->add_option("-m,--m", m, "edges (gnm)");
  gen->add_option("--density", density, "edge probability (tripartite)");
  gen->add_option("--seed", gen_seed);
  gen->add_option("-o,--out", gen_out)->required();
  gen->add_flag("--binary", binary, "binary format");

  auto* run = app.add_subcommand("run", "run one algorithm");
  std::string algo = "cache_aware", graph, sink = "count", list_out = "triangles.txt", out = "csv";
  std::uint64_t M = 512, B = 32, seed = 0;
  run->add_option("--algo", algo, "nested_loop|cache_aware|cache_oblivious|deterministic|pivot_all");
  run->add_option("--graph", graph, "edge list (.bin for binary)")->required();
  run->add_option("--M", M, "internal memory in words");
  run->add_option("--B", B, "block size in words");
  run->add_option("--seed", seed);
  run->add_option("--sink", sink)->check(CLI::IsMember({"count", "list", "null"}));
  run->add_option("--list-out", list_out, "triangle file for --sink list");
  run->add_option("--out", out)->check(CLI::IsMember({"csv", "json"}));

  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
  std::string spec_path, sweep_out;
  sweep->add_option("--spec", spec_path, "sweep spec file")->required();
  sweep->add_option("--out", sweep_out, "overrides the spec's out");

  auto* bounds = app.add_subcommand("bounds", "print the bound formulas");
  double bE = 0, bt = 0;
  std::uint64_t bM = 512, bB = 32;
  bounds->add_option("--E", bE)->required();
  bounds->add_option("--t", bt);
  bounds->add_option("--M", bM);
  bounds->add_option("--B", bB);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return cmd_gen(kind, n, m, density, gen_seed, gen_out, binary);
    if (*run) return cmd_run(algo, graph, M, B, seed, sink, list_out, out);
    if (*sweep) return cmd_sweep(spec_path, sweep_out);
    if (*bounds) return cmd_bounds(bE, bt, bM, bB);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
