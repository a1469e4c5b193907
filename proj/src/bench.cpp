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

#include "trienum/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace trienum {

double lower_bound(double t, std::uint64_t M, std::uint64_t B) {
  if (t <= 0) return 0.0;
  return t / (std::sqrt(static_cast<double>(M)) * static_cast<double>(B)) +
         std::cbrt(t * t) / static_cast<double>(B);
}

double upper_bound(double E, std::uint64_t M, std::uint64_t B) {
  return std::pow(E, 1.5) / (std::sqrt(static_cast<double>(M)) * static_cast<double>(B));
}

double hu_bound(double E, std::uint64_t M, std::uint64_t B) {
  return E * E / (static_cast<double>(M) * static_cast<double>(B));
}

std::uint64_t scan_floor(std::uint64_t E, std::uint64_t B) { return (E + B - 1) / B; }

GenKind parse_gen_kind(const std::string& name) {
  if (name == "clique") return GenKind::clique;
  if (name == "gnm") return GenKind::gnm;
  if (name == "tripartite") return GenKind::tripartite;
  if (name == "path") return GenKind::path;
  if (name == "cycle") return GenKind::cycle;
  if (name == "star") return GenKind::star;
  if (name == "empty") return GenKind::empty;
  throw std::invalid_argument("unknown generator: " + name);
}

std::string gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::clique: return "clique";
    case GenKind::gnm: return "gnm";
    case GenKind::tripartite: return "tripartite";
    case GenKind::path: return "path";
    case GenKind::cycle: return "cycle";
    case GenKind::star: return "star";
    case GenKind::empty: return "empty";
  }
  return "?";
}

std::string GenSpec::describe() const {
  std::ostringstream s;
  s << gen_kind_name(kind) << ":n=" << n;
  if (kind == GenKind::gnm) s << ":m=" << m << ":seed=" << seed;
  if (kind == GenKind::tripartite) s << ":p=" << density << ":seed=" << seed;
  return s.str();
}

std::vector<RawEdge> generate(const GenSpec& g) {
  switch (g.kind) {
    case GenKind::clique: return gen_clique(g.n);
    case GenKind::gnm: return gen_gnm(g.n, g.m, g.seed);
    case GenKind::tripartite: return gen_tripartite_join(g.n, g.n, g.n, g.density, g.seed);
    case GenKind::path: return gen_path(g.n);
    case GenKind::cycle: return gen_cycle(g.n);
    case GenKind::star: return gen_star(g.n);
    case GenKind::empty: return {};
  }
  return {};
}

RunReport run_once(Algorithm algo, const Graph& g, const std::string& gen, std::uint64_t M,
                   std::uint64_t B, std::uint64_t seed, SinkMode sink_mode,
                   const std::filesystem::path& list_path, AlgoResult* detail) {
  RunReport r;
  r.algo = std::string(algorithm_name(algo));
  r.gen = gen;
  r.V = g.n_vertices();
  r.E = g.n_edges();
  r.M = M;
  r.B = B;
  r.seed = seed;
  const double E = static_cast<double>(r.E);
  r.bound_upper = upper_bound(E, M, B);
  r.bound_hu = hu_bound(E, M, B);

  Engine io(IOConfig{M, B, required_mode(algo)});
  AlgoConfig cfg;
  cfg.seed = seed;
  CountSink count;
  NullSink null;
  std::optional<ListSink> list;
  TriangleSink* sink = &count;
  if (sink_mode == SinkMode::null) sink = &null;
  if (sink_mode == SinkMode::list) sink = &list.emplace(list_path);

  const auto start = std::chrono::steady_clock::now();
  AlgoResult res = run_algorithm(algo, g, io, *sink, cfg);
  const auto stop = std::chrono::steady_clock::now();
  if (list) list->finish();
  r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  r.io = res.io;
  r.t = sink->count();
  r.bound_lower = lower_bound(static_cast<double>(r.t), M, B);
  if (detail != nullptr) *detail = std::move(res);
  return r;
}

// ---- sweep specs

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t to_u64(const std::string& s, const std::string& key) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-') {
    throw std::invalid_argument("sweep spec: " + key + ": not a non-negative integer: " + s);
  }
  return v;
}

std::vector<std::uint64_t> to_u64_list(const std::string& v, const std::string& key) {
  std::vector<std::uint64_t> out;
  for (const auto& s : split_list(v)) out.push_back(to_u64(s, key));
  return out;
}

bool to_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("sweep spec: " + key + ": expected true or false");
}

}  // namespace

void SweepSpec::validate() const {
  if (sizes.empty()) throw std::invalid_argument("sweep spec: sizes is empty");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) {
      throw std::invalid_argument("sweep spec: sizes must be strictly increasing");
    }
  }
  if (gen == GenKind::gnm && edges.size() != sizes.size()) {
    throw std::invalid_argument("sweep spec: gnm needs one edges entry per size");
  }
  if (algos.empty()) throw std::invalid_argument("sweep spec: algos is empty");
  if (Ms.empty() || Bs.empty()) throw std::invalid_argument("sweep spec: M and B are required");
  if (seeds.empty()) throw std::invalid_argument("sweep spec: seeds is empty");
}

SweepSpec parse_sweep_spec(const std::string& text) {
  SweepSpec s;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("sweep spec line " + std::to_string(lineno) + ": expected key = value",
                       lineno);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "gen") {
      s.gen = parse_gen_kind(value);
    } else if (key == "sizes") {
      s.sizes = to_u64_list(value, key);
    } else if (key == "edges") {
      s.edges = to_u64_list(value, key);
    } else if (key == "density") {
      s.density = std::stod(value);
    } else if (key == "graph_seed") {
      s.graph_seed = to_u64(value, key);
    } else if (key == "algos") {
      s.algos.clear();
      for (const auto& a : split_list(value)) s.algos.push_back(parse_algorithm(a));
    } else if (key == "M") {
      s.Ms = to_u64_list(value, key);
    } else if (key == "B") {
      s.Bs = to_u64_list(value, key);
    } else if (key == "seeds") {
      s.seeds = to_u64_list(value, key);
    } else if (key == "oracle") {
      s.oracle = to_bool(value, key);
    } else if (key == "timing") {
      s.timing = to_bool(value, key);
    } else if (key == "out") {
      s.out = value;
    } else {
      throw ParseError("sweep spec line " + std::to_string(lineno) + ": unknown key " + key,
                       lineno);
    }
  }
  s.validate();
  return s;
}

SweepSpec load_sweep_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sweep_spec(ss.str());
}

std::vector<RunReport> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<RunReport> out;
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
    GenSpec gs;
    gs.kind = spec.gen;
    gs.n = spec.sizes[i];
    gs.m = spec.gen == GenKind::gnm ? spec.edges[i] : 0;
    gs.density = spec.density;
    gs.seed = spec.graph_seed;
    const std::string desc = gs.describe();
    Graph g;
    std::string gen_error;
    try {
      g = canonicalize(generate(gs));
    } catch (const std::exception& e) {
      gen_error = e.what();
    }
    std::optional<std::uint64_t> oracle_t;
    if (spec.oracle && gen_error.empty()) oracle_t = oracle_enumerate(g).size();

    for (Algorithm a : spec.algos) {
      for (std::uint64_t M : spec.Ms) {
        for (std::uint64_t B : spec.Bs) {
          for (std::uint64_t seed : spec.seeds) {
            RunReport r;
            try {
              if (!gen_error.empty()) throw std::runtime_error(gen_error);
              r = run_once(a, g, desc, M, B, seed);
            } catch (const std::exception& e) {
              r = RunReport{};
              r.algo = std::string(algorithm_name(a));
              r.gen = desc;
              r.V = g.n_vertices();
              r.E = g.n_edges();
              r.M = M;
              r.B = B;
              r.seed = seed;
              r.error = e.what();
            }
            if (!spec.timing) r.wall_ms = 0;
            r.oracle_t = oracle_t;
            out.push_back(std::move(r));
          }
        }
      }
    }
  }
  return out;
}

// ---- output

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

std::string csv_header(bool oracle_column) {
  std::string h =
      "algo,gen,V,E,t,M,B,seed,reads,writes,io_total,bound_upper,bound_hu,bound_lower,wall_ms";
  if (oracle_column) h += ",oracle_t";
  return h + ",error\n";
}

std::string to_csv(std::span<const RunReport> reports, bool oracle_column) {
  std::ostringstream s;
  s << csv_header(oracle_column);
  for (const RunReport& r : reports) {
    s << r.algo << ',' << r.gen << ',' << r.V << ',' << r.E << ',' << r.t << ',' << r.M << ','
      << r.B << ',' << r.seed << ',' << r.io.reads << ',' << r.io.writes << ','
      << r.io.total() << ',' << num(r.bound_upper) << ',' << num(r.bound_hu) << ','
      << num(r.bound_lower) << ',' << num(r.wall_ms);
    if (oracle_column) {
      s << ',';
      if (r.oracle_t) s << *r.oracle_t;
    }
    std::string err = r.error;
    for (char& ch : err) {
      if (ch == ',' || ch == '\n') ch = ';';
    }
    s << ',' << err << '\n';
  }
  return s.str();
}

namespace {

nlohmann::json report_json(const RunReport& r) {
  nlohmann::json j = {
      {"algo", r.algo},
      {"gen", r.gen},
      {"V", r.V},
      {"E", r.E},
      {"t", r.t},
      {"M", r.M},
      {"B", r.B},
      {"seed", r.seed},
      {"io", nlohmann::json::parse(trienum::to_json(r.io))},
      {"bound_upper", r.bound_upper},
      {"bound_hu", r.bound_hu},
      {"bound_lower", r.bound_lower},
      {"wall_ms", r.wall_ms},
      {"below_scan_floor", r.below_scan_floor()},
  };
  if (r.oracle_t) j["oracle_t"] = *r.oracle_t;
  if (!r.ok()) j["error"] = r.error;
  return j;
}

}  // namespace

std::string to_json(const RunReport& r) { return report_json(r).dump(2); }

std::string to_json(std::span<const RunReport> reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const RunReport& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

Fit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_loglog: size mismatch");
  if (x.size() < 3) throw std::invalid_argument("fit_loglog: need at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) {
      throw std::invalid_argument("fit_loglog: values must be positive");
    }
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0) throw std::invalid_argument("fit_loglog: all x values are equal");
  Fit f;
  f.slope = (n * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

Fit fit_scaling(std::span<const RunReport> reports) {
  std::vector<double> x, y;
  for (const RunReport& r : reports) {
    if (!r.ok()) continue;
    x.push_back(static_cast<double>(r.E));
    y.push_back(static_cast<double>(r.io.total()));
  }
  return fit_loglog(x, y);
}

}  // namespace trienum
