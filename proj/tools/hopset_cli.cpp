// hopset: generate graphs, build and verify hopsets, sweep beta, extract witnesses.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopset/builder.hpp"
#include "hopset/generate.hpp"
#include "hopset/graph.hpp"
#include "hopset/io.hpp"
#include "hopset/parallel.hpp"
#include "hopset/verify.hpp"

using namespace hopset;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int default_beta(Vertex n) {
  return std::max(1, static_cast<int>(std::ceil(20.0 * std::log2(std::max<double>(2.0, n)))));
}

WeightedDigraph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct GenArgs {
  std::string family = "random-digraph";
  Vertex n = 100;
  std::size_t m = 0;
  Length W = 10;
  std::uint64_t seed = 1;
  GenOptions options;
  std::string out;
};

struct BuildArgs {
  std::string graph;
  int beta = 0;
  double eps = 0.5;
  std::uint64_t seed = 1;
  std::string regime = "auto";
  double c_v = 24.0;
  double c_p = 24.0;
  double c_large = 1.0;
  std::string out;
  std::string aux;
  std::string edges;
};

struct VerifyArgs {
  std::string graph;
  std::string hopset;
  int beta = 0;
  double eps = -1.0;
  bool full = false;
  std::size_t sample = 0;
  Vertex full_cap = 300;
  std::uint64_t seed = 0;
  std::string report;
};

struct BenchArgs {
  std::string graph;
  GenArgs gen;
  std::vector<int> betas;
  double eps = 0.5;
  std::vector<std::uint64_t> seeds{1};
  std::string regime = "auto";
  double folklore_c = 1.0;
  bool no_folklore = false;
  std::size_t sample = 0;
  std::string out;
};

struct WitnessArgs {
  std::string graph;
  std::string aux;
  Vertex s = 0;
  Vertex t = 0;
  bool quiet = false;
};

int run_gen(const GenArgs& a) {
  std::size_t m = a.m ? a.m : 4 * static_cast<std::size_t>(a.n);
  WeightedDigraph g;
  try {
    g = generate(parse_family(a.family), a.n, m, a.W, a.seed, a.options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.out.empty() || a.out == "-") {
    write_graph(std::cout, g);
  } else {
    std::ofstream out(a.out);
    if (!out) throw std::runtime_error("cannot write " + a.out);
    write_graph(out, g);
  }
  return kExitOk;
}

BuildConfig make_config(const BuildArgs& a, Vertex n) {
  BuildConfig cfg;
  cfg.beta = a.beta > 0 ? a.beta : default_beta(n);
  cfg.eps = a.eps;
  cfg.seed = a.seed;
  cfg.c_v = a.c_v;
  cfg.c_p = a.c_p;
  cfg.c_large = a.c_large;
  try {
    cfg.regime = parse_regime(a.regime);
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

int run_build(const BuildArgs& a) {
  const WeightedDigraph g = load_graph(a.graph);
  const BuildConfig cfg = make_config(a, g.num_vertices());
  const HopsetBuild build = build_hopset(g, cfg);
  for (const std::string& w : build.warnings) std::cerr << "warning: " << w << '\n';
  const Json doc = build_to_json(g, build);
  if (a.out.empty() || a.out == "-") {
    std::cout << doc.dump(1) << '\n';
  } else {
    write_json_file(a.out, doc);
    Json summary = doc;
    summary.erase("edges");
    std::cout << summary.dump(1) << '\n';
  }
  if (!a.aux.empty()) {
    if (build.regime != Regime::kSmall) throw UsageError("--aux needs the small-beta regime");
    write_json_file(a.aux, aux_to_json(build));
  }
  if (!a.edges.empty()) {
    std::ofstream out(a.edges);
    if (!out) throw std::runtime_error("cannot write " + a.edges);
    write_edges(out, g.num_vertices(), build.hopset.edges());
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& a) {
  const WeightedDigraph g = load_graph(a.graph);
  LoadedHopset h;
  try {
    h = hopset_from_json(read_json_file(a.hopset));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (h.n != g.num_vertices()) throw UsageError("hopset and graph disagree on n");
  const int beta = a.beta > 0 ? a.beta : (h.beta > 0 ? h.beta : default_beta(g.num_vertices()));
  const double eps = a.eps >= 0.0 ? a.eps : h.eps;
  VerifyOptions options;
  options.force_full = a.full;
  options.sample_pairs = a.sample;
  options.full_cap = a.full_cap;
  options.seed = a.seed;

  const DistanceReport distance = check_distance_preservation(g, h.edges, options);
  const VerificationReport stretch = check_hop_stretch(g, h.edges, beta, eps, options);
  Json doc;
  doc["distance"] = report_to_json(distance);
  doc["hop_stretch"] = report_to_json(stretch);
  doc["passed"] = distance.passed && stretch.passed;
  if (!a.report.empty()) write_json_file(a.report, doc);

  std::cout << "pairs_checked " << stretch.pairs_checked << (stretch.full ? " (all)" : " (sampled)") << '\n'
            << "edge_weights " << (distance.edge_failures.empty() ? "exact" : "WRONG") << '\n'
            << "distance_preservation " << (distance.passed ? "yes" : "no") << '\n'
            << "max_stretch " << stretch.max_stretch << '\n'
            << "achieved_hopbound " << stretch.achieved_hopbound << '\n'
            << "result " << (doc["passed"].get<bool>() ? "PASS" : "FAIL") << '\n';
  return doc["passed"].get<bool>() ? kExitOk : kExitFailure;
}

struct BenchRow {
  Vertex n = 0;
  std::size_t m = 0;
  std::string family;
  std::string algorithm;
  std::string regime;
  int beta = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  std::size_t hopset_size = 0;
  KindCounts counts{};
  int achieved_hopbound = 0;
  double max_stretch = 0.0;
  bool passed = false;
  double build_ms = 0.0;
  double verify_ms = 0.0;
  std::string error;
};

void write_bench_header(std::ostream& out) {
  out << "n,m,family,algorithm,regime,beta,eps,seed,hopset_size";
  for (int k = 0; k < kNumEdgeKinds; ++k) out << ',' << kind_name(static_cast<EdgeKind>(k));
  out << ",achieved_hopbound,max_stretch,passed,build_ms,verify_ms,error\n";
}

void write_bench_row(std::ostream& out, const BenchRow& r) {
  out << r.n << ',' << r.m << ',' << r.family << ',' << r.algorithm << ',' << r.regime << ',' << r.beta << ','
      << r.eps << ',' << r.seed << ',' << r.hopset_size;
  for (std::size_t c : r.counts) out << ',' << c;
  out << ',' << r.achieved_hopbound << ',' << r.max_stretch << ',' << (r.passed ? 1 : 0) << ',' << r.build_ms
      << ',' << r.verify_ms << ',' << r.error << '\n';
}

int run_bench(const BenchArgs& a) {
  WeightedDigraph g;
  std::string family = "file";
  if (!a.graph.empty()) {
    g = load_graph(a.graph);
  } else {
    family = a.gen.family;
    try {
      const std::size_t m = a.gen.m ? a.gen.m : 4 * static_cast<std::size_t>(a.gen.n);
      g = generate(parse_family(a.gen.family), a.gen.n, m, a.gen.W, a.gen.seed, a.gen.options);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  Regime regime;
  try {
    regime = parse_regime(a.regime);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<int> betas = a.betas.empty() ? std::vector<int>{default_beta(g.num_vertices())} : a.betas;
  for (int b : betas) {
    if (b < 1) throw UsageError("every beta must be >= 1");
  }

  struct Job {
    int beta;
    std::uint64_t seed;
    bool folklore;
  };
  std::vector<Job> jobs;
  for (int b : betas) {
    for (std::uint64_t s : a.seeds) {
      jobs.push_back({b, s, false});
      if (!a.no_folklore) jobs.push_back({b, s, true});
    }
  }
  std::vector<BenchRow> rows(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t j) {
    const Job& job = jobs[j];
    BenchRow& row = rows[j];
    row.n = g.num_vertices();
    row.m = g.num_edges();
    row.family = family;
    row.beta = job.beta;
    row.seed = job.seed;
    row.algorithm = job.folklore ? "folklore" : "hopset";
    row.eps = job.folklore ? 0.0 : a.eps;
    try {
      const auto start = std::chrono::steady_clock::now();
      Hopset h;
      if (job.folklore) {
        h = build_folklore(g, job.beta, job.seed, a.folklore_c);
        row.regime = "-";
      } else {
        BuildConfig cfg;
        cfg.beta = job.beta;
        cfg.eps = a.eps;
        cfg.seed = job.seed;
        cfg.regime = regime;
        HopsetBuild build = build_hopset(g, cfg);
        row.regime = std::string(regime_name(build.regime));
        h = std::move(build.hopset);
      }
      row.build_ms = ms_since(start);
      row.hopset_size = h.size();
      row.counts = h.counts();
      const auto vstart = std::chrono::steady_clock::now();
      VerifyOptions options;
      options.sample_pairs = a.sample;
      options.seed = job.seed;
      const VerificationReport report = check_hop_stretch(g, h.edges(), job.beta, row.eps, options);
      row.verify_ms = ms_since(vstart);
      row.achieved_hopbound = report.achieved_hopbound;
      row.max_stretch = report.max_stretch;
      // Folklore promises exactness within O(beta log n) hops, not within beta.
      row.passed = job.folklore ? report.distance_preservation && report.achieved_hopbound >= 0 : report.passed;
    } catch (const std::exception& e) {
      row.error = e.what();
      row.passed = false;
    }
  });

  std::ofstream file;
  if (!a.out.empty() && a.out != "-") {
    file.open(a.out);
    if (!file) throw std::runtime_error("cannot write " + a.out);
  }
  std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
  write_bench_header(out);
  bool all = true;
  for (const BenchRow& r : rows) {
    write_bench_row(out, r);
    all = all && r.passed;
  }
  return all ? kExitOk : kExitFailure;
}

int run_witness(const WitnessArgs& a) {
  const WeightedDigraph g = load_graph(a.graph);
  WitnessAux aux;
  try {
    aux = aux_from_json(read_json_file(a.aux));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.s < 0 || a.s >= g.num_vertices() || a.t < 0 || a.t >= g.num_vertices()) {
    throw UsageError("vertex id out of range");
  }
  const WitnessExtractor extractor(g, std::move(aux));
  WitnessResult r;
  try {
    r = extractor.extract(a.s, a.t);
  } catch (const NoPathError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  if (!a.quiet) {
    for (const std::string& line : r.trace) std::cout << "# " << line << '\n';
  }
  std::cout << "dist " << r.distance << '\n' << "road_hops " << r.road.hops() << '\n';
  std::cout << "walk";
  for (Vertex v : r.walk.vertices) std::cout << ' ' << v;
  std::cout << '\n'
            << "walk_hops " << r.walk.hops() << '\n'
            << "walk_length " << r.walk.length << '\n'
            << "realizable " << (r.realizable ? "yes" : "no") << '\n'
            << "hop_bound " << (r.hop_ok ? "met" : "missed") << '\n'
            << "stretch_bound " << (r.stretch_ok ? "met" : "missed") << '\n';
  return r.ok() ? kExitOk : kExitFailure;
}

void add_gen_options(CLI::App* cmd, GenArgs& a) {
  cmd->add_option("--family", a.family, "random-digraph | layered-dag | cycle-chain | path-noise");
  cmd->add_option("--n", a.n, "vertex count")->check(CLI::PositiveNumber);
  cmd->add_option("--m", a.m, "edge count (default 4n)");
  cmd->add_option("--W", a.W, "max edge weight")->check(CLI::PositiveNumber);
  cmd->add_option("--layers", a.options.layers, "layered-dag layer count");
  cmd->add_option("--cycles", a.options.cycles, "cycle-chain cycle count");
  cmd->add_flag("--strong", a.options.strong, "random-digraph: embed a Hamiltonian cycle");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and certify hopsets on weighted digraphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  add_gen_options(gen_cmd, gen);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "build a hopset");
  build_cmd->add_option("--graph", build.graph)->required();
  build_cmd->add_option("--beta", build.beta, "hopbound (default ceil(20 log2 n))");
  build_cmd->add_option("--eps", build.eps);
  build_cmd->add_option("--seed", build.seed);
  build_cmd->add_option("--regime", build.regime, "auto | small | large");
  build_cmd->add_option("--cv", build.c_v, "vertex sampling constant");
  build_cmd->add_option("--cp", build.c_p, "path sampling constant");
  build_cmd->add_option("--c-large", build.c_large, "large-beta sampling constant");
  build_cmd->add_option("--out", build.out, "hopset JSON (default stdout)");
  build_cmd->add_option("--aux", build.aux, "write paths and hierarchy for the witness command");
  build_cmd->add_option("--edges", build.edges, "also write the edges as text");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "certify a hopset against exact oracles");
  verify_cmd->add_option("--graph", verify.graph)->required();
  verify_cmd->add_option("--hopset", verify.hopset)->required();
  verify_cmd->add_option("--beta", verify.beta, "hopbound (default: the hopset's)");
  verify_cmd->add_option("--eps", verify.eps, "stretch (default: the hopset's)");
  auto* full_flag = verify_cmd->add_flag("--full", verify.full, "check every pair");
  verify_cmd->add_option("--sample", verify.sample, "sampled pair count above the cap (default 10n)")
      ->excludes(full_flag);
  verify_cmd->add_option("--full-cap", verify.full_cap, "largest n checked on all pairs");
  verify_cmd->add_option("--seed", verify.seed, "pair sampling seed");
  verify_cmd->add_option("--report", verify.report, "report JSON");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "sweep beta and seeds, emit CSV");
  bench_cmd->add_option("--graph", bench.graph, "graph file (otherwise generated)");
  add_gen_options(bench_cmd, bench.gen);
  bench_cmd->add_option("--gen-seed", bench.gen.seed, "generator seed");
  bench_cmd->add_option("--betas", bench.betas, "beta grid")->delimiter(',');
  bench_cmd->add_option("--eps", bench.eps);
  bench_cmd->add_option("--seeds", bench.seeds, "build seeds")->delimiter(',');
  bench_cmd->add_option("--regime", bench.regime);
  bench_cmd->add_option("--folklore-c", bench.folklore_c);
  bench_cmd->add_flag("--no-folklore", bench.no_folklore, "skip the folklore baseline rows");
  bench_cmd->add_option("--sample", bench.sample, "verified pairs above the full cap");
  bench_cmd->add_option("--out", bench.out, "CSV file (default stdout)");

  WitnessArgs witness;
  auto* witness_cmd = app.add_subcommand("witness", "extract the phase-by-phase witness walk");
  witness_cmd->add_option("--graph", witness.graph)->required();
  witness_cmd->add_option("--aux", witness.aux)->required();
  witness_cmd->add_option("--s", witness.s)->required();
  witness_cmd->add_option("--t", witness.t)->required();
  witness_cmd->add_flag("--quiet", witness.quiet, "omit the trace");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*build_cmd) return run_build(build);
    if (*verify_cmd) return run_verify(verify);
    if (*bench_cmd) return run_bench(bench);
    if (*witness_cmd) return run_witness(witness);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
