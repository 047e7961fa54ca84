#include "hopset/builder.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "hopset/random.hpp"

namespace hopset {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double log2n(Vertex n) { return n >= 2 ? std::log2(static_cast<double>(n)) : 1.0; }

}  // namespace

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::kAuto: return "auto";
    case Regime::kSmall: return "small";
    case Regime::kLarge: return "large";
  }
  return "auto";
}

Regime parse_regime(std::string_view name) {
  if (name == "auto") return Regime::kAuto;
  if (name == "small") return Regime::kSmall;
  if (name == "large") return Regime::kLarge;
  throw std::invalid_argument("unknown regime '" + std::string(name) + "'");
}

void BuildConfig::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  if (beta < 1) throw std::invalid_argument("beta must be >= 1");
  if (c_v <= 0.0 || c_p <= 0.0 || c_large <= 0.0) {
    throw std::invalid_argument("sampling constants must be positive");
  }
}

Hopset::Hopset(Vertex n, std::vector<HopsetEdge> edges) : n_(n), edges_(std::move(edges)) {
  dedup_edges(edges_);
  for (const HopsetEdge& e : edges_) ++counts_[static_cast<int>(e.kind)];
}

std::vector<Edge> Hopset::plain_edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const HopsetEdge& e : edges_) out.push_back(e.edge());
  return out;
}

Regime select_regime(Vertex n, int beta) {
  return static_cast<double>(beta) <= std::cbrt(static_cast<double>(n)) ? Regime::kSmall
                                                                       : Regime::kLarge;
}

HopsetBuild build_hopset_small_beta(const WeightedDigraph& g, const BuildConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  const DistanceMatrix dist = all_pairs(g);
  HopsetBuild build = build_hopset_small_beta(g, dist, cfg);
  build.runtime_ms = elapsed_ms(start);
  return build;
}

HopsetBuild build_hopset_small_beta(const WeightedDigraph& g, const DistanceMatrix& dist,
                                    const BuildConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  const Vertex n = g.num_vertices();
  HopsetBuild build;
  build.config = cfg;
  build.regime = Regime::kSmall;
  if (n >= 2 && cfg.beta < 20.0 * log2n(n)) {
    build.warnings.push_back("beta below 20*log2(n); the hopbound guarantee is not claimed");
  }

  BuildAux& aux = build.aux;
  aux.h_target = nice_hop_target(n, cfg.beta, cfg.eps);
  aux.paths = build_nice_paths(g, dist, aux.h_target);

  std::vector<HopsetEdge> edges;
  for (const NicePath& p : aux.paths.paths()) {
    // The path's own closure edges, where g lacks an equally light edge.
    for (std::size_t j = 1; j < p.size(); ++j) {
      const Vertex u = p.vertices[j - 1];
      const Vertex v = p.vertices[j];
      if (g.edge_weight(u, v) != dist(u, v)) edges.push_back({u, v, dist(u, v), EdgeKind::kForward});
    }
    auto forward = forward_shortcut(p.vertices, dist);
    edges.insert(edges.end(), forward.begin(), forward.end());
  }

  aux.hierarchy = build_hierarchy(n, cfg.beta, aux.paths, cfg.c_v, cfg.c_p,
                                  derive_seed(cfg.seed, Stream::kHierarchyVertex));
  LevelEdges level_edges = connect_levels(aux.hierarchy, aux.paths, cfg.eps, dist);
  aux.vertex_path_pairs = level_edges.pairs;
  edges.insert(edges.end(), level_edges.edges.begin(), level_edges.edges.end());

  const std::uint64_t backward_seed = derive_seed(cfg.seed, Stream::kBackward);
  for (const NicePath& p : aux.paths.paths()) {
    BackwardResult result = backward_shortcut(p.vertices, cfg.eps / 2.0, cfg.eps, dist, backward_seed);
    edges.insert(edges.end(), result.edges.begin(), result.edges.end());
    result.edges.clear();
    aux.backward.push_back(std::move(result));
  }

  build.hopset = Hopset(n, std::move(edges));
  build.runtime_ms = elapsed_ms(start);
  return build;
}

double large_beta_probability(Vertex n, int beta, double c) {
  const double b = static_cast<double>(beta);
  return std::min(1.0, c * log2n(n) * std::sqrt(static_cast<double>(n)) / (b * std::sqrt(b)));
}

int reduced_beta(std::size_t sample_size) {
  if (sample_size < 2) return 1;
  const double s = static_cast<double>(sample_size);
  return std::max(1, static_cast<int>(std::floor(std::cbrt(s) / std::log2(s))));
}

HopsetBuild build_hopset_large_beta(const WeightedDigraph& g, const BuildConfig& cfg) {
  cfg.validate();
  const auto start = Clock::now();
  const Vertex n = g.num_vertices();
  HopsetBuild build;
  build.config = cfg;
  build.regime = Regime::kLarge;
  build.sample_probability = large_beta_probability(n, cfg.beta, cfg.c_large);

  std::vector<Vertex> sample;
  for (Vertex v = 0; v < n; ++v) {
    if (uniform01(cfg.seed, Stream::kLargeBeta, {static_cast<std::uint64_t>(v)}) < build.sample_probability) {
      sample.push_back(v);
    }
  }
  build.sample_size = sample.size();
  build.reduced_beta = reduced_beta(sample.size());
  if (sample.empty()) {
    build.hopset = Hopset(n, {});
    build.runtime_ms = elapsed_ms(start);
    return build;
  }

  // G': exact distances among sampled vertices; it is its own closure.
  const Vertex reduced_n = static_cast<Vertex>(sample.size());
  DistanceMatrix reduced_dist(reduced_n);
  std::vector<Edge> reduced_edges;
  std::vector<HopsetEdge> edges;
  for (Vertex a = 0; a < reduced_n; ++a) {
    const auto row = sssp_exact(g, sample[a]);
    for (Vertex b = 0; b < reduced_n; ++b) {
      const Length d = row[sample[b]];
      reduced_dist(a, b) = d;
      if (a != b && reachable(d)) {
        reduced_edges.push_back({a, b, d});
        edges.push_back({sample[a], sample[b], d, EdgeKind::kClosure});
      }
    }
  }
  const WeightedDigraph reduced = WeightedDigraph::from_edges(reduced_n, reduced_edges);

  BuildConfig nested_cfg = cfg;
  nested_cfg.beta = build.reduced_beta;
  nested_cfg.seed = derive_seed(cfg.seed, Stream::kSubBuild);
  nested_cfg.regime = Regime::kSmall;
  const HopsetBuild nested = build_hopset_small_beta(reduced, reduced_dist, nested_cfg);
  build.nested_counts = nested.hopset.counts();
  for (const HopsetEdge& e : nested.hopset.edges()) {
    edges.push_back({sample[e.tail], sample[e.head], e.weight, e.kind});
  }

  build.hopset = Hopset(n, std::move(edges));
  build.runtime_ms = elapsed_ms(start);
  return build;
}

HopsetBuild build_hopset(const WeightedDigraph& g, const BuildConfig& cfg) {
  cfg.validate();
  const Regime regime =
      cfg.regime == Regime::kAuto ? select_regime(g.num_vertices(), cfg.beta) : cfg.regime;
  return regime == Regime::kSmall ? build_hopset_small_beta(g, cfg) : build_hopset_large_beta(g, cfg);
}

double folklore_probability(Vertex n, int beta, double c) {
  if (beta < 1) throw std::invalid_argument("beta must be >= 1");
  return std::min(1.0, c * log2n(n) / beta);
}

namespace {

std::vector<HopsetEdge> exact_edges_among(const WeightedDigraph& g, std::span<const Vertex> sample,
                                          EdgeKind kind) {
  std::vector<HopsetEdge> edges;
  for (Vertex a : sample) {
    const auto row = sssp_exact(g, a);
    for (Vertex b : sample) {
      if (a != b && reachable(row[b])) edges.push_back({a, b, row[b], kind});
    }
  }
  return edges;
}

}  // namespace

Hopset build_folklore(const WeightedDigraph& g, int beta, std::uint64_t seed, double c) {
  const double p = folklore_probability(g.num_vertices(), beta, c);
  std::vector<Vertex> sample;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (uniform01(seed, Stream::kFolklore, {static_cast<std::uint64_t>(v)}) < p) sample.push_back(v);
  }
  return Hopset(g.num_vertices(), exact_edges_among(g, sample, EdgeKind::kFolklore));
}

std::vector<int> strongly_connected_components(const WeightedDigraph& g, int* count) {
  const Vertex n = g.num_vertices();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  int next_index = 0;
  int components = 0;
  // Iterative Tarjan: frame = (vertex, next arc offset).
  std::vector<std::pair<Vertex, std::size_t>> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [u, arc] = frames.back();
      const auto arcs = g.out(u);
      if (arc < arcs.size()) {
        const Vertex v = arcs[arc++].to;
        if (index[v] == -1) {
          index[v] = low[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = 1;
          frames.emplace_back(v, 0);
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      if (low[u] == index[u]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = components;
        } while (w != u);
        ++components;
      }
      const Vertex finished = u;
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  if (count) *count = components;
  return comp;
}

Hopset build_shortcut_set(const WeightedDigraph& g, int beta, std::uint64_t seed, double c) {
  const Vertex n = g.num_vertices();
  int components = 0;
  const auto comp = strongly_connected_components(g, &components);
  std::vector<Vertex> center(static_cast<std::size_t>(components), -1);
  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(components));
  for (Vertex v = 0; v < n; ++v) {
    members[comp[v]].push_back(v);
    if (center[comp[v]] == -1) center[comp[v]] = v;
  }

  std::vector<Edge> reversed;
  for (const Edge& e : g.edges()) reversed.push_back({e.head, e.tail, e.weight});
  const WeightedDigraph transpose = WeightedDigraph::from_edges(n, reversed);

  std::vector<HopsetEdge> edges;
  for (int cid = 0; cid < components; ++cid) {
    if (members[cid].size() < 2) continue;
    const Vertex hub = center[cid];
    const auto from_hub = sssp_exact(g, hub);
    const auto to_hub = sssp_exact(transpose, hub);
    for (Vertex v : members[cid]) {
      if (v == hub) continue;
      edges.push_back({hub, v, from_hub[v], EdgeKind::kStar});
      edges.push_back({v, hub, to_hub[v], EdgeKind::kStar});
    }
  }

  // Folklore on the condensation, sampling components by their centre id.
  std::vector<std::vector<int>> dag(static_cast<std::size_t>(components));
  for (const Edge& e : g.edges()) {
    if (comp[e.tail] != comp[e.head]) dag[comp[e.tail]].push_back(comp[e.head]);
  }
  const double p = folklore_probability(components, beta, c);
  std::vector<int> sampled;
  for (int cid = 0; cid < components; ++cid) {
    if (uniform01(seed, Stream::kFolklore, {static_cast<std::uint64_t>(center[cid])}) < p) {
      sampled.push_back(cid);
    }
  }
  std::vector<char> is_sampled(static_cast<std::size_t>(components), 0);
  for (int cid : sampled) is_sampled[cid] = 1;
  for (int a : sampled) {
    std::vector<char> seen(static_cast<std::size_t>(components), 0);
    std::deque<int> queue{a};
    seen[a] = 1;
    std::vector<int> targets;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (x != a && is_sampled[x]) targets.push_back(x);
      for (int y : dag[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    if (targets.empty()) continue;
    const auto row = sssp_exact(g, center[a]);
    for (int b : targets) edges.push_back({center[a], center[b], row[center[b]], EdgeKind::kFolklore});
  }
  return Hopset(n, std::move(edges));
}

}  // namespace hopset
