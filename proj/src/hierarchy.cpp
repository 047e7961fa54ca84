#include "hopset/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hopset/random.hpp"

namespace hopset {

namespace {

double log2n(Vertex n) { return n >= 2 ? std::log2(static_cast<double>(n)) : 1.0; }

}  // namespace

int level_count(Vertex n) {
  int levels = 0;
  while ((Length{1} << levels) < n) ++levels;
  return std::max(1, levels);
}

double vertex_threshold(Vertex n, int beta, double c_v, int level) {
  const double l = log2n(n);
  return std::min(1.0, c_v * l * l / (std::ldexp(1.0, level) * beta));
}

double path_threshold(Vertex n, int beta, double c_p, int level) {
  const double l = log2n(n);
  return std::min(1.0, c_p * std::ldexp(1.0, level) * l * l * l / beta);
}

SamplingHierarchy build_hierarchy(Vertex n, int beta, const NicePathCollection& paths, double c_v,
                                  double c_p, std::uint64_t seed) {
  if (beta < 1) throw std::invalid_argument("beta must be >= 1");
  SamplingHierarchy h;
  h.c_v = c_v;
  h.c_p = c_p;
  h.seed = seed;
  const int levels = level_count(n);
  for (int i = 1; i <= levels; ++i) {
    SamplingLevel level;
    level.level = i;
    level.vertex_threshold = vertex_threshold(n, beta, c_v, i);
    level.path_threshold = path_threshold(n, beta, c_p, i);
    h.levels.push_back(std::move(level));
  }

  h.vertex_depth.assign(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    const double r = uniform01(seed, Stream::kHierarchyVertex, {static_cast<std::uint64_t>(v)});
    for (auto& level : h.levels) {
      if (r < level.vertex_threshold) {
        level.vertices.push_back(v);
        h.vertex_depth[v] = level.level;
      }
    }
  }
  h.path_entry.assign(paths.size(), levels + 1);
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const double r = uniform01(seed, Stream::kHierarchyPath, {p});
    for (auto& level : h.levels) {
      if (r < level.path_threshold) {
        level.paths.push_back(static_cast<int>(p));
        h.path_entry[p] = std::min(h.path_entry[p], level.level);
      }
    }
  }
  return h;
}

std::vector<HopsetEdge> vertex_path_hopset(Vertex v, const NicePath& path, double eps,
                                           const DistanceMatrix& dist) {
  const double base = 1.0 + eps / 2.0;
  std::map<int, Vertex> first;
  for (Vertex w : path.vertices) {
    const Length d = dist(v, w);
    if (w == v || !reachable(d)) continue;
    first.try_emplace(distance_class(d, base), w);
  }
  std::vector<HopsetEdge> edges;
  edges.reserve(first.size());
  for (const auto& [cls, w] : first) edges.push_back({v, w, dist(v, w), EdgeKind::kVertexPath});
  return edges;
}

LevelEdges connect_levels(const SamplingHierarchy& hierarchy, const NicePathCollection& paths,
                          double eps, const DistanceMatrix& dist) {
  LevelEdges result;
  const Vertex n = static_cast<Vertex>(hierarchy.vertex_depth.size());
  for (Vertex v = 0; v < n; ++v) {
    const int depth = hierarchy.vertex_depth[v];
    if (depth == 0) continue;
    for (std::size_t p = 0; p < paths.size(); ++p) {
      // (v, P) shares some level iff P enters no deeper than v leaves.
      if (hierarchy.path_entry[p] > depth) continue;
      auto edges = vertex_path_hopset(v, paths[p], eps, dist);
      result.edges.insert(result.edges.end(), edges.begin(), edges.end());
      ++result.pairs;
    }
  }
  dedup_edges(result.edges);
  return result;
}

}  // namespace hopset
