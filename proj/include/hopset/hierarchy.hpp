// Nested vertex/path sampling levels and the vertex-to-path edges that
// connect samples of the same level.

#ifndef HOPSET_HIERARCHY_HPP
#define HOPSET_HIERARCHY_HPP

#include <cstdint>
#include <vector>

#include "hopset/graph.hpp"
#include "hopset/path_hopset.hpp"
#include "hopset/pathset.hpp"

namespace hopset {

struct SamplingLevel {
  int level = 0;  // 1-based
  double vertex_threshold = 0.0;
  double path_threshold = 0.0;
  std::vector<Vertex> vertices;
  std::vector<int> paths;
};

struct SamplingHierarchy {
  std::vector<SamplingLevel> levels;
  double c_v = 24.0;
  double c_p = 24.0;
  std::uint64_t seed = 0;
  // Deepest level holding each vertex (0: none) and shallowest level holding
  // each path (levels.size()+1: none). Nesting makes these a full description.
  std::vector<int> vertex_depth;
  std::vector<int> path_entry;

  int num_levels() const { return static_cast<int>(levels.size()); }
  bool vertex_in(int level, Vertex v) const { return vertex_depth[v] >= level; }
  bool path_in(int level, int path) const { return path_entry[path] <= level; }
};

// ceil(log2 n), at least 1.
int level_count(Vertex n);

// min(1, c_v * log2(n)^2 / (2^i * beta)).
double vertex_threshold(Vertex n, int beta, double c_v, int level);
// min(1, c_p * 2^i * log2(n)^3 / beta).
double path_threshold(Vertex n, int beta, double c_p, int level);

SamplingHierarchy build_hierarchy(Vertex n, int beta, const NicePathCollection& paths, double c_v,
                                  double c_p, std::uint64_t seed);

// Edges from v to the first vertex of `path` in each distance class of base
// (1 + eps/2).
std::vector<HopsetEdge> vertex_path_hopset(Vertex v, const NicePath& path, double eps,
                                           const DistanceMatrix& dist);

struct LevelEdges {
  std::vector<HopsetEdge> edges;
  std::size_t pairs = 0;  // distinct (vertex, path) pairs processed
};

// Union over levels of vertex_path_hopset for every sampled vertex and
// sampled path of that level.
LevelEdges connect_levels(const SamplingHierarchy& hierarchy, const NicePathCollection& paths,
                          double eps, const DistanceMatrix& dist);

}  // namespace hopset

#endif  // HOPSET_HIERARCHY_HPP
