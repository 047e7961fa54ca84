// Nice path collections: greedily chosen, vertex-disjoint, fixed-hop shortest
// paths of the weighted transitive closure, shortest first.

#ifndef HOPSET_PATHSET_HPP
#define HOPSET_PATHSET_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include "hopset/graph.hpp"
#include "hopset/shortest_paths.hpp"

namespace hopset {

struct NicePath {
  int id = 0;
  std::vector<Vertex> vertices;
  // prefix_lengths[j] = dist(vertices[0], vertices[j]).
  std::vector<Length> prefix_lengths;

  std::size_t size() const { return vertices.size(); }
  int hops() const { return static_cast<int>(vertices.size()) - 1; }
  Length length() const { return prefix_lengths.empty() ? 0 : prefix_lengths.back(); }
  // Hops along the path from position a to position b (a <= b).
  int hops_between(std::size_t a, std::size_t b) const { return static_cast<int>(b - a); }
};

class NicePathCollection {
 public:
  NicePathCollection() = default;
  NicePathCollection(Vertex n, int h_target, std::vector<NicePath> paths);

  int h_target() const { return h_target_; }
  const std::vector<NicePath>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }
  const NicePath& operator[](std::size_t i) const { return paths_[i]; }

  // Owning path id of v, or -1.
  int path_of(Vertex v) const { return path_of_[v]; }
  // Position of v on its owning path (undefined when path_of(v) == -1).
  int position_of(Vertex v) const { return position_of_[v]; }

 private:
  int h_target_ = 0;
  std::vector<NicePath> paths_;
  std::vector<int> path_of_;
  std::vector<int> position_of_;
};

// max(1, floor(eps * beta / (24 * log2 n))).
int nice_hop_target(Vertex n, int beta, double eps);

// Greedy maximal collection. `g` is any graph whose weighted transitive
// closure is the G* in question (the input graph itself, or G* directly);
// `dist` its all-pairs distances. Ties between equally long candidates go
// to the smallest (start, end) pair, then the lexicographically smallest
// vertex sequence.
NicePathCollection build_nice_paths(const WeightedDigraph& g, const DistanceMatrix& dist,
                                    int h_target);

// One line per path, space-separated vertex ids.
void write_paths(std::ostream& out, const NicePathCollection& paths);

// Path built from explicit vertices with prefix lengths from `dist`.
NicePath make_path(int id, std::vector<Vertex> vertices, const DistanceMatrix& dist);

}  // namespace hopset

#endif  // HOPSET_PATHSET_HPP
