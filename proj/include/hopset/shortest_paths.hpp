// Exact, hop-bounded and fewest-hop shortest paths.

#ifndef HOPSET_SHORTEST_PATHS_HPP
#define HOPSET_SHORTEST_PATHS_HPP

#include <span>
#include <vector>

#include "hopset/graph.hpp"

namespace hopset {

struct Path {
  std::vector<Vertex> vertices;
  Length length = 0;

  std::size_t hops() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

// Sum of edge weights along `vertices` in g (lightest parallel copy); throws
// NoPathError if some consecutive pair is not an edge.
Length walk_length(const WeightedDigraph& g, std::span<const Vertex> vertices);

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(Vertex n) : n_(n), data_(static_cast<std::size_t>(n) * n, kUnreachable) {
    for (Vertex v = 0; v < n; ++v) (*this)(v, v) = 0;
  }

  Vertex size() const { return n_; }
  Length operator()(Vertex u, Vertex v) const { return data_[index(u, v)]; }
  Length& operator()(Vertex u, Vertex v) { return data_[index(u, v)]; }

  std::span<const Length> row(Vertex u) const {
    return {data_.data() + index(u, 0), static_cast<std::size_t>(n_)};
  }
  std::span<Length> row(Vertex u) { return {data_.data() + index(u, 0), static_cast<std::size_t>(n_)}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  Vertex n_ = 0;
  std::vector<Length> data_;
};

// Dijkstra from s; entry v is dist(s,v) or kUnreachable.
std::vector<Length> sssp_exact(const WeightedDigraph& g, Vertex s);

// One Dijkstra per source.
DistanceMatrix all_pairs(const WeightedDigraph& g);

// G*: an edge (u, v, dist(u,v)) for every ordered reachable pair u != v.
WeightedDigraph transitive_closure_weighted(const WeightedDigraph& g);
WeightedDigraph transitive_closure_weighted(const WeightedDigraph& g, const DistanceMatrix& dist);

// Minimum length over s->v walks with at most `beta` edges, by the layered
// recurrence d_h(v) = min(d_{h-1}(v), min_{(u,v)} d_{h-1}(u) + w).
std::vector<Length> hop_bounded_dist(const WeightedDigraph& g, Vertex s, int beta);

// Same recurrence, additionally returning a witness walk to `t`.
Path hop_bounded_path(const WeightedDigraph& g, Vertex s, Vertex t, int beta);

// Single-source tree of roads: Dijkstra keyed by (length, hops), with each
// vertex's parent the smallest-id predecessor achieving its key. Prefixes of
// a road in one tree are roads of the same tree.
class RoadTree {
 public:
  RoadTree(const WeightedDigraph& g, Vertex source);

  Vertex source() const { return source_; }
  Length length(Vertex v) const { return length_[v]; }
  int hops(Vertex v) const { return hops_[v]; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  bool reaches(Vertex v) const { return reachable(length_[v]); }

  // Throws NoPathError when v is unreachable.
  Path path_to(Vertex v) const;

 private:
  Vertex source_;
  std::vector<Length> length_;
  std::vector<int> hops_;
  std::vector<Vertex> parent_;
};

// Road R(u,v) in g_aug: a shortest u->v path with fewest hops.
Path road(const WeightedDigraph& g_aug, Vertex u, Vertex v);

}  // namespace hopset

#endif  // HOPSET_SHORTEST_PATHS_HPP
