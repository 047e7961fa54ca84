// Weighted directed graphs with integer weights, stored in compressed
// adjacency form (both directions), plus the plain-text edge-list format.

#ifndef HOPSET_GRAPH_HPP
#define HOPSET_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopset {

using Vertex = std::int32_t;
using Length = std::int64_t;

// Distinguished "no path" value. Never produced by arithmetic on real
// lengths, so every consumer has to test for it explicitly.
inline constexpr Length kUnreachable = -1;

inline bool reachable(Length d) { return d != kUnreachable; }

// Largest admissible n*W product; keeps every simple-path length and the
// sum of two of them inside int64.
inline constexpr Length kMaxTotalLength = Length{1} << 60;

class NoPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Vertex tail;
  Vertex head;
  Length weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex to;
  Length weight;
};

class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  // Builds the graph from an arbitrary edge list. Parallel edges collapse to
  // the lightest copy; self-loops and weights outside [1, kMaxTotalLength/n]
  // are rejected with std::invalid_argument.
  static WeightedDigraph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return out_arcs_.size(); }
  Length max_weight() const { return max_weight_; }

  std::span<const Arc> out(Vertex u) const {
    return {out_arcs_.data() + out_begin_[u], out_arcs_.data() + out_begin_[u + 1]};
  }
  std::span<const Arc> in(Vertex v) const {
    return {in_arcs_.data() + in_begin_[v], in_arcs_.data() + in_begin_[v + 1]};
  }

  // Weight of the edge (u,v), or kUnreachable when absent.
  Length edge_weight(Vertex u, Vertex v) const;

  // Edges sorted by (tail, head).
  std::vector<Edge> edges() const;

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
      throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(n_) + ")");
    }
  }

 private:
  Vertex n_ = 0;
  Length max_weight_ = 0;
  std::vector<std::size_t> out_begin_{0};
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_begin_{0};
  std::vector<Arc> in_arcs_;
};

// Union of a graph with extra edges (lightest copy kept per pair).
WeightedDigraph with_extra_edges(const WeightedDigraph& g, std::span<const Edge> extra);

// Text format: "n m" header, then m lines "u v w"; '#' starts a comment line.
WeightedDigraph read_graph(std::istream& in);
WeightedDigraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const WeightedDigraph& g);

}  // namespace hopset

#endif  // HOPSET_GRAPH_HPP
