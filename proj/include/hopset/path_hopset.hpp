// Hopset edges attached to a single shortest path: exact 2-hop forward
// shortcuts, the 3-hop weak backward construction for a vertex subset, and
// the sampled multi-scale backward construction built on top of it.

#ifndef HOPSET_PATH_HOPSET_HPP
#define HOPSET_PATH_HOPSET_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hopset/graph.hpp"
#include "hopset/shortest_paths.hpp"

namespace hopset {

enum class EdgeKind : std::uint8_t {
  kForward = 0,     // type 1: nice path edges and their 2-hop shortcuts
  kVertexPath = 1,  // type 2: sampled vertex to sampled path
  kBackward = 2,    // type 3: backward shortcutting
  kClosure = 3,     // exact edges among the large-beta vertex sample
  kFolklore = 4,    // exact edges among a uniform vertex sample
  kStar = 5,        // bidirectional star inside a strongly connected component
};

inline constexpr int kNumEdgeKinds = 6;

std::string_view kind_name(EdgeKind kind);
EdgeKind parse_kind(std::string_view name);

struct HopsetEdge {
  Vertex tail;
  Vertex head;
  Length weight;
  EdgeKind kind;

  Edge edge() const { return Edge{tail, head, weight}; }
  friend bool operator==(const HopsetEdge&, const HopsetEdge&) = default;
};

// H(P) for a shortest path given by its vertices: together with the path's
// own consecutive edges, every forward pair gets an exact path of at most
// two hops. Path edges themselves are not emitted.
std::vector<HopsetEdge> forward_shortcut(std::span<const Vertex> path, const DistanceMatrix& dist);

// Index of the distance class [(base)^j, (base)^{j+1}) containing d >= 1.
int distance_class(Length d, double base);

// Windows of a segment: bucket of each position by floor(prefix / budget),
// budget = delta * len(segment). Returns window id per position.
std::vector<int> weak_windows(std::span<const Length> prefix, double delta);

// 3-hop construction for pairs with an endpoint in `sampled` (vertices of
// `segment`); `segment` is a contiguous piece of a shortest path. For every
// sampled v, every window and every distance class, links v to the first
// window vertex in that class and the last window vertex in that class to v.
std::vector<HopsetEdge> weak_backward(std::span<const Vertex> segment,
                                      std::span<const Vertex> sampled, double gamma,
                                      double delta, const DistanceMatrix& dist);

struct IntervalFamily {
  int scale = 0;  // k: intervals of 2^{k+1} vertices, offset 2^k
  // Half-open position ranges [begin, end) on the path.
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
  double mean_length = 0.0;  // mu_k
};

IntervalFamily interval_family(std::span<const Length> prefix, int scale);

// ell(I): largest ell >= 0 with 2^ell * mu <= len(I), clamped to 0.
int interval_class(Length interval_length, double mean_length);

// Sampling probability of S_i: min(1, log2(n) / 2^i).
double backward_sample_probability(Vertex n, int i);

// delta / 2^{ell + i + 3}.
double backward_delta(double delta, int ell, int i);

// Number of scales used for a path with `size` vertices: max(1, ceil(log2 size)).
int backward_scale_count(std::size_t size);

struct BackwardSample {
  int scale;               // k
  int interval;            // index within the scale's family
  int level;               // i
  int ell;                 // interval class
  std::size_t begin, end;  // interval positions [begin, end)
  std::vector<std::size_t> positions;  // sampled positions (S_i)
};

struct BackwardResult {
  std::vector<HopsetEdge> edges;
  std::vector<BackwardSample> samples;
};

// Full backward shortcutting of one path. The sampling rate uses the graph's
// vertex count dist.size(); draws are keyed by (seed, k, interval, i, vertex).
BackwardResult backward_shortcut(std::span<const Vertex> path, double gamma, double delta,
                                 const DistanceMatrix& dist, std::uint64_t seed);

// Deduplicates by (tail, head), keeping the first occurrence.
void dedup_edges(std::vector<HopsetEdge>& edges);

}  // namespace hopset

#endif  // HOPSET_PATH_HOPSET_HPP
