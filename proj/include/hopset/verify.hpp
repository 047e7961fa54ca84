// Oracle certification of hopset contracts and the witness-path extractor.
//
// The contract-level certificate is the layered hop-bounded DP over G u H.
// The witness extractor replays the phase-by-phase path construction used in
// the hopbound argument and is reported as a diagnostic only.

#ifndef HOPSET_VERIFY_HPP
#define HOPSET_VERIFY_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hopset/builder.hpp"
#include "hopset/graph.hpp"
#include "hopset/hierarchy.hpp"
#include "hopset/path_hopset.hpp"
#include "hopset/pathset.hpp"
#include "hopset/shortest_paths.hpp"

namespace hopset {

struct VerifyOptions {
  Vertex full_cap = 300;         // verify all pairs up to this n
  std::size_t sample_pairs = 0;  // otherwise this many seeded pairs (0: 10*n)
  bool force_full = false;
  std::uint64_t seed = 0;
  std::size_t max_failures = 50;  // failures kept in the report
};

struct EdgeFailure {
  Vertex tail;
  Vertex head;
  Length weight;
  Length distance;  // dist_G(tail, head), or kUnreachable
};

struct PairFailure {
  Vertex u;
  Vertex v;
  double required;  // upper bound the pair had to meet
  Length observed;  // best value found, or kUnreachable
};

struct DistanceReport {
  bool passed = true;
  std::size_t edges_checked = 0;
  std::size_t pairs_checked = 0;
  std::size_t failure_count = 0;
  std::vector<EdgeFailure> edge_failures;
  std::vector<PairFailure> pair_failures;
};

DistanceReport check_distance_preservation(const WeightedDigraph& g, std::span<const HopsetEdge> hopset,
                                           const VerifyOptions& options = {});

struct VerificationReport {
  int beta = 0;
  double eps = 0.0;
  bool full = true;
  std::size_t pairs_checked = 0;
  // Largest ratio of the best <=beta-hop length to the true distance
  // (infinity when some pair has no <=beta-hop walk at all).
  double max_stretch = 1.0;
  // Least beta' with every checked pair within (1+eps) using <= beta' hops;
  // -1 when some pair never gets there.
  int achieved_hopbound = 0;
  bool distance_preservation = true;
  bool passed = true;
  std::size_t failure_count = 0;
  std::vector<PairFailure> failures;
};

VerificationReport check_hop_stretch(const WeightedDigraph& g, std::span<const HopsetEdge> hopset,
                                     int beta, double eps, const VerifyOptions& options = {});

// Checked pairs as (source, targets) groups; all pairs when full.
std::vector<std::pair<Vertex, std::vector<Vertex>>> verification_pairs(Vertex n,
                                                                       const VerifyOptions& options,
                                                                       bool* full = nullptr);

struct ReachabilityReport {
  bool closure_preserved = true;
  std::size_t reachable_pairs = 0;
  // Largest fewest-edge count over reachable pairs in G u H (unweighted).
  int max_hops = 0;
};

// Reachability-only certificate for shortcut sets: compares the transitive
// closures of G and G u H and measures the unweighted hop diameter.
ReachabilityReport check_reachability(const WeightedDigraph& g, std::span<const HopsetEdge> shortcuts);

struct BackwardFailure {
  Vertex x;
  Vertex y;
  int scale;     // k
  int interval;  // index in the scale's family
  int level;     // i
  double bound;
  Length observed;
};

struct BackwardBoundReport {
  std::size_t backward_pairs = 0;  // x after y on P, x reaches y
  std::size_t unconditional_passes = 0;
  std::size_t obligated = 0;  // designated sample hit occurred
  std::size_t obligated_failures = 0;
  std::vector<BackwardFailure> failures;

  double pass_rate() const {
    return backward_pairs == 0 ? 1.0
                               : static_cast<double>(unconditional_passes) / static_cast<double>(backward_pairs);
  }
};

// Bound: (1+gamma) dist + delta * len(P) * h_P(y,x) / (|P| * |R(x,y) n P|).
double backward_bound(double gamma, double delta, Length distance, Length path_length,
                      std::size_t path_size, int hops_on_path, std::size_t road_hits);

// Designated scale k (smallest k >= 1 with hops <= 2^k) and level i (with
// hits - 4 in (2^i, 2^{i+1}]); level is 0 when hits - 4 <= 2.
int designated_scale(int hops_on_path);
int designated_level(std::size_t road_hits);

// `g_aug` is G plus every forward edge; `edges` the path's backward edges;
// `samples` the draws that produced them; `dist` distances of G.
BackwardBoundReport check_backward_bound(const WeightedDigraph& g_aug, std::span<const Vertex> path,
                                         std::span<const HopsetEdge> edges, double gamma, double delta,
                                         std::span<const BackwardSample> samples,
                                         const DistanceMatrix& dist);

// What the extractor needs from a build.
struct WitnessAux {
  int beta = 0;
  double eps = 0.5;
  NicePathCollection paths;
  SamplingHierarchy hierarchy;
  std::vector<HopsetEdge> edges;  // the whole hopset, kinds included
};

WitnessAux make_witness_aux(const HopsetBuild& build);

struct WitnessResult {
  Path road;                  // R(s,t)
  Path walk;                  // Q
  std::vector<Vertex> anchors;  // s_0 .. s_{L+1}
  Length distance = 0;        // dist(s,t)
  bool realizable = false;    // every step of Q is an edge of G u H
  bool hop_ok = false;        // |Q| <= beta
  bool stretch_ok = false;    // len(Q) <= (1+eps) dist(s,t)
  std::vector<std::string> trace;

  bool ok() const { return realizable && hop_ok && stretch_ok; }
};

class WitnessExtractor {
 public:
  WitnessExtractor(const WeightedDigraph& g, WitnessAux aux);

  // Throws NoPathError if t is unreachable from s, std::runtime_error (with
  // the trace) if a phase fails to terminate.
  WitnessResult extract(Vertex s, Vertex t) const;

  const WeightedDigraph& augmented() const { return g_aug_; }
  const WeightedDigraph& with_hopset() const { return g_all_; }

 private:
  // Cheapest walk from `from` to `to` with at most `hops` edges inside the
  // subgraph of G u H induced by `allowed` (plus both endpoints).
  std::vector<Vertex> local_walk(Vertex from, Vertex to, std::span<const Vertex> allowed, int hops) const;

  WitnessAux aux_;
  WeightedDigraph g_aug_;
  WeightedDigraph g_all_;
};

}  // namespace hopset

#endif  // HOPSET_VERIFY_HPP
