// End-to-end hopset assembly and the two sampling baselines.

#ifndef HOPSET_BUILDER_HPP
#define HOPSET_BUILDER_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hopset/graph.hpp"
#include "hopset/hierarchy.hpp"
#include "hopset/path_hopset.hpp"
#include "hopset/pathset.hpp"
#include "hopset/shortest_paths.hpp"

namespace hopset {

enum class Regime { kAuto, kSmall, kLarge };

std::string_view regime_name(Regime regime);
Regime parse_regime(std::string_view name);

struct BuildConfig {
  int beta = 0;
  double eps = 0.5;
  std::uint64_t seed = 1;
  double c_v = 24.0;
  double c_p = 24.0;
  double c_large = 1.0;  // large-beta vertex sampling constant
  Regime regime = Regime::kAuto;

  // Throws std::invalid_argument unless eps in (0,1) and beta >= 1.
  void validate() const;
};

using KindCounts = std::array<std::size_t, kNumEdgeKinds>;

class Hopset {
 public:
  Hopset() = default;
  // Deduplicates by endpoints; all copies of a pair must agree on weight.
  Hopset(Vertex n, std::vector<HopsetEdge> edges);

  Vertex num_vertices() const { return n_; }
  const std::vector<HopsetEdge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  const KindCounts& counts() const { return counts_; }
  std::size_t count(EdgeKind kind) const { return counts_[static_cast<int>(kind)]; }

  std::vector<Edge> plain_edges() const;

 private:
  Vertex n_ = 0;
  std::vector<HopsetEdge> edges_;
  KindCounts counts_{};
};

// Everything the small-beta construction decided, kept for diagnostics and
// the witness extractor.
struct BuildAux {
  int h_target = 0;
  NicePathCollection paths;
  SamplingHierarchy hierarchy;
  std::vector<BackwardResult> backward;  // per path, samples only (edges moved into the hopset)
  std::size_t vertex_path_pairs = 0;
};

struct HopsetBuild {
  Hopset hopset;
  BuildConfig config;
  Regime regime = Regime::kSmall;  // the regime actually used
  BuildAux aux;                    // populated by the small-beta regime
  // Large-beta only: sampled vertex count, probability, reduced beta and the
  // nested build's raw per-kind counts.
  std::size_t sample_size = 0;
  double sample_probability = 0.0;
  int reduced_beta = 0;
  KindCounts nested_counts{};
  double runtime_ms = 0.0;
  std::vector<std::string> warnings;
};

// Small if beta <= n^{1/3}, else large.
Regime select_regime(Vertex n, int beta);

HopsetBuild build_hopset_small_beta(const WeightedDigraph& g, const BuildConfig& cfg);
// Same, reusing precomputed all-pairs distances of g.
HopsetBuild build_hopset_small_beta(const WeightedDigraph& g, const DistanceMatrix& dist,
                                    const BuildConfig& cfg);

// min(1, c * log2(n) * sqrt(n) / beta^{3/2}).
double large_beta_probability(Vertex n, int beta, double c);
// max(1, floor(n'^{1/3} / log2 n')).
int reduced_beta(std::size_t sample_size);

HopsetBuild build_hopset_large_beta(const WeightedDigraph& g, const BuildConfig& cfg);

// Dispatches on cfg.regime (auto resolves through select_regime).
HopsetBuild build_hopset(const WeightedDigraph& g, const BuildConfig& cfg);

// min(1, c * log2(n) / beta).
double folklore_probability(Vertex n, int beta, double c);

// Exact edges between every reachable pair of a uniform vertex sample.
Hopset build_folklore(const WeightedDigraph& g, int beta, std::uint64_t seed, double c = 1.0);

// Strongly connected components; component ids are in reverse topological
// order of the condensation (Tarjan order).
std::vector<int> strongly_connected_components(const WeightedDigraph& g, int* count = nullptr);

// Bidirectional exact-weight star per SCC (centred on its smallest vertex)
// plus the folklore construction on the condensation, mapped back to the
// component centres.
Hopset build_shortcut_set(const WeightedDigraph& g, int beta, std::uint64_t seed, double c = 1.0);

}  // namespace hopset

#endif  // HOPSET_BUILDER_HPP
