#include <cmath>

#include <gtest/gtest.h>

#include "hopset/generate.hpp"
#include "hopset/path_hopset.hpp"
#include "hopset/random.hpp"
#include "hopset/verify.hpp"
#include "oracles.hpp"

using namespace hopset;

namespace {

// Path 0..len-1 with random forward weights plus random backward edges; the
// forward path stays a shortest path because every backward edge points left.
struct PathInstance {
  Vertex n;
  std::vector<Edge> edges;
  std::vector<Vertex> path;
};

PathInstance path_with_back_edges(Vertex len, int back, Length max_w, std::uint64_t seed) {
  CounterRng rng(seed, Stream::kGenerator);
  PathInstance inst{len, {}, {}};
  for (Vertex v = 0; v < len; ++v) inst.path.push_back(v);
  for (Vertex v = 0; v + 1 < len; ++v) inst.edges.push_back({v, v + 1, static_cast<Length>(rng.below(max_w)) + 1});
  for (int j = 0; j < back; ++j) {
    const auto u = static_cast<Vertex>(rng.below(len));
    const auto v = static_cast<Vertex>(rng.below(len));
    if (v < u) inst.edges.push_back({u, v, static_cast<Length>(rng.below(max_w)) + 1});
  }
  return inst;
}

std::vector<Edge> plain(const std::vector<HopsetEdge>& edges) {
  std::vector<Edge> out;
  for (const HopsetEdge& e : edges) out.push_back(e.edge());
  return out;
}

std::vector<Edge> path_edges(std::span<const Vertex> path, const DistanceMatrix& dist) {
  std::vector<Edge> out;
  for (std::size_t j = 1; j < path.size(); ++j) out.push_back({path[j - 1], path[j], dist(path[j - 1], path[j])});
  return out;
}

}  // namespace

TEST(ForwardShortcut, TwoVertexPathIsEmpty) {
  const auto g = WeightedDigraph::from_edges(2, std::vector<Edge>{{0, 1, 4}});
  const std::vector<Vertex> p{0, 1};
  EXPECT_TRUE(forward_shortcut(p, all_pairs(g)).empty());
}

TEST(ForwardShortcut, FourVertexUnitPath) {
  std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
  const auto g = WeightedDigraph::from_edges(4, edges);
  const std::vector<Vertex> p{0, 1, 2, 3};
  const auto h = forward_shortcut(p, all_pairs(g));
  EXPECT_LE(h.size(), 3u);
  auto all = edges;
  for (const HopsetEdge& e : h) all.push_back(e.edge());
  for (Vertex u = 0; u < 4; ++u) {
    const auto best = oracle::walk_enumeration(4, all, u, 2);
    for (Vertex v = u + 1; v < 4; ++v) EXPECT_EQ(best[v], v - u) << u << "->" << v;
  }
}

TEST(ForwardShortcut, RandomPathsAreTwoHopExact) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (Vertex len : {3, 5, 17, 64}) {
      const auto inst = path_with_back_edges(len, len, 20, seed);
      const auto g = WeightedDigraph::from_edges(inst.n, inst.edges);
      const auto dist = all_pairs(g);
      const auto h = forward_shortcut(inst.path, dist);
      const auto bits = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(len))));
      EXPECT_LE(h.size(), static_cast<std::size_t>(len) * bits);
      for (const HopsetEdge& e : h) EXPECT_EQ(e.weight, dist(e.tail, e.head));
      auto only = path_edges(inst.path, dist);
      for (const HopsetEdge& e : h) only.push_back(e.edge());
      const auto local = WeightedDigraph::from_edges(inst.n, only);
      for (Vertex u = 0; u < len; ++u) {
        const auto two = hop_bounded_dist(local, u, 2);
        for (Vertex v = u + 1; v < len; ++v) ASSERT_EQ(two[v], dist(u, v)) << "len " << len;
      }
    }
  }
}

TEST(DistanceClass, Boundaries) {
  EXPECT_EQ(distance_class(1, 2.0), 0);
  EXPECT_EQ(distance_class(2, 2.0), 1);
  EXPECT_EQ(distance_class(3, 2.0), 1);
  EXPECT_EQ(distance_class(4, 2.0), 2);
  EXPECT_EQ(distance_class(1, 1.5), 0);
  EXPECT_EQ(distance_class(2, 1.5), 1);
  EXPECT_EQ(distance_class(3, 1.5), 2);  // 2.25 <= 3 < 3.375
  EXPECT_THROW(distance_class(0, 2.0), std::invalid_argument);
  for (Length d = 1; d < 500; ++d) {
    const int j = distance_class(d, 1.25);
    EXPECT_LE(std::pow(1.25, j), static_cast<double>(d));
    EXPECT_GT(std::pow(1.25, j + 1), static_cast<double>(d));
  }
}

TEST(WeakWindows, CountAndLength) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CounterRng rng(seed, Stream::kGenerator);
    std::vector<Length> prefix{0};
    for (int j = 0; j < 30; ++j) prefix.push_back(prefix.back() + static_cast<Length>(rng.below(50)) + 1);
    for (double delta : {0.1, 0.25, 0.5, 0.9}) {
      const auto w = weak_windows(prefix, delta);
      const double budget = delta * static_cast<double>(prefix.back());
      EXPECT_LE(w.back() + 1, static_cast<int>(std::ceil(1.0 / delta)) + 1);
      for (std::size_t a = 0; a < w.size(); ++a) {
        if (a > 0) EXPECT_GE(w[a], w[a - 1]);
        for (std::size_t b = a; b < w.size() && w[b] == w[a]; ++b) {
          EXPECT_LE(static_cast<double>(prefix[b] - prefix[a]), budget);
        }
      }
    }
  }
}

TEST(WeakBackward, EmptySampleGivesNothing) {
  const auto inst = path_with_back_edges(8, 10, 5, 1);
  const auto dist = all_pairs(WeightedDigraph::from_edges(inst.n, inst.edges));
  EXPECT_TRUE(weak_backward(inst.path, {}, 0.5, 0.5, dist).empty());
}

TEST(WeakBackward, DagHasNoObligations) {
  const auto inst = path_with_back_edges(8, 0, 5, 2);
  const auto dist = all_pairs(WeightedDigraph::from_edges(inst.n, inst.edges));
  const std::vector<Vertex> s{2, 5};
  for (const HopsetEdge& e : weak_backward(inst.path, s, 0.5, 0.5, dist)) {
    EXPECT_LT(e.tail, e.head);  // only forward links exist
  }
}

TEST(WeakBackward, ThreeHopBound) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inst = path_with_back_edges(12, 14, 9, seed);
    const auto g = WeightedDigraph::from_edges(inst.n, inst.edges);
    const auto dist = all_pairs(g);
    CounterRng rng(seed, Stream::kVerifySample);
    std::vector<Vertex> s;
    while (s.size() < 3) {
      const auto v = static_cast<Vertex>(rng.below(12));
      if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    }
    const double gamma = 0.5;
    const double delta = 0.5;
    const auto out = weak_backward(inst.path, s, gamma, delta, dist);
    auto local = path_edges(inst.path, dist);
    for (const HopsetEdge& e : forward_shortcut(inst.path, dist)) local.push_back(e.edge());
    for (const HopsetEdge& e : out) local.push_back(e.edge());
    const Length len = dist(0, 11);
    for (Vertex x = 0; x < 12; ++x) {
      const auto three = oracle::walk_enumeration(12, local, x, 3);
      for (Vertex y = 0; y < x; ++y) {
        const bool obligated = std::find(s.begin(), s.end(), x) != s.end() ||
                               std::find(s.begin(), s.end(), y) != s.end();
        if (!obligated || !reachable(dist(x, y))) continue;
        ASSERT_NE(three[y], oracle::kNone);
        EXPECT_LE(static_cast<double>(three[y]), (1 + gamma) * dist(x, y) + delta * len)
            << "seed " << seed << " " << x << "->" << y;
      }
    }
  }
}

TEST(IntervalFamily, ShapeAndCover) {
  std::vector<Length> prefix;
  for (int j = 0; j < 37; ++j) prefix.push_back(3 * j);
  for (int k = 1; k <= 6; ++k) {
    const auto f = interval_family(prefix, k);
    const std::size_t width = std::size_t{2} << k;
    for (std::size_t idx = 0; idx < f.intervals.size(); ++idx) {
      const auto [b, e] = f.intervals[idx];
      EXPECT_EQ(b, idx << k);
      EXPECT_LE(e - b, width);
      if (e != prefix.size()) EXPECT_EQ(e - b, width);
    }
    EXPECT_EQ(f.intervals.back().second, prefix.size());
    for (std::size_t y = 0; y < prefix.size(); ++y) {
      for (std::size_t x = y + 1; x < prefix.size() && x - y <= (std::size_t{1} << k); ++x) {
        int covering = 0;
        for (const auto& [b, e] : f.intervals) covering += b <= y && x < e;
        EXPECT_GE(covering, 1);
        EXPECT_LE(covering, 2);
      }
    }
  }
}

TEST(IntervalClass, ClampsAndDoubles) {
  EXPECT_EQ(interval_class(5, 10.0), 0);
  EXPECT_EQ(interval_class(10, 10.0), 0);
  EXPECT_EQ(interval_class(20, 10.0), 1);
  EXPECT_EQ(interval_class(79, 10.0), 2);
  EXPECT_EQ(interval_class(80, 10.0), 3);
}

TEST(BackwardDelta, Schedule) {
  EXPECT_DOUBLE_EQ(backward_delta(0.5, 2, 1), 0.0078125);
  EXPECT_DOUBLE_EQ(backward_sample_probability(1024, 1), 1.0);
  EXPECT_DOUBLE_EQ(backward_sample_probability(1024, 4), 0.625);
  EXPECT_EQ(backward_scale_count(2), 1);
  EXPECT_EQ(backward_scale_count(32), 5);
  EXPECT_EQ(backward_scale_count(33), 6);
}

TEST(BackwardShortcut, TwoVertexPath) {
  const auto g = WeightedDigraph::from_edges(2, std::vector<Edge>{{0, 1, 3}, {1, 0, 2}});
  const auto dist = all_pairs(g);
  const std::vector<Vertex> p{0, 1};
  const auto r = backward_shortcut(p, 0.5, 0.5, dist, 7);
  ASSERT_EQ(r.samples.size(), 1u);
  EXPECT_EQ(r.samples[0].scale, 1);
  EXPECT_EQ(r.samples[0].begin, 0u);
  EXPECT_EQ(r.samples[0].end, 2u);
  std::vector<Vertex> chosen;
  for (std::size_t q : r.samples[0].positions) chosen.push_back(p[q]);
  auto expect = weak_backward(p, chosen, 0.5, backward_delta(0.5, r.samples[0].ell, 1), dist);
  dedup_edges(expect);
  EXPECT_EQ(r.edges, expect);
}

TEST(BackwardShortcut, DeterministicAndExactWeights) {
  const auto inst = path_with_back_edges(40, 60, 9, 3);
  const auto dist = all_pairs(WeightedDigraph::from_edges(inst.n, inst.edges));
  const auto a = backward_shortcut(inst.path, 0.5, 0.5, dist, 11);
  const auto b = backward_shortcut(inst.path, 0.5, 0.5, dist, 11);
  EXPECT_EQ(a.edges, b.edges);
  for (const HopsetEdge& e : a.edges) EXPECT_EQ(e.weight, dist(e.tail, e.head));
}

TEST(BackwardShortcut, ConditionalSixHopBound) {
  // A 32-vertex stretch of the long path inside a strongly connected graph.
  const auto g = generate(Family::kPathNoise, 48, 160, 9, 5);
  const auto dist = all_pairs(g);
  std::vector<Vertex> p;
  for (Vertex v = 8; v < 40; ++v) p.push_back(v);
  const double gamma = 0.5;
  const double delta = 0.5;
  const auto result = backward_shortcut(p, gamma, delta, dist, 19);
  std::vector<Edge> fwd = path_edges(p, dist);
  for (const HopsetEdge& e : forward_shortcut(p, dist)) fwd.push_back(e.edge());
  const auto g_aug = with_extra_edges(g, fwd);
  const auto report = check_backward_bound(g_aug, p, result.edges, gamma, delta, result.samples, dist);
  EXPECT_GT(report.backward_pairs, 0u);
  EXPECT_GT(report.obligated, 0u);
  EXPECT_EQ(report.obligated_failures, 0u);
  EXPECT_GE(report.pass_rate(), 0.99);
}

TEST(BackwardBound, ForwardPairsCarryNoObligation) {
  // A DAG path: no x after y reaches y.
  const auto inst = path_with_back_edges(16, 0, 5, 4);
  const auto g = WeightedDigraph::from_edges(inst.n, inst.edges);
  const auto dist = all_pairs(g);
  const auto r = backward_shortcut(inst.path, 0.5, 0.5, dist, 1);
  const auto report = check_backward_bound(g, inst.path, r.edges, 0.5, 0.5, r.samples, dist);
  EXPECT_EQ(report.backward_pairs, 0u);
  EXPECT_EQ(report.obligated, 0u);
}

TEST(BackwardBound, BoundFormula) {
  // |R n P| = 2, h_P(y,x) = |P| - 1.
  EXPECT_DOUBLE_EQ(backward_bound(0.5, 0.5, 10, 64, 33, 32, 2), 15.0 + 0.5 * 64 * 32 / (33.0 * 2));
  EXPECT_EQ(designated_scale(1), 1);
  EXPECT_EQ(designated_scale(2), 1);
  EXPECT_EQ(designated_scale(3), 2);
  EXPECT_EQ(designated_scale(16), 4);
  EXPECT_EQ(designated_scale(17), 5);
  EXPECT_EQ(designated_level(6), 0);
  EXPECT_EQ(designated_level(7), 1);
  EXPECT_EQ(designated_level(8), 1);
  EXPECT_EQ(designated_level(9), 2);
  EXPECT_EQ(designated_level(12), 2);
  EXPECT_EQ(designated_level(13), 3);
}

TEST(BackwardBound, InjectedMissingEdgeIsNamed) {
  // Backward travel only by steps of two: a backward road walks along P
  // and G alone needs many hops, so stripping the backward edges must break
  // some obligated pair.
  std::vector<Edge> zigzag;
  for (Vertex v = 0; v + 1 < 48; ++v) zigzag.push_back({v, v + 1, 1});
  for (Vertex v = 2; v < 48; ++v) zigzag.push_back({v, v - 2, 1});
  const auto g = WeightedDigraph::from_edges(48, zigzag);
  const auto dist = all_pairs(g);
  std::vector<Vertex> p;
  for (Vertex v = 8; v < 40; ++v) p.push_back(v);
  const auto result = backward_shortcut(p, 0.5, 0.5, dist, 19);
  std::vector<Edge> fwd = path_edges(p, dist);
  for (const HopsetEdge& e : forward_shortcut(p, dist)) fwd.push_back(e.edge());
  const auto g_aug = with_extra_edges(g, fwd);
  const auto full = check_backward_bound(g_aug, p, result.edges, 0.5, 0.5, result.samples, dist);
  ASSERT_GT(full.obligated, 0u);
  EXPECT_EQ(full.obligated_failures, 0u);
  // With every backward edge removed some obligated pair must fail, and each
  // failure names its scale, interval and level.
  const auto stripped = check_backward_bound(g_aug, p, {}, 0.5, 0.5, result.samples, dist);
  ASSERT_GT(stripped.obligated_failures, 0u);
  for (const BackwardFailure& f : stripped.failures) {
    EXPECT_EQ(f.scale, designated_scale(f.x - f.y));
    EXPECT_GE(f.level, 1);
    EXPECT_LE(f.level, f.scale);
    EXPECT_GE(f.interval, 0);
    EXPECT_TRUE(f.observed == kUnreachable || static_cast<double>(f.observed) > f.bound);
  }
}

TEST(Dedup, KeepsFirstAndRejectsConflicts) {
  std::vector<HopsetEdge> edges{{1, 2, 5, EdgeKind::kBackward}, {0, 1, 3, EdgeKind::kForward},
                                {1, 2, 5, EdgeKind::kVertexPath}};
  dedup_edges(edges);
  ASSERT_EQ(edges.size(), 2u);
  EXPECT_EQ(edges[1].kind, EdgeKind::kBackward);
  std::vector<HopsetEdge> bad{{0, 1, 3, EdgeKind::kForward}, {0, 1, 4, EdgeKind::kForward}};
  EXPECT_THROW(dedup_edges(bad), std::logic_error);
}

TEST(EdgeKind, NamesRoundTrip) {
  for (int k = 0; k < kNumEdgeKinds; ++k) {
    const auto kind = static_cast<EdgeKind>(k);
    EXPECT_EQ(parse_kind(kind_name(kind)), kind);
  }
  EXPECT_THROW(parse_kind("bogus"), std::invalid_argument);
}
