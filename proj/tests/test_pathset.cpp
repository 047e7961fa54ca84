#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "hopset/pathset.hpp"
#include "hopset/shortest_paths.hpp"
#include "oracles.hpp"

using namespace hopset;

namespace {

WeightedDigraph unit_path(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1});
  return WeightedDigraph::from_edges(n, edges);
}

std::vector<std::vector<Vertex>> vertex_lists(const NicePathCollection& c) {
  std::vector<std::vector<Vertex>> out;
  for (const NicePath& p : c.paths()) out.push_back(p.vertices);
  return out;
}

}  // namespace

TEST(NiceHopTarget, LargeExample) { EXPECT_EQ(nice_hop_target(1024, 4800, 0.5), 10); }

TEST(NiceHopTarget, ClampsToOne) {
  EXPECT_EQ(nice_hop_target(1024, 100, 0.5), 1);
  EXPECT_EQ(nice_hop_target(2, 20, 0.9), 1);
}

TEST(NicePaths, UnitPathOfTen) {
  const auto g = unit_path(10);
  const auto c = build_nice_paths(g, all_pairs(g), 3);
  EXPECT_EQ(vertex_lists(c), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3}, {4, 5, 6, 7}}));
  EXPECT_EQ(c.path_of(8), -1);
  EXPECT_EQ(c.path_of(9), -1);
  EXPECT_EQ(c.position_of(6), 2);

  // Independent check against the enumeration oracle.
  std::vector<Edge> edges = g.edges();
  EXPECT_EQ(vertex_lists(c), oracle::nice_paths(10, oracle::floyd_warshall(10, edges), 3));
}

TEST(NicePaths, TargetAtLeastNIsEmpty) {
  const auto g = unit_path(6);
  EXPECT_EQ(build_nice_paths(g, all_pairs(g), 6).size(), 0u);
}

TEST(NicePaths, TwoDisjointPaths) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 4; ++v) {
    edges.push_back({v, v + 1, 1});
    edges.push_back({v + 5, v + 6, 1});
  }
  const auto g = WeightedDigraph::from_edges(10, edges);
  const auto c = build_nice_paths(g, all_pairs(g), 4);
  const auto expect = oracle::nice_paths(10, oracle::floyd_warshall(10, edges), 4);
  EXPECT_EQ(vertex_lists(c), expect);
  EXPECT_EQ(vertex_lists(c), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}));
}

TEST(NicePaths, MatchesEnumerationOracle) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Vertex n = 9;
    const auto edges = oracle::random_edges(n, 16, seed % 3 == 0 ? 1 : 5, seed);
    const auto g = WeightedDigraph::from_edges(n, edges);
    const auto fw = oracle::floyd_warshall(n, edges);
    for (int h : {1, 2, 3}) {
      const auto c = build_nice_paths(g, all_pairs(g), h);
      EXPECT_EQ(vertex_lists(c), oracle::nice_paths(n, fw, h)) << "seed " << seed << " h " << h;
    }
  }
}

TEST(NicePaths, CollectionInvariants) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Vertex n = 40;
    const auto g = WeightedDigraph::from_edges(n, oracle::random_edges(n, 120, 10, seed));
    const auto dist = all_pairs(g);
    const int h = 2 + static_cast<int>(seed % 3);
    const auto c = build_nice_paths(g, dist, h);
    std::set<Vertex> seen;
    std::size_t total = 0;
    Length previous = 0;
    for (const NicePath& p : c.paths()) {
      EXPECT_EQ(p.hops(), h);
      EXPECT_EQ(p.length(), dist(p.vertices.front(), p.vertices.back()));
      for (std::size_t j = 0; j < p.size(); ++j) EXPECT_EQ(p.prefix_lengths[j], dist(p.vertices[0], p.vertices[j]));
      EXPECT_GE(p.length(), previous);
      previous = p.length();
      seen.insert(p.vertices.begin(), p.vertices.end());
      total += p.size();
    }
    EXPECT_EQ(seen.size(), total);
  }
}

TEST(NicePaths, Serialization) {
  const auto g = unit_path(8);
  const auto c = build_nice_paths(g, all_pairs(g), 3);
  std::ostringstream out;
  write_paths(out, c);
  EXPECT_EQ(out.str(), "0 1 2 3\n4 5 6 7\n");
}

TEST(NicePaths, CollectionRejectsOverlap) {
  const auto g = unit_path(4);
  const auto dist = all_pairs(g);
  std::vector<NicePath> paths{make_path(0, {0, 1}, dist), make_path(1, {1, 2}, dist)};
  EXPECT_THROW(NicePathCollection(4, 1, paths), std::invalid_argument);
}
