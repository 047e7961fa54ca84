#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "hopset/builder.hpp"
#include "hopset/generate.hpp"
#include "hopset/io.hpp"

using namespace hopset;

TEST(Generate, LayeredDagFollowsLayers) {
  const auto g = generate(Family::kLayeredDag, 10, 20, 5, 1, {.layers = 3});
  EXPECT_EQ(g.num_edges(), 20u);
  int count = 0;
  strongly_connected_components(g, &count);
  EXPECT_EQ(count, 10);
  for (const Edge& e : g.edges()) EXPECT_LT(e.tail * 3 / 10, e.head * 3 / 10);
}

TEST(Generate, CycleChainHasOneSccPerCycle) {
  const auto g = generate(Family::kCycleChain, 12, 20, 5, 3, {.cycles = 3});
  int count = 0;
  const auto comp = strongly_connected_components(g, &count);
  EXPECT_EQ(count, 3);
  std::map<int, int> sizes;
  for (int c : comp) ++sizes[c];
  for (const auto& [c, size] : sizes) EXPECT_EQ(size, 4);
}

TEST(Generate, RandomIsDeterministic) {
  std::ostringstream a;
  std::ostringstream b;
  write_graph(a, generate(Family::kRandomDigraph, 50, 200, 9, 42));
  write_graph(b, generate(Family::kRandomDigraph, 50, 200, 9, 42));
  EXPECT_EQ(a.str(), b.str());
  std::ostringstream c;
  write_graph(c, generate(Family::kRandomDigraph, 50, 200, 9, 43));
  EXPECT_NE(a.str(), c.str());
}

TEST(Generate, StrongAndPathNoiseAreStronglyConnected) {
  int count = 0;
  strongly_connected_components(generate(Family::kRandomDigraph, 60, 70, 3, 1, {.strong = true}), &count);
  EXPECT_EQ(count, 1);
  const auto g = generate(Family::kPathNoise, 60, 90, 3, 1);
  strongly_connected_components(g, &count);
  EXPECT_EQ(count, 1);
  EXPECT_EQ(g.num_edges(), 90u);
  EXPECT_EQ(sssp_exact(g, 0)[59], walk_length(g, std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14,
                                                                      15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27,
                                                                      28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40,
                                                                      41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53,
                                                                      54, 55, 56, 57, 58, 59}));
}

TEST(Generate, InfeasibleRequestsThrow) {
  EXPECT_THROW(generate(Family::kRandomDigraph, 4, 13, 1, 1), std::invalid_argument);
  EXPECT_THROW(generate(Family::kRandomDigraph, 4, 3, 1, 1, {.strong = true}), std::invalid_argument);
  EXPECT_THROW(generate(Family::kLayeredDag, 4, 7, 1, 1, {.layers = 2}), std::invalid_argument);
  EXPECT_THROW(generate(Family::kCycleChain, 5, 10, 1, 1, {.cycles = 3}), std::invalid_argument);
  EXPECT_THROW(generate(Family::kPathNoise, 5, 3, 1, 1), std::invalid_argument);
  EXPECT_THROW(generate(Family::kRandomDigraph, 5, 3, 0, 1), std::invalid_argument);
  EXPECT_THROW(parse_family("grid"), std::invalid_argument);
  // Dense requests go through the enumeration branch.
  EXPECT_EQ(generate(Family::kRandomDigraph, 6, 30, 2, 1).num_edges(), 30u);
}

TEST(Io, HopsetJsonRoundTrip) {
  const auto g = generate(Family::kCycleChain, 90, 300, 9, 5, {.cycles = 3});
  BuildConfig cfg;
  cfg.beta = 30;
  cfg.regime = Regime::kSmall;
  const auto build = build_hopset(g, cfg);
  const Json doc = build_to_json(g, build);
  for (const char* key : {"n", "m", "W", "beta", "eps", "seed", "regime", "counts_by_kind", "total_edges",
                          "runtime_ms"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["total_edges"].get<std::size_t>(), build.hopset.size());
  const auto loaded = hopset_from_json(Json::parse(doc.dump()));
  EXPECT_EQ(loaded.edges, build.hopset.edges());
  EXPECT_EQ(loaded.beta, 30);
  Json broken = doc;
  broken["edges"][0] = {1, 2};
  EXPECT_THROW(hopset_from_json(broken), std::invalid_argument);
}

TEST(Io, AuxRoundTrip) {
  const auto g = generate(Family::kPathNoise, 80, 160, 5, 2);
  BuildConfig cfg;
  cfg.beta = 30;
  cfg.regime = Regime::kSmall;
  const auto build = build_hopset(g, cfg);
  const WitnessAux direct = make_witness_aux(build);
  const WitnessAux loaded = aux_from_json(Json::parse(aux_to_json(build).dump()));
  EXPECT_EQ(loaded.edges, direct.edges);
  ASSERT_EQ(loaded.paths.size(), direct.paths.size());
  for (std::size_t p = 0; p < loaded.paths.size(); ++p) {
    EXPECT_EQ(loaded.paths[p].vertices, direct.paths[p].vertices);
    EXPECT_EQ(loaded.paths[p].prefix_lengths, direct.paths[p].prefix_lengths);
  }
  EXPECT_EQ(loaded.hierarchy.vertex_depth, direct.hierarchy.vertex_depth);
  EXPECT_EQ(loaded.hierarchy.path_entry, direct.hierarchy.path_entry);
  const WitnessExtractor a(g, direct);
  const WitnessExtractor b(g, loaded);
  EXPECT_EQ(a.extract(3, 70).walk.vertices, b.extract(3, 70).walk.vertices);
}

TEST(Io, ReverifiesFromSerializedForm) {
  const auto g = generate(Family::kRandomDigraph, 100, 400, 9, 8, {.strong = true});
  BuildConfig cfg;
  cfg.beta = 40;
  cfg.regime = Regime::kSmall;
  const auto build = build_hopset(g, cfg);
  const auto direct = check_hop_stretch(g, build.hopset.edges(), 40, 0.5);
  const auto loaded = hopset_from_json(Json::parse(build_to_json(g, build).dump()));
  const auto again = check_hop_stretch(g, loaded.edges, loaded.beta, loaded.eps);
  EXPECT_EQ(report_to_json(direct), report_to_json(again));
}

TEST(Io, EdgeTextRoundTrip) {
  const std::vector<HopsetEdge> edges{{0, 3, 7, EdgeKind::kBackward}, {2, 1, 4, EdgeKind::kStar}};
  std::ostringstream out;
  write_edges(out, 5, edges);
  EXPECT_EQ(out.str(), "5 2\n0 3 7 backward\n2 1 4 star\n");
  std::istringstream in(out.str());
  Vertex n = 0;
  EXPECT_EQ(read_edges(in, &n), edges);
  EXPECT_EQ(n, 5);
  std::istringstream bad("5 2\n0 3 7 backward\n");
  EXPECT_THROW(read_edges(bad), std::invalid_argument);
}

TEST(Io, HierarchyReportListsLevels) {
  const auto g = generate(Family::kRandomDigraph, 64, 200, 5, 1, {.strong = true});
  BuildConfig cfg;
  cfg.beta = 120;
  cfg.regime = Regime::kSmall;
  const auto build = build_hopset(g, cfg);
  const Json doc = hierarchy_to_json(build.aux.hierarchy);
  ASSERT_EQ(doc["levels"].size(), 6u);
  EXPECT_EQ(doc["levels"][0]["vertex_count"].get<std::size_t>(), build.aux.hierarchy.levels[0].vertices.size());
}
