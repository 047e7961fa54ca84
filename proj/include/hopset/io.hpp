// JSON and text serialization of hopsets, build auxiliaries and reports.

#ifndef HOPSET_IO_HPP
#define HOPSET_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopset/builder.hpp"
#include "hopset/graph.hpp"
#include "hopset/verify.hpp"

namespace hopset {

using Json = nlohmann::json;

// Build summary plus the edge list:
// {n, m, W, beta, eps, seed, regime, counts_by_kind, total_edges, runtime_ms, edges: [[u,v,w,kind],...]}.
Json build_to_json(const WeightedDigraph& g, const HopsetBuild& build);

struct LoadedHopset {
  Vertex n = 0;
  int beta = 0;
  double eps = 0.0;
  std::vector<HopsetEdge> edges;
};

// Accepts anything build_to_json produced; throws std::invalid_argument on
// malformed input.
LoadedHopset hopset_from_json(const Json& doc);

Json counts_to_json(const KindCounts& counts);

// Paths, hierarchy and edges for the witness extractor.
Json aux_to_json(const HopsetBuild& build);
WitnessAux aux_from_json(const Json& doc);

Json hierarchy_to_json(const SamplingHierarchy& hierarchy);
SamplingHierarchy hierarchy_from_json(const Json& doc, Vertex n, std::size_t path_count);

Json report_to_json(const VerificationReport& report);
Json report_to_json(const DistanceReport& report);

// Edge list in the graph text format with a fourth kind column.
void write_edges(std::ostream& out, Vertex n, const std::vector<HopsetEdge>& edges);
std::vector<HopsetEdge> read_edges(std::istream& in, Vertex* n = nullptr);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

}  // namespace hopset

#endif  // HOPSET_IO_HPP
