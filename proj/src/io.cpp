#include "hopset/io.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hopset {

namespace {

std::vector<HopsetEdge> edges_from_json(const Json& list) {
  std::vector<HopsetEdge> edges;
  edges.reserve(list.size());
  for (const Json& e : list) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("edge entries must be [u, v, w, kind]");
    edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>(), e[2].get<Length>(),
                     parse_kind(e[3].get<std::string>())});
  }
  return edges;
}

Json edges_to_json(const std::vector<HopsetEdge>& edges) {
  Json list = Json::array();
  for (const HopsetEdge& e : edges) list.push_back({e.tail, e.head, e.weight, std::string(kind_name(e.kind))});
  return list;
}

Json failures_to_json(const std::vector<PairFailure>& failures) {
  Json list = Json::array();
  for (const PairFailure& f : failures) {
    list.push_back({{"u", f.u}, {"v", f.v}, {"required", f.required}, {"observed", f.observed}});
  }
  return list;
}

}  // namespace

Json counts_to_json(const KindCounts& counts) {
  Json out = Json::object();
  for (int k = 0; k < kNumEdgeKinds; ++k) out[std::string(kind_name(static_cast<EdgeKind>(k)))] = counts[k];
  return out;
}

Json build_to_json(const WeightedDigraph& g, const HopsetBuild& build) {
  Json doc;
  doc["n"] = g.num_vertices();
  doc["m"] = g.num_edges();
  doc["W"] = g.max_weight();
  doc["beta"] = build.config.beta;
  doc["eps"] = build.config.eps;
  doc["seed"] = build.config.seed;
  doc["regime"] = std::string(regime_name(build.regime));
  doc["counts_by_kind"] = counts_to_json(build.hopset.counts());
  doc["total_edges"] = build.hopset.size();
  doc["runtime_ms"] = build.runtime_ms;
  if (build.regime == Regime::kLarge) {
    doc["sample_size"] = build.sample_size;
    doc["sample_probability"] = build.sample_probability;
    doc["reduced_beta"] = build.reduced_beta;
    doc["nested_counts_by_kind"] = counts_to_json(build.nested_counts);
  } else {
    doc["h_target"] = build.aux.h_target;
    doc["nice_paths"] = build.aux.paths.size();
    doc["vertex_path_pairs"] = build.aux.vertex_path_pairs;
  }
  doc["warnings"] = build.warnings;
  doc["edges"] = edges_to_json(build.hopset.edges());
  return doc;
}

LoadedHopset hopset_from_json(const Json& doc) {
  try {
    LoadedHopset out;
    out.n = doc.at("n").get<Vertex>();
    out.beta = doc.value("beta", 0);
    out.eps = doc.value("eps", 0.0);
    out.edges = edges_from_json(doc.at("edges"));
    for (const HopsetEdge& e : out.edges) {
      if (e.tail < 0 || e.tail >= out.n || e.head < 0 || e.head >= out.n) {
        throw std::invalid_argument("hopset edge endpoint out of range");
      }
    }
    return out;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed hopset document: ") + e.what());
  }
}

Json hierarchy_to_json(const SamplingHierarchy& hierarchy) {
  Json doc;
  doc["c_v"] = hierarchy.c_v;
  doc["c_p"] = hierarchy.c_p;
  doc["seed"] = hierarchy.seed;
  Json levels = Json::array();
  for (const SamplingLevel& level : hierarchy.levels) {
    levels.push_back({{"level", level.level},
                      {"vertex_threshold", level.vertex_threshold},
                      {"path_threshold", level.path_threshold},
                      {"vertex_count", level.vertices.size()},
                      {"path_count", level.paths.size()},
                      {"vertices", level.vertices},
                      {"paths", level.paths}});
  }
  doc["levels"] = levels;
  return doc;
}

SamplingHierarchy hierarchy_from_json(const Json& doc, Vertex n, std::size_t path_count) {
  SamplingHierarchy h;
  h.c_v = doc.at("c_v").get<double>();
  h.c_p = doc.at("c_p").get<double>();
  h.seed = doc.at("seed").get<std::uint64_t>();
  for (const Json& l : doc.at("levels")) {
    SamplingLevel level;
    level.level = l.at("level").get<int>();
    level.vertex_threshold = l.at("vertex_threshold").get<double>();
    level.path_threshold = l.at("path_threshold").get<double>();
    level.vertices = l.at("vertices").get<std::vector<Vertex>>();
    level.paths = l.at("paths").get<std::vector<int>>();
    h.levels.push_back(std::move(level));
  }
  h.vertex_depth.assign(static_cast<std::size_t>(n), 0);
  h.path_entry.assign(path_count, h.num_levels() + 1);
  for (const SamplingLevel& level : h.levels) {
    for (Vertex v : level.vertices) h.vertex_depth.at(v) = std::max(h.vertex_depth.at(v), level.level);
    for (int p : level.paths) h.path_entry.at(p) = std::min(h.path_entry.at(p), level.level);
  }
  return h;
}

Json aux_to_json(const HopsetBuild& build) {
  if (build.regime != Regime::kSmall) {
    throw std::invalid_argument("build auxiliaries exist only for the small-beta regime");
  }
  Json doc;
  doc["n"] = build.hopset.num_vertices();
  doc["beta"] = build.config.beta;
  doc["eps"] = build.config.eps;
  doc["seed"] = build.config.seed;
  doc["h_target"] = build.aux.h_target;
  Json paths = Json::array();
  for (const NicePath& p : build.aux.paths.paths()) {
    paths.push_back({{"vertices", p.vertices}, {"prefix_lengths", p.prefix_lengths}});
  }
  doc["paths"] = paths;
  doc["hierarchy"] = hierarchy_to_json(build.aux.hierarchy);
  doc["edges"] = edges_to_json(build.hopset.edges());
  return doc;
}

WitnessAux aux_from_json(const Json& doc) {
  try {
    WitnessAux aux;
    const auto n = doc.at("n").get<Vertex>();
    aux.beta = doc.at("beta").get<int>();
    aux.eps = doc.at("eps").get<double>();
    std::vector<NicePath> paths;
    for (const Json& p : doc.at("paths")) {
      NicePath path;
      path.id = static_cast<int>(paths.size());
      path.vertices = p.at("vertices").get<std::vector<Vertex>>();
      path.prefix_lengths = p.at("prefix_lengths").get<std::vector<Length>>();
      paths.push_back(std::move(path));
    }
    const std::size_t count = paths.size();
    aux.paths = NicePathCollection(n, doc.at("h_target").get<int>(), std::move(paths));
    aux.hierarchy = hierarchy_from_json(doc.at("hierarchy"), n, count);
    aux.edges = edges_from_json(doc.at("edges"));
    return aux;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed aux document: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("malformed aux document: ") + e.what());
  }
}

Json report_to_json(const VerificationReport& report) {
  Json doc;
  doc["beta"] = report.beta;
  doc["eps"] = report.eps;
  doc["full"] = report.full;
  doc["pairs_checked"] = report.pairs_checked;
  // JSON has no infinity; null stands for "some pair has no walk within beta".
  doc["max_stretch"] = std::isfinite(report.max_stretch) ? Json(report.max_stretch) : Json(nullptr);
  doc["achieved_hopbound"] = report.achieved_hopbound;
  doc["distance_preservation"] = report.distance_preservation;
  doc["passed"] = report.passed;
  doc["failure_count"] = report.failure_count;
  doc["failures"] = failures_to_json(report.failures);
  return doc;
}

Json report_to_json(const DistanceReport& report) {
  Json doc;
  doc["passed"] = report.passed;
  doc["edges_checked"] = report.edges_checked;
  doc["pairs_checked"] = report.pairs_checked;
  doc["failure_count"] = report.failure_count;
  Json edges = Json::array();
  for (const EdgeFailure& f : report.edge_failures) {
    edges.push_back({{"u", f.tail}, {"v", f.head}, {"weight", f.weight}, {"distance", f.distance}});
  }
  doc["edge_failures"] = edges;
  doc["pair_failures"] = failures_to_json(report.pair_failures);
  return doc;
}

void write_edges(std::ostream& out, Vertex n, const std::vector<HopsetEdge>& edges) {
  out << n << ' ' << edges.size() << '\n';
  for (const HopsetEdge& e : edges) {
    out << e.tail << ' ' << e.head << ' ' << e.weight << ' ' << kind_name(e.kind) << '\n';
  }
}

std::vector<HopsetEdge> read_edges(std::istream& in, Vertex* n) {
  std::string line;
  bool header = false;
  std::size_t expected = 0;
  std::vector<HopsetEdge> edges;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    if (!header) {
      Vertex count = 0;
      if (!(fields >> count >> expected)) throw std::invalid_argument("bad edge-set header");
      if (n) *n = count;
      header = true;
      continue;
    }
    HopsetEdge e{};
    std::string kind;
    if (!(fields >> e.tail >> e.head >> e.weight >> kind)) throw std::invalid_argument("bad edge line: " + line);
    e.kind = parse_kind(kind);
    edges.push_back(e);
  }
  if (!header || edges.size() != expected) throw std::invalid_argument("edge count does not match header");
  return edges;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(1) << '\n';
}

}  // namespace hopset
