#include "hopset/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hopset {

WeightedDigraph WeightedDigraph::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  WeightedDigraph g;
  g.n_ = n;
  const Length weight_cap = n > 0 ? kMaxTotalLength / n : kMaxTotalLength;

  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (const Edge& e : sorted) {
    g.check_vertex(e.tail);
    g.check_vertex(e.head);
    if (e.tail == e.head) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.tail));
    }
    if (e.weight < 1 || e.weight > weight_cap) {
      throw std::invalid_argument("edge weight " + std::to_string(e.weight) +
                                  " outside [1, " + std::to_string(weight_cap) + "]");
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    if (a.tail != b.tail) return a.tail < b.tail;
    if (a.head != b.head) return a.head < b.head;
    return a.weight < b.weight;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end(),
                           [](const Edge& a, const Edge& b) {
                             return a.tail == b.tail && a.head == b.head;
                           }),
               sorted.end());

  g.out_begin_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.in_begin_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : sorted) {
    ++g.out_begin_[e.tail + 1];
    ++g.in_begin_[e.head + 1];
    g.max_weight_ = std::max(g.max_weight_, e.weight);
  }
  for (Vertex v = 0; v < n; ++v) {
    g.out_begin_[v + 1] += g.out_begin_[v];
    g.in_begin_[v + 1] += g.in_begin_[v];
  }
  g.out_arcs_.resize(sorted.size());
  g.in_arcs_.resize(sorted.size());
  std::vector<std::size_t> in_fill(g.in_begin_.begin(), g.in_begin_.end() - 1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Edge& e = sorted[i];
    g.out_arcs_[i] = Arc{e.head, e.weight};
    g.in_arcs_[in_fill[e.head]++] = Arc{e.tail, e.weight};
  }
  return g;
}

Length WeightedDigraph::edge_weight(Vertex u, Vertex v) const {
  const auto arcs = out(u);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                             [](const Arc& a, Vertex x) { return a.to < x; });
  if (it != arcs.end() && it->to == v) return it->weight;
  return kUnreachable;
}

std::vector<Edge> WeightedDigraph::edges() const {
  std::vector<Edge> result;
  result.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u) {
    for (const Arc& a : out(u)) result.push_back(Edge{u, a.to, a.weight});
  }
  return result;
}

WeightedDigraph with_extra_edges(const WeightedDigraph& g, std::span<const Edge> extra) {
  std::vector<Edge> all = g.edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return WeightedDigraph::from_edges(g.num_vertices(), all);
}

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

WeightedDigraph read_graph(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw std::invalid_argument("graph: missing header line");
  long long n = 0;
  long long m = 0;
  {
    std::istringstream header(line);
    if (!(header >> n >> m) || n < 0 || m < 0 || n > (1LL << 30)) {
      throw std::invalid_argument("graph: malformed header '" + line + "'");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line)) {
      throw std::invalid_argument("graph: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    }
    std::istringstream row(line);
    long long u = 0;
    long long v = 0;
    long long w = 0;
    if (!(row >> u >> v >> w)) throw std::invalid_argument("graph: malformed edge '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("graph: vertex out of range in '" + line + "'");
    }
    edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }
  return WeightedDigraph::from_edges(static_cast<Vertex>(n), edges);
}

WeightedDigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedDigraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << ' ' << e.weight << '\n';
}

}  // namespace hopset
