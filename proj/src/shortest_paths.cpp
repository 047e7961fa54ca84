#include "hopset/shortest_paths.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

#include "hopset/parallel.hpp"

namespace hopset {

Length walk_length(const WeightedDigraph& g, std::span<const Vertex> vertices) {
  Length total = 0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const Length w = g.edge_weight(vertices[i - 1], vertices[i]);
    if (!reachable(w)) {
      throw NoPathError("no edge " + std::to_string(vertices[i - 1]) + "->" +
                        std::to_string(vertices[i]));
    }
    total += w;
  }
  return total;
}

std::vector<Length> sssp_exact(const WeightedDigraph& g, Vertex s) {
  g.check_vertex(s);
  std::vector<Length> dist(static_cast<std::size_t>(g.num_vertices()), kUnreachable);
  using Item = std::pair<Length, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[s] = 0;
  queue.emplace(0, s);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d != dist[u]) continue;
    for (const Arc& a : g.out(u)) {
      const Length candidate = d + a.weight;
      if (!reachable(dist[a.to]) || candidate < dist[a.to]) {
        dist[a.to] = candidate;
        queue.emplace(candidate, a.to);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs(const WeightedDigraph& g) {
  DistanceMatrix dist(g.num_vertices());
  parallel_for(static_cast<std::size_t>(g.num_vertices()), [&](std::size_t s) {
    const auto row = sssp_exact(g, static_cast<Vertex>(s));
    std::copy(row.begin(), row.end(), dist.row(static_cast<Vertex>(s)).begin());
  });
  return dist;
}

WeightedDigraph transitive_closure_weighted(const WeightedDigraph& g, const DistanceMatrix& dist) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (u != v && reachable(dist(u, v))) edges.push_back(Edge{u, v, dist(u, v)});
    }
  }
  return WeightedDigraph::from_edges(g.num_vertices(), edges);
}

WeightedDigraph transitive_closure_weighted(const WeightedDigraph& g) {
  return transitive_closure_weighted(g, all_pairs(g));
}

namespace {

// Layered relaxation driven by the set of vertices whose value changed in
// the previous layer; reads only layer h-1 values while writing layer h.
struct LayeredSearch {
  const WeightedDigraph& g;
  std::vector<Length> current;
  std::vector<Length> next;
  std::vector<Vertex> changed;

  LayeredSearch(const WeightedDigraph& graph, Vertex s)
      : g(graph), current(static_cast<std::size_t>(graph.num_vertices()), kUnreachable), next(current) {
    current[s] = 0;
    next[s] = 0;
    changed.push_back(s);
  }

  bool step() {
    std::vector<Vertex> updated;
    for (Vertex u : changed) {
      const Length du = current[u];
      for (const Arc& a : g.out(u)) {
        const Length candidate = du + a.weight;
        if (!reachable(next[a.to]) || candidate < next[a.to]) {
          if (next[a.to] == current[a.to]) updated.push_back(a.to);
          next[a.to] = candidate;
        }
      }
    }
    for (Vertex v : updated) current[v] = next[v];
    changed = std::move(updated);
    return !changed.empty();
  }
};

}  // namespace

std::vector<Length> hop_bounded_dist(const WeightedDigraph& g, Vertex s, int beta) {
  g.check_vertex(s);
  LayeredSearch search(g, s);
  for (int h = 0; h < beta; ++h) {
    if (!search.step()) break;
  }
  return search.current;
}

Path hop_bounded_path(const WeightedDigraph& g, Vertex s, Vertex t, int beta) {
  g.check_vertex(s);
  g.check_vertex(t);
  LayeredSearch search(g, s);
  std::vector<std::vector<Length>> layers{search.current};
  for (int h = 1; h <= beta; ++h) {
    if (!search.step()) break;
    layers.push_back(search.current);
  }
  if (!reachable(search.current[t])) {
    throw NoPathError("no walk " + std::to_string(s) + "->" + std::to_string(t) + " within " +
                      std::to_string(beta) + " hops");
  }
  Path path;
  path.length = search.current[t];
  Vertex v = t;
  std::size_t h = layers.size() - 1;
  while (v != s || layers[h][v] != 0) {
    const Length target = layers[h][v];
    if (h > 0 && layers[h - 1][v] == target) {
      --h;
      continue;
    }
    path.vertices.push_back(v);
    Vertex best = -1;
    for (const Arc& a : g.in(v)) {
      const Length du = layers[h - 1][a.to];
      if (reachable(du) && du + a.weight == target && (best == -1 || a.to < best)) best = a.to;
    }
    v = best;
    --h;
  }
  path.vertices.push_back(s);
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

RoadTree::RoadTree(const WeightedDigraph& g, Vertex source)
    : source_(source),
      length_(static_cast<std::size_t>(g.num_vertices()), kUnreachable),
      hops_(static_cast<std::size_t>(g.num_vertices()), -1),
      parent_(static_cast<std::size_t>(g.num_vertices()), -1) {
  g.check_vertex(source);
  using Key = std::tuple<Length, int, Vertex>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  std::vector<char> done(static_cast<std::size_t>(g.num_vertices()), 0);
  length_[source] = 0;
  hops_[source] = 0;
  queue.emplace(0, 0, source);
  while (!queue.empty()) {
    const auto [d, h, u] = queue.top();
    queue.pop();
    if (done[u] || d != length_[u] || h != hops_[u]) continue;
    done[u] = 1;
    for (const Arc& a : g.out(u)) {
      const Length cd = d + a.weight;
      const int ch = h + 1;
      const Vertex v = a.to;
      if (done[v]) continue;
      const bool better = !reachable(length_[v]) || cd < length_[v] ||
                          (cd == length_[v] && ch < hops_[v]);
      if (better) {
        length_[v] = cd;
        hops_[v] = ch;
        parent_[v] = u;
        queue.emplace(cd, ch, v);
      } else if (cd == length_[v] && ch == hops_[v] && u < parent_[v]) {
        parent_[v] = u;
      }
    }
  }
}

Path RoadTree::path_to(Vertex v) const {
  if (!reaches(v)) {
    throw NoPathError("vertex " + std::to_string(v) + " unreachable from " +
                      std::to_string(source_));
  }
  Path path;
  path.length = length_[v];
  for (Vertex x = v; x != -1; x = parent_[x]) path.vertices.push_back(x);
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

Path road(const WeightedDigraph& g_aug, Vertex u, Vertex v) {
  g_aug.check_vertex(v);
  return RoadTree(g_aug, u).path_to(v);
}

}  // namespace hopset
