#include "hopset/pathset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace hopset {

NicePathCollection::NicePathCollection(Vertex n, int h_target, std::vector<NicePath> paths)
    : h_target_(h_target),
      paths_(std::move(paths)),
      path_of_(static_cast<std::size_t>(n), -1),
      position_of_(static_cast<std::size_t>(n), -1) {
  for (std::size_t p = 0; p < paths_.size(); ++p) {
    const auto& vertices = paths_[p].vertices;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      const Vertex v = vertices[j];
      if (v < 0 || v >= n) throw std::invalid_argument("nice path vertex out of range");
      if (path_of_[v] != -1) throw std::invalid_argument("nice paths are not vertex-disjoint");
      path_of_[v] = static_cast<int>(p);
      position_of_[v] = static_cast<int>(j);
    }
  }
}

int nice_hop_target(Vertex n, int beta, double eps) {
  if (n < 2) return 1;
  const double target = std::floor(eps * beta / (24.0 * std::log2(static_cast<double>(n))));
  return std::max(1, static_cast<int>(target));
}

NicePath make_path(int id, std::vector<Vertex> vertices, const DistanceMatrix& dist) {
  NicePath path;
  path.id = id;
  path.prefix_lengths.reserve(vertices.size());
  Length total = 0;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (j > 0) {
      const Length step = dist(vertices[j - 1], vertices[j]);
      if (!reachable(step)) throw std::invalid_argument("path step is unreachable");
      total += step;
    }
    path.prefix_lengths.push_back(total);
  }
  path.vertices = std::move(vertices);
  return path;
}

namespace {

// The exactly-h-hop shortest paths of G* restricted to the unused vertices
// are exactly the chains of unused vertices along a common shortest path of
// g. For a source u, most_unused[x] is the largest number of unused vertices
// (u included) on a shortest u->x path of g.
class ChainSearch {
 public:
  ChainSearch(const WeightedDigraph& g, const DistanceMatrix& dist, const std::vector<char>& used)
      : g_(g), dist_(dist), used_(used) {}

  std::vector<int> forward_counts(Vertex u) const {
    const auto row = dist_.row(u);
    std::vector<Vertex> order = reachable_sorted([&](Vertex x) { return row[x]; });
    std::vector<int> best(static_cast<std::size_t>(g_.num_vertices()), 0);
    for (Vertex x : order) {
      int incoming = 0;
      if (x != u) {
        for (const Arc& a : g_.in(x)) {
          const Length dy = row[a.to];
          if (reachable(dy) && dy + a.weight == row[x]) incoming = std::max(incoming, best[a.to]);
        }
      }
      best[x] = incoming + (used_[x] ? 0 : 1);
    }
    return best;
  }

  // Largest number of unused vertices on a shortest x->v path, for every x.
  std::vector<int> backward_counts(Vertex v) const {
    std::vector<Vertex> order = reachable_sorted([&](Vertex x) { return dist_(x, v); });
    std::vector<int> best(static_cast<std::size_t>(g_.num_vertices()), 0);
    for (Vertex x : order) {
      int outgoing = 0;
      if (x != v) {
        for (const Arc& a : g_.out(x)) {
          const Length dz = dist_(a.to, v);
          if (reachable(dz) && dz + a.weight == dist_(x, v)) outgoing = std::max(outgoing, best[a.to]);
        }
      }
      best[x] = outgoing + (used_[x] ? 0 : 1);
    }
    return best;
  }

 private:
  template <typename KeyFn>
  std::vector<Vertex> reachable_sorted(KeyFn key) const {
    std::vector<Vertex> order;
    for (Vertex x = 0; x < g_.num_vertices(); ++x) {
      if (reachable(key(x))) order.push_back(x);
    }
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      const Length ka = key(a);
      const Length kb = key(b);
      return ka != kb ? ka < kb : a < b;
    });
    return order;
  }

  const WeightedDigraph& g_;
  const DistanceMatrix& dist_;
  const std::vector<char>& used_;
};

struct Candidate {
  Length length;
  Vertex start;
  Vertex end;
  std::size_t version;

  bool operator>(const Candidate& o) const {
    return std::tie(length, start, end) > std::tie(o.length, o.start, o.end);
  }
};

}  // namespace

NicePathCollection build_nice_paths(const WeightedDigraph& g, const DistanceMatrix& dist,
                                    int h_target) {
  const Vertex n = g.num_vertices();
  if (h_target < 1) throw std::invalid_argument("h_target must be >= 1");
  if (dist.size() != n) throw std::invalid_argument("distance matrix size mismatch");

  std::vector<char> used(static_cast<std::size_t>(n), 0);
  ChainSearch search(g, dist, used);
  std::size_t version = 0;

  auto best_candidate = [&](Vertex u) -> std::optional<Candidate> {
    const auto counts = search.forward_counts(u);
    std::optional<Candidate> best;
    for (Vertex v = 0; v < n; ++v) {
      if (v == u || used[v] || counts[v] - 1 < h_target) continue;
      const Candidate c{dist(u, v), u, v, version};
      if (!best || best->operator>(c)) best = c;
    }
    return best;
  };

  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
  if (h_target < n) {
    for (Vertex u = 0; u < n; ++u) {
      if (auto c = best_candidate(u)) heap.push(*c);
    }
  }

  std::vector<NicePath> paths;
  while (!heap.empty()) {
    const Candidate top = heap.top();
    heap.pop();
    if (used[top.start]) continue;
    if (top.version != version) {
      // Removals only shrink eligibility, so a stale key is a lower bound.
      if (auto c = best_candidate(top.start)) heap.push(*c);
      continue;
    }

    // Lexicographically smallest h-hop chain from start to end.
    const auto to_end = search.backward_counts(top.end);
    std::vector<Vertex> chain{top.start};
    Vertex current = top.start;
    for (int remaining = h_target; remaining > 1; --remaining) {
      Vertex next = -1;
      for (Vertex y = 0; y < n; ++y) {
        if (used[y] || y == current || y == top.end) continue;
        const Length dcy = dist(current, y);
        const Length dyv = dist(y, top.end);
        if (!reachable(dcy) || !reachable(dyv) || dcy + dyv != dist(current, top.end)) continue;
        if (to_end[y] - 1 >= remaining - 1) {
          next = y;
          break;
        }
      }
      if (next == -1) throw std::logic_error("nice path reconstruction failed");
      chain.push_back(next);
      current = next;
    }
    chain.push_back(top.end);
    for (Vertex v : chain) used[v] = 1;
    paths.push_back(make_path(static_cast<int>(paths.size()), std::move(chain), dist));
    ++version;
  }
  return NicePathCollection(n, h_target, std::move(paths));
}

void write_paths(std::ostream& out, const NicePathCollection& paths) {
  for (const NicePath& p : paths.paths()) {
    for (std::size_t j = 0; j < p.vertices.size(); ++j) {
      out << (j ? " " : "") << p.vertices[j];
    }
    out << '\n';
  }
}

}  // namespace hopset
