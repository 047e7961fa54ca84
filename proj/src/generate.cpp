#include "hopset/generate.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "hopset/random.hpp"

namespace hopset {

namespace {

std::uint64_t key(Vertex u, Vertex v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

// Adds `count` distinct pairs accepted by `allowed`, out of `capacity`
// candidates, skipping pairs already in `taken`.
void add_random_pairs(Vertex n, std::size_t count, std::size_t capacity,
                      const std::function<bool(Vertex, Vertex)>& allowed, std::unordered_set<std::uint64_t>& taken,
                      std::vector<Edge>& edges, Length W, CounterRng& rng) {
  auto weight = [&] { return static_cast<Length>(rng.below(static_cast<std::uint64_t>(W))) + 1; };
  if (count == 0) return;
  if (count * 2 <= capacity) {
    while (count > 0) {
      const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      if (u == v || !allowed(u, v) || !taken.insert(key(u, v)).second) continue;
      edges.push_back({u, v, weight()});
      --count;
    }
    return;
  }
  std::vector<std::pair<Vertex, Vertex>> pool;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && allowed(u, v) && !taken.count(key(u, v))) pool.emplace_back(u, v);
    }
  }
  for (std::size_t j = 0; j < count; ++j) {
    const std::size_t pick = j + rng.below(pool.size() - j);
    std::swap(pool[j], pool[pick]);
    taken.insert(key(pool[j].first, pool[j].second));
    edges.push_back({pool[j].first, pool[j].second, weight()});
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Block id of v when [0, n) is cut into `parts` contiguous near-equal blocks.
int block_of(Vertex v, Vertex n, int parts) {
  return static_cast<int>(static_cast<std::int64_t>(v) * parts / n);
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kRandomDigraph: return "random-digraph";
    case Family::kLayeredDag: return "layered-dag";
    case Family::kCycleChain: return "cycle-chain";
    case Family::kPathNoise: return "path-noise";
  }
  return "random-digraph";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kRandomDigraph, Family::kLayeredDag, Family::kCycleChain, Family::kPathNoise}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

WeightedDigraph generate(Family family, Vertex n, std::size_t m, Length W, std::uint64_t seed,
                         const GenOptions& options) {
  require(n >= 1, "n must be >= 1");
  require(W >= 1, "W must be >= 1");
  const auto nn = static_cast<std::size_t>(n);
  require(m <= nn * (nn - 1), "m exceeds n(n-1)");
  CounterRng rng(seed, Stream::kGenerator);
  auto weight = [&] { return static_cast<Length>(rng.below(static_cast<std::uint64_t>(W))) + 1; };
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> taken;
  auto add = [&](Vertex u, Vertex v) {
    taken.insert(key(u, v));
    edges.push_back({u, v, weight()});
  };

  switch (family) {
    case Family::kRandomDigraph: {
      if (options.strong && n >= 2) {
        require(m >= nn, "a strongly connected random digraph needs m >= n");
        std::vector<Vertex> order(nn);
        for (Vertex v = 0; v < n; ++v) order[v] = v;
        for (std::size_t j = nn - 1; j > 0; --j) std::swap(order[j], order[rng.below(j + 1)]);
        for (std::size_t j = 0; j < nn; ++j) add(order[j], order[(j + 1) % nn]);
      }
      const std::size_t rest = m - edges.size();
      add_random_pairs(n, rest, nn * (nn - 1) - edges.size(), [](Vertex, Vertex) { return true; }, taken, edges,
                       W, rng);
      break;
    }
    case Family::kLayeredDag: {
      const int layers = options.layers;
      require(layers >= 1 && layers <= n, "layers must lie in [1, n]");
      std::size_t capacity = 0;
      std::vector<std::size_t> size(static_cast<std::size_t>(layers), 0);
      for (Vertex v = 0; v < n; ++v) ++size[block_of(v, n, layers)];
      for (int a = 0; a < layers; ++a) {
        for (int b = a + 1; b < layers; ++b) capacity += size[a] * size[b];
      }
      require(m <= capacity, "m exceeds the number of cross-layer pairs");
      add_random_pairs(n, m, capacity,
                       [n, layers](Vertex u, Vertex v) { return block_of(u, n, layers) < block_of(v, n, layers); },
                       taken, edges, W, rng);
      break;
    }
    case Family::kCycleChain: {
      const int cycles = options.cycles;
      require(cycles >= 1 && 2 * cycles <= n, "cycle-chain needs 1 <= cycles <= n/2");
      std::vector<std::vector<Vertex>> blocks(static_cast<std::size_t>(cycles));
      for (Vertex v = 0; v < n; ++v) blocks[block_of(v, n, cycles)].push_back(v);
      const std::size_t base = nn + static_cast<std::size_t>(cycles - 1);
      std::size_t capacity = 0;
      for (std::size_t a = 0; a < blocks.size(); ++a) {
        capacity += blocks[a].size() * (blocks[a].size() - 1);
        for (std::size_t b = a + 1; b < blocks.size(); ++b) capacity += blocks[a].size() * blocks[b].size();
      }
      require(m >= base, "cycle-chain needs m >= n + cycles - 1");
      require(m <= capacity, "m exceeds the cycle-chain capacity");
      for (const auto& b : blocks) {
        for (std::size_t j = 0; j < b.size(); ++j) add(b[j], b[(j + 1) % b.size()]);
      }
      for (std::size_t a = 0; a + 1 < blocks.size(); ++a) {
        const Vertex u = blocks[a][rng.below(blocks[a].size())];
        const Vertex v = blocks[a + 1][rng.below(blocks[a + 1].size())];
        add(u, v);
      }
      add_random_pairs(n, m - edges.size(), capacity - edges.size(),
                       [n, cycles](Vertex u, Vertex v) { return block_of(u, n, cycles) <= block_of(v, n, cycles); },
                       taken, edges, W, rng);
      break;
    }
    case Family::kPathNoise: {
      require(n >= 2, "path-noise needs n >= 2");
      require(m >= nn, "path-noise needs m >= n");
      const std::size_t capacity = (nn - 1) + nn * (nn - 1) / 2;
      require(m <= capacity, "m exceeds the path-noise capacity");
      for (Vertex v = 0; v + 1 < n; ++v) add(v, v + 1);
      if (n > 2) add(n - 1, 0);
      add_random_pairs(n, m - edges.size(), capacity - edges.size(), [](Vertex u, Vertex v) { return v < u; }, taken,
                       edges, W, rng);
      break;
    }
  }
  return WeightedDigraph::from_edges(n, edges);
}

}  // namespace hopset
