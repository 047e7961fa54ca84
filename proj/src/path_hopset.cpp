#include "hopset/path_hopset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "hopset/random.hpp"

namespace hopset {

namespace {

constexpr std::string_view kKindNames[kNumEdgeKinds] = {"forward", "vertex-path", "backward",
                                                        "closure", "folklore",    "star"};

std::vector<Length> prefix_along(std::span<const Vertex> path, const DistanceMatrix& dist) {
  std::vector<Length> prefix(path.size(), 0);
  for (std::size_t j = 1; j < path.size(); ++j) {
    const Length step = dist(path[j - 1], path[j]);
    if (!reachable(step)) throw std::invalid_argument("path step is unreachable");
    prefix[j] = prefix[j - 1] + step;
  }
  return prefix;
}

void add_midpoint_edges(std::span<const Vertex> path, std::size_t lo, std::size_t hi,
                        const DistanceMatrix& dist, std::vector<HopsetEdge>& out) {
  if (hi < lo + 2) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  for (std::size_t x = lo; x + 1 < mid; ++x) {
    out.push_back({path[x], path[mid], dist(path[x], path[mid]), EdgeKind::kForward});
  }
  for (std::size_t y = mid + 2; y <= hi; ++y) {
    out.push_back({path[mid], path[y], dist(path[mid], path[y]), EdgeKind::kForward});
  }
  if (mid > lo) add_midpoint_edges(path, lo, mid - 1, dist, out);
  add_midpoint_edges(path, mid + 1, hi, dist, out);
}

}  // namespace

std::string_view kind_name(EdgeKind kind) { return kKindNames[static_cast<int>(kind)]; }

EdgeKind parse_kind(std::string_view name) {
  for (int k = 0; k < kNumEdgeKinds; ++k) {
    if (kKindNames[k] == name) return static_cast<EdgeKind>(k);
  }
  throw std::invalid_argument("unknown edge kind '" + std::string(name) + "'");
}

std::vector<HopsetEdge> forward_shortcut(std::span<const Vertex> path, const DistanceMatrix& dist) {
  std::vector<HopsetEdge> edges;
  if (path.size() >= 3) add_midpoint_edges(path, 0, path.size() - 1, dist, edges);
  return edges;
}

int distance_class(Length d, double base) {
  if (d < 1) throw std::invalid_argument("distance class of a non-positive distance");
  int j = static_cast<int>(std::floor(std::log(static_cast<double>(d)) / std::log(base)));
  while (j > 0 && std::pow(base, j) > static_cast<double>(d)) --j;
  while (std::pow(base, j + 1) <= static_cast<double>(d)) ++j;
  return j;
}

std::vector<int> weak_windows(std::span<const Length> prefix, double delta) {
  std::vector<int> window(prefix.size(), 0);
  if (prefix.empty()) return window;
  const double budget = delta * static_cast<double>(prefix.back() - prefix.front());
  if (budget <= 0.0) return window;
  for (std::size_t j = 0; j < prefix.size(); ++j) {
    window[j] = static_cast<int>(std::floor(static_cast<double>(prefix[j] - prefix.front()) / budget));
  }
  return window;
}

std::vector<HopsetEdge> weak_backward(std::span<const Vertex> segment,
                                      std::span<const Vertex> sampled, double gamma,
                                      double delta, const DistanceMatrix& dist) {
  std::vector<HopsetEdge> edges;
  if (sampled.empty() || segment.empty()) return edges;
  const double base = 1.0 + gamma;
  const auto prefix = prefix_along(segment, dist);
  const auto window = weak_windows(prefix, delta);

  for (Vertex v : sampled) {
    if (std::find(segment.begin(), segment.end(), v) == segment.end()) {
      throw std::invalid_argument("sampled vertex " + std::to_string(v) + " not on segment");
    }
    std::size_t begin = 0;
    while (begin < segment.size()) {
      std::size_t end = begin;
      while (end < segment.size() && window[end] == window[begin]) ++end;
      std::map<int, Vertex> first_into;  // v -> w, first w per class
      std::map<int, Vertex> last_from;   // w' -> v, last w' per class
      for (std::size_t j = begin; j < end; ++j) {
        const Vertex w = segment[j];
        if (w == v) continue;
        if (const Length d = dist(v, w); reachable(d)) first_into.try_emplace(distance_class(d, base), w);
        if (const Length d = dist(w, v); reachable(d)) last_from[distance_class(d, base)] = w;
      }
      for (const auto& [cls, w] : first_into) edges.push_back({v, w, dist(v, w), EdgeKind::kBackward});
      for (const auto& [cls, w] : last_from) edges.push_back({w, v, dist(w, v), EdgeKind::kBackward});
      begin = end;
    }
  }
  return edges;
}

IntervalFamily interval_family(std::span<const Length> prefix, int scale) {
  IntervalFamily family;
  family.scale = scale;
  const std::size_t n = prefix.size();
  if (n == 0) return family;
  const std::size_t step = std::size_t{1} << scale;
  const std::size_t width = step << 1;
  Length total = 0;
  for (std::size_t begin = 0;; begin += step) {
    const std::size_t end = std::min(n, begin + width);
    family.intervals.emplace_back(begin, end);
    total += prefix[end - 1] - prefix[begin];
    if (end == n) break;
  }
  family.mean_length = static_cast<double>(total) / static_cast<double>(family.intervals.size());
  return family;
}

int interval_class(Length interval_length, double mean_length) {
  if (mean_length <= 0.0) return 0;
  int ell = 0;
  while (std::ldexp(mean_length, ell + 1) <= static_cast<double>(interval_length)) ++ell;
  return ell;
}

double backward_sample_probability(Vertex n, int i) {
  const double log_n = n >= 2 ? std::log2(static_cast<double>(n)) : 1.0;
  return std::min(1.0, std::ldexp(log_n, -i));
}

double backward_delta(double delta, int ell, int i) { return std::ldexp(delta, -(ell + i + 3)); }

int backward_scale_count(std::size_t size) {
  int k = 0;
  while ((std::size_t{1} << k) < size) ++k;
  return std::max(1, k);
}

BackwardResult backward_shortcut(std::span<const Vertex> path, double gamma, double delta,
                                 const DistanceMatrix& dist, std::uint64_t seed) {
  BackwardResult result;
  if (path.size() < 2) return result;
  const auto prefix = prefix_along(path, dist);
  const int scales = backward_scale_count(path.size());
  for (int k = 1; k <= scales; ++k) {
    const IntervalFamily family = interval_family(prefix, k);
    for (std::size_t idx = 0; idx < family.intervals.size(); ++idx) {
      const auto [begin, end] = family.intervals[idx];
      const int ell = interval_class(prefix[end - 1] - prefix[begin], family.mean_length);
      const auto segment = path.subspan(begin, end - begin);
      for (int i = 1; i <= k; ++i) {
        const double p = backward_sample_probability(dist.size(), i);
        BackwardSample sample{k, static_cast<int>(idx), i, ell, begin, end, {}};
        std::vector<Vertex> chosen;
        for (std::size_t j = begin; j < end; ++j) {
          const double r = uniform01(seed, Stream::kBackward,
                                     {static_cast<std::uint64_t>(k), idx, static_cast<std::uint64_t>(i),
                                      static_cast<std::uint64_t>(path[j])});
          if (r < p) {
            sample.positions.push_back(j);
            chosen.push_back(path[j]);
          }
        }
        auto edges = weak_backward(segment, chosen, gamma, backward_delta(delta, ell, i), dist);
        result.edges.insert(result.edges.end(), edges.begin(), edges.end());
        result.samples.push_back(std::move(sample));
      }
    }
  }
  dedup_edges(result.edges);
  return result;
}

void dedup_edges(std::vector<HopsetEdge>& edges) {
  std::stable_sort(edges.begin(), edges.end(), [](const HopsetEdge& a, const HopsetEdge& b) {
    return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
  });
  std::vector<HopsetEdge> kept;
  kept.reserve(edges.size());
  for (const HopsetEdge& e : edges) {
    if (!kept.empty() && kept.back().tail == e.tail && kept.back().head == e.head) {
      if (e.weight != kept.back().weight) {
        throw std::logic_error("conflicting weights for hopset edge " + std::to_string(e.tail) +
                               "->" + std::to_string(e.head));
      }
      continue;
    }
    kept.push_back(e);
  }
  edges = std::move(kept);
}

}  // namespace hopset
