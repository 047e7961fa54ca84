#include "hopset/verify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hopset/parallel.hpp"
#include "hopset/random.hpp"

namespace hopset {

namespace {

double log2n(Vertex n) { return n >= 2 ? std::log2(static_cast<double>(n)) : 1.0; }

std::vector<Edge> plain(std::span<const HopsetEdge> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const HopsetEdge& e : edges) out.push_back(e.edge());
  return out;
}

bool within(Length observed, double bound) {
  return reachable(observed) && static_cast<double>(observed) <= bound * (1.0 + 1e-12) + 1e-9;
}

// Layered hop DP driven by the set of vertices that improved in the last
// layer. `dist` always holds the current layer.
class Frontier {
 public:
  Frontier(const WeightedDigraph& g, Vertex s)
      : g_(g), dist_(static_cast<std::size_t>(g.num_vertices()), kUnreachable), next_(dist_) {
    dist_[s] = next_[s] = 0;
    changed_.push_back(s);
  }

  // Advances one hop; returns false once nothing improves.
  bool step() {
    std::vector<Vertex> updated;
    for (Vertex u : changed_) {
      const Length du = dist_[u];
      for (const Arc& a : g_.out(u)) {
        const Length cand = du + a.weight;
        if (!reachable(next_[a.to]) || cand < next_[a.to]) {
          if (next_[a.to] == dist_[a.to]) updated.push_back(a.to);
          next_[a.to] = cand;
        }
      }
    }
    for (Vertex v : updated) dist_[v] = next_[v];
    changed_ = std::move(updated);
    return !changed_.empty();
  }

  const std::vector<Length>& dist() const { return dist_; }
  const std::vector<Vertex>& changed() const { return changed_; }

 private:
  const WeightedDigraph& g_;
  std::vector<Length> dist_;
  std::vector<Length> next_;
  std::vector<Vertex> changed_;
};

}  // namespace

std::vector<std::pair<Vertex, std::vector<Vertex>>> verification_pairs(Vertex n,
                                                                       const VerifyOptions& options,
                                                                       bool* full) {
  std::vector<std::pair<Vertex, std::vector<Vertex>>> groups;
  const bool all = options.force_full || n <= options.full_cap;
  if (full) *full = all;
  if (all) {
    for (Vertex s = 0; s < n; ++s) {
      std::vector<Vertex> targets;
      for (Vertex t = 0; t < n; ++t) {
        if (t != s) targets.push_back(t);
      }
      groups.emplace_back(s, std::move(targets));
    }
    return groups;
  }
  if (n < 2) return groups;
  const std::size_t count = options.sample_pairs ? options.sample_pairs : 10 * static_cast<std::size_t>(n);
  std::map<Vertex, std::set<Vertex>> chosen;
  CounterRng rng(options.seed, Stream::kVerifySample);
  for (std::size_t i = 0; i < count; ++i) {
    const auto s = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    auto t = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - 1)));
    if (t >= s) ++t;
    chosen[s].insert(t);
  }
  for (auto& [s, targets] : chosen) groups.emplace_back(s, std::vector<Vertex>(targets.begin(), targets.end()));
  return groups;
}

DistanceReport check_distance_preservation(const WeightedDigraph& g, std::span<const HopsetEdge> hopset,
                                           const VerifyOptions& options) {
  DistanceReport report;
  const Vertex n = g.num_vertices();
  const WeightedDigraph gu = with_extra_edges(g, plain(hopset));

  // Edge weights, grouped by tail so each tail needs one Dijkstra.
  std::map<Vertex, std::vector<const HopsetEdge*>> by_tail;
  for (const HopsetEdge& e : hopset) by_tail[e.tail].push_back(&e);
  for (const auto& [tail, list] : by_tail) {
    const auto row = sssp_exact(g, tail);
    for (const HopsetEdge* e : list) {
      ++report.edges_checked;
      if (row[e->head] != e->weight) {
        ++report.failure_count;
        if (report.edge_failures.size() < options.max_failures) {
          report.edge_failures.push_back({e->tail, e->head, e->weight, row[e->head]});
        }
      }
    }
  }

  const auto groups = verification_pairs(n, options);
  std::vector<std::vector<PairFailure>> failures(groups.size());
  std::vector<std::size_t> checked(groups.size(), 0);
  parallel_for(groups.size(), [&](std::size_t gi) {
    const auto& [s, targets] = groups[gi];
    const auto truth = sssp_exact(g, s);
    const auto aug = sssp_exact(gu, s);
    for (Vertex t : targets) {
      ++checked[gi];
      if (truth[t] != aug[t]) failures[gi].push_back({s, t, static_cast<double>(truth[t]), aug[t]});
    }
  });
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    report.pairs_checked += checked[gi];
    report.failure_count += failures[gi].size();
    for (const PairFailure& f : failures[gi]) {
      if (report.pair_failures.size() < options.max_failures) report.pair_failures.push_back(f);
    }
  }
  report.passed = report.failure_count == 0;
  return report;
}

VerificationReport check_hop_stretch(const WeightedDigraph& g, std::span<const HopsetEdge> hopset,
                                     int beta, double eps, const VerifyOptions& options) {
  VerificationReport report;
  report.beta = beta;
  report.eps = eps;
  const Vertex n = g.num_vertices();
  const WeightedDigraph gu = with_extra_edges(g, plain(hopset));
  const auto groups = verification_pairs(n, options, &report.full);

  struct SourceResult {
    std::size_t pairs = 0;
    double max_stretch = 1.0;
    int hopbound = 0;
    bool preserved = true;
    std::vector<PairFailure> failures;
  };
  std::vector<SourceResult> results(groups.size());

  parallel_for(groups.size(), [&](std::size_t gi) {
    const auto& [s, all_targets] = groups[gi];
    SourceResult& out = results[gi];
    const auto truth = sssp_exact(g, s);
    const auto aug = sssp_exact(gu, s);

    std::vector<Vertex> targets;
    for (Vertex t : all_targets) {
      if (aug[t] != truth[t]) out.preserved = false;
      if (reachable(truth[t])) targets.push_back(t);
    }
    out.pairs = targets.size();
    if (targets.empty()) return;

    std::vector<double> allowed(static_cast<std::size_t>(n), 0.0);
    std::vector<int> satisfied_at(static_cast<std::size_t>(n), -1);
    std::vector<char> is_target(static_cast<std::size_t>(n), 0);
    for (Vertex t : targets) {
      allowed[t] = (1.0 + eps) * static_cast<double>(truth[t]);
      is_target[t] = 1;
    }
    std::size_t remaining = targets.size();
    bool recorded = false;
    auto record_stretch = [&](const std::vector<Length>& d) {
      for (Vertex t : targets) {
        if (!reachable(d[t])) {
          out.max_stretch = std::numeric_limits<double>::infinity();
          out.failures.push_back({s, t, allowed[t], kUnreachable});
          continue;
        }
        const double ratio = static_cast<double>(d[t]) / static_cast<double>(truth[t]);
        out.max_stretch = std::max(out.max_stretch, ratio);
        if (!within(d[t], allowed[t])) out.failures.push_back({s, t, allowed[t], d[t]});
      }
      recorded = true;
    };

    Frontier search(gu, s);
    int h = 0;
    if (beta == 0) record_stretch(search.dist());
    while (!recorded || remaining > 0) {
      const bool moved = search.step();
      ++h;
      for (Vertex v : search.changed()) {
        if (is_target[v] && satisfied_at[v] < 0 && within(search.dist()[v], allowed[v])) {
          satisfied_at[v] = h;
          --remaining;
        }
      }
      if (!recorded && (h >= beta || !moved)) record_stretch(search.dist());
      if (!moved) break;
    }
    for (Vertex t : targets) {
      if (satisfied_at[t] < 0) {
        out.hopbound = -1;
        break;
      }
      out.hopbound = std::max(out.hopbound, satisfied_at[t]);
    }
  });

  for (const SourceResult& r : results) {
    report.pairs_checked += r.pairs;
    report.max_stretch = std::max(report.max_stretch, r.max_stretch);
    if (report.achieved_hopbound >= 0) {
      report.achieved_hopbound = r.hopbound < 0 ? -1 : std::max(report.achieved_hopbound, r.hopbound);
    }
    report.distance_preservation = report.distance_preservation && r.preserved;
    report.failure_count += r.failures.size();
    for (const PairFailure& f : r.failures) {
      if (report.failures.size() < options.max_failures) report.failures.push_back(f);
    }
  }
  report.passed = report.failure_count == 0 && report.distance_preservation;
  return report;
}

ReachabilityReport check_reachability(const WeightedDigraph& g, std::span<const HopsetEdge> shortcuts) {
  ReachabilityReport report;
  const Vertex n = g.num_vertices();
  const WeightedDigraph gu = with_extra_edges(g, plain(shortcuts));
  auto bfs = [n](const WeightedDigraph& graph, Vertex s) {
    std::vector<int> hops(static_cast<std::size_t>(n), -1);
    std::deque<Vertex> queue{s};
    hops[s] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (const Arc& a : graph.out(u)) {
        if (hops[a.to] < 0) {
          hops[a.to] = hops[u] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return hops;
  };
  for (Vertex s = 0; s < n; ++s) {
    const auto before = bfs(g, s);
    const auto after = bfs(gu, s);
    for (Vertex t = 0; t < n; ++t) {
      if ((before[t] >= 0) != (after[t] >= 0)) report.closure_preserved = false;
      if (t != s && after[t] >= 0) {
        ++report.reachable_pairs;
        report.max_hops = std::max(report.max_hops, after[t]);
      }
    }
  }
  return report;
}

double backward_bound(double gamma, double delta, Length distance, Length path_length,
                      std::size_t path_size, int hops_on_path, std::size_t road_hits) {
  return (1.0 + gamma) * static_cast<double>(distance) +
         delta * static_cast<double>(path_length) * hops_on_path /
             (static_cast<double>(path_size) * static_cast<double>(std::max<std::size_t>(road_hits, 1)));
}

int designated_scale(int hops_on_path) {
  int k = 1;
  while ((1 << k) < hops_on_path) ++k;
  return k;
}

int designated_level(std::size_t road_hits) {
  if (road_hits <= 6) return 0;
  const std::size_t excess = road_hits - 4;
  int i = 1;
  while ((std::size_t{1} << (i + 1)) < excess) ++i;
  return i;
}

BackwardBoundReport check_backward_bound(const WeightedDigraph& g_aug, std::span<const Vertex> path,
                                         std::span<const HopsetEdge> edges, double gamma, double delta,
                                         std::span<const BackwardSample> samples,
                                         const DistanceMatrix& dist) {
  BackwardBoundReport report;
  const WeightedDigraph with_edges = with_extra_edges(g_aug, plain(edges));
  const Vertex n = g_aug.num_vertices();
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (std::size_t j = 0; j < path.size(); ++j) position[path[j]] = static_cast<int>(j);
  const Length path_length = path.empty() ? 0 : dist(path.front(), path.back());

  for (std::size_t px = 1; px < path.size(); ++px) {
    const Vertex x = path[px];
    const RoadTree tree(g_aug, x);
    const auto six = hop_bounded_dist(with_edges, x, 6);
    for (std::size_t py = 0; py < px; ++py) {
      const Vertex y = path[py];
      const Length d = dist(x, y);
      if (!reachable(d)) continue;
      ++report.backward_pairs;
      const Path road = tree.path_to(y);
      std::vector<std::size_t> hits;
      for (Vertex v : road.vertices) {
        if (position[v] >= 0) hits.push_back(static_cast<std::size_t>(position[v]));
      }
      const int hops = static_cast<int>(px - py);
      const double bound = backward_bound(gamma, delta, d, path_length, path.size(), hops, hits.size());
      const bool pass = within(six[y], bound);
      if (pass) ++report.unconditional_passes;

      const int k = designated_scale(hops);
      const int i = designated_level(hits.size());
      if (i == 0 || i > k) continue;
      const BackwardSample* hit = nullptr;
      for (const BackwardSample& sample : samples) {
        if (sample.scale != k || sample.level != i) continue;
        if (sample.begin > py || px >= sample.end) continue;
        for (std::size_t q : sample.positions) {
          if (std::find(hits.begin(), hits.end(), q) != hits.end()) {
            hit = &sample;
            break;
          }
        }
        if (hit) break;
      }
      if (!hit) continue;
      ++report.obligated;
      if (!pass) {
        ++report.obligated_failures;
        report.failures.push_back({x, y, k, hit->interval, i, bound, six[y]});
      }
    }
  }
  return report;
}

WitnessAux make_witness_aux(const HopsetBuild& build) {
  WitnessAux aux;
  aux.beta = build.config.beta;
  aux.eps = build.config.eps;
  aux.paths = build.aux.paths;
  aux.hierarchy = build.aux.hierarchy;
  aux.edges = build.hopset.edges();
  return aux;
}

WitnessExtractor::WitnessExtractor(const WeightedDigraph& g, WitnessAux aux) : aux_(std::move(aux)) {
  std::vector<Edge> forward;
  for (const HopsetEdge& e : aux_.edges) {
    if (e.kind == EdgeKind::kForward) forward.push_back(e.edge());
  }
  g_aug_ = with_extra_edges(g, forward);
  g_all_ = with_extra_edges(g, plain(aux_.edges));
}

std::vector<Vertex> WitnessExtractor::local_walk(Vertex from, Vertex to, std::span<const Vertex> allowed,
                                                 int hops) const {
  if (from == to) return {from};
  std::unordered_map<Vertex, Vertex> local;
  std::vector<Vertex> global;
  auto add = [&](Vertex v) {
    if (local.emplace(v, static_cast<Vertex>(global.size())).second) global.push_back(v);
  };
  add(from);
  add(to);
  for (Vertex v : allowed) add(v);
  std::vector<Edge> edges;
  for (Vertex u : global) {
    for (const Arc& a : g_all_.out(u)) {
      const auto it = local.find(a.to);
      if (it != local.end()) edges.push_back({local[u], it->second, a.weight});
    }
  }
  const WeightedDigraph sub = WeightedDigraph::from_edges(static_cast<Vertex>(global.size()), edges);
  try {
    const Path p = hop_bounded_path(sub, 0, local[to], hops);
    std::vector<Vertex> out;
    for (Vertex v : p.vertices) out.push_back(global[v]);
    return out;
  } catch (const NoPathError&) {
    return {};
  }
}

WitnessResult WitnessExtractor::extract(Vertex s, Vertex t) const {
  g_all_.check_vertex(s);
  g_all_.check_vertex(t);
  WitnessResult result;
  const RoadTree tree(g_aug_, s);
  result.road = tree.path_to(t);
  result.distance = result.road.length;
  const auto& R = result.road.vertices;
  const Length D = result.distance;
  const Vertex n = g_all_.num_vertices();
  const NicePathCollection& paths = aux_.paths;
  const SamplingHierarchy& hier = aux_.hierarchy;
  auto note = [&](const std::string& line) { result.trace.push_back(line); };

  std::vector<Vertex> Q{s};
  auto finish = [&]() {
    result.walk.vertices = Q;
    try {
      result.walk.length = walk_length(g_all_, Q);
      result.realizable = true;
    } catch (const NoPathError&) {
      result.realizable = false;
    }
    result.hop_ok = static_cast<int>(result.walk.hops()) <= aux_.beta;
    result.stretch_ok =
        result.realizable && static_cast<double>(result.walk.length) <= (1.0 + aux_.eps) * static_cast<double>(D) + 1e-9;
    return result;
  };

  if (static_cast<int>(result.road.hops()) <= aux_.beta) {
    note("road within beta hops");
    Q = R;
    result.anchors = {s, t};
    return finish();
  }

  // Prefix lengths along R; subpaths of R are the roads between their ends.
  std::vector<Length> prefix(R.size(), 0);
  for (std::size_t j = 0; j < R.size(); ++j) prefix[j] = tree.length(R[j]);
  const double relevant_cap = aux_.eps * static_cast<double>(D) / (8.0 * log2n(n));
  auto relevant = [&](int pid) {
    return pid >= 0 && static_cast<double>(paths[static_cast<std::size_t>(pid)].length()) <= relevant_cap;
  };
  std::map<int, std::size_t> last_on_road;
  for (std::size_t j = 0; j < R.size(); ++j) {
    const int pid = paths.path_of(R[j]);
    if (relevant(pid)) last_on_road[pid] = j;
  }

  const int L = hier.num_levels();
  std::vector<std::size_t> anchor(static_cast<std::size_t>(L) + 2, 0);
  anchor[static_cast<std::size_t>(L) + 1] = R.size() - 1;
  for (int i = 1; i <= L; ++i) {
    for (const auto& [pid, j] : last_on_road) {
      if (hier.path_in(i, pid)) anchor[i] = std::max(anchor[i], j);
    }
  }
  for (std::size_t i = 0; i < anchor.size(); ++i) result.anchors.push_back(R[anchor[i]]);
  {
    std::ostringstream line;
    line << "road hops " << result.road.hops() << ", relevant paths on road " << last_on_road.size();
    note(line.str());
  }
  for (int i = 1; i <= L; ++i) {
    std::size_t count = 0;
    for (const auto& [pid, j] : last_on_road) {
      if (j >= anchor[i]) ++count;
    }
    std::ostringstream line;
    line << "level " << i << ": relevant paths meeting R(s_i,t) " << count << " (predicted <= "
         << 24.0 * aux_.beta / (std::ldexp(1.0, i) * log2n(n) * log2n(n)) << ")";
    note(line.str());
  }

  auto append = [&](const std::vector<Vertex>& walk) {
    for (std::size_t j = 1; j < walk.size(); ++j) Q.push_back(walk[j]);
  };
  auto path_vertices = [&](Vertex v) -> std::span<const Vertex> {
    const int pid = paths.path_of(v);
    if (pid < 0) return {};
    return paths[static_cast<std::size_t>(pid)].vertices;
  };
  auto follow_road = [&](std::size_t from, std::size_t to) {
    for (std::size_t j = from + 1; j <= to; ++j) Q.push_back(R[j]);
  };

  // Q_0: s -> s' along the road, then one vertex-path hop to s_1.
  std::size_t cur = 0;
  if (anchor[1] > 0) {
    std::size_t first_sampled = R.size();
    for (std::size_t j = 0; j < R.size(); ++j) {
      if (hier.vertex_in(1, R[j])) {
        first_sampled = j;
        break;
      }
    }
    bool jumped = false;
    if (first_sampled < anchor[1]) {
      const auto hop = local_walk(R[first_sampled], R[anchor[1]], path_vertices(R[anchor[1]]), 3);
      if (!hop.empty()) {
        follow_road(0, first_sampled);
        append(hop);
        jumped = true;
      }
    }
    if (!jumped) {
      note("phase 0: no level-1 vertex before s_1, following the road");
      follow_road(0, anchor[1]);
    }
    cur = anchor[1];
  }

  for (int i = 1; i < L; ++i) {
    const std::size_t end = anchor[static_cast<std::size_t>(i) + 1];
    if (cur >= end) {
      if (anchor[i] == end) note("phase " + std::to_string(i) + ": s_i = s_{i+1}, empty phase");
      continue;
    }
    std::map<int, std::size_t> first_seen;
    std::size_t steps = 0;
    while (cur < end) {
      if (++steps > static_cast<std::size_t>(n) + 1) {
        std::ostringstream msg;
        msg << "phase " << i << " did not terminate";
        for (const auto& line : result.trace) msg << "\n" << line;
        throw std::runtime_error(msg.str());
      }
      ++cur;
      const Vertex v = R[cur];
      Q.push_back(v);
      if (cur >= end) break;
      const int pid = paths.path_of(v);
      if (!relevant(pid)) continue;
      const NicePath& P = paths[static_cast<std::size_t>(pid)];
      const auto pos = [&](std::size_t j) { return paths.position_of(R[j]); };

      const auto seen = first_seen.find(pid);
      if (seen == first_seen.end()) {
        first_seen[pid] = cur;
        std::size_t target = cur;
        const std::size_t vf = last_on_road[pid];
        if (static_cast<double>(prefix[vf] - prefix[cur]) > aux_.eps * static_cast<double>(D)) {
          target = vf;
          note("phase " + std::to_string(i) + ": S1 jump on path " + std::to_string(pid));
        } else {
          // v_easy: last road vertex of P after v with an easy interval.
          std::size_t hits = 1;
          for (std::size_t e = cur + 1; e <= vf; ++e) {
            if (paths.path_of(R[e]) != pid) continue;
            ++hits;
            const bool easy = pos(cur) < pos(e) ||
                              static_cast<double>(pos(cur) - pos(e)) / static_cast<double>(hits) <
                                  std::ldexp(1.0, i);
            if (easy) target = e;
          }
          if (target > cur) note("phase " + std::to_string(i) + ": S2 jump on path " + std::to_string(pid));
        }
        if (target > cur) {
          const int budget = pos(cur) < pos(target) ? 2 : 6;
          const auto hop = local_walk(v, R[target], P.vertices, budget);
          if (hop.empty()) {
            note("phase " + std::to_string(i) + ": shortcut unavailable, stepping on");
          } else {
            append(hop);
            cur = target;
          }
        }
        continue;
      }

      // Revisit of P: S3 if v lies before v_0 on P and a level-(i+1) vertex
      // sits between them.
      const int pv = paths.position_of(v);
      const int p0 = paths.position_of(R[seen->second]);
      if (pv >= p0) continue;
      Vertex u = -1;
      for (int q = pv; q <= p0; ++q) {
        if (hier.vertex_in(i + 1, P.vertices[q])) {
          u = P.vertices[q];
          break;
        }
      }
      if (u < 0) continue;
      const auto first = local_walk(v, u, P.vertices, 2);
      const auto second = first.empty() ? first : local_walk(u, R[end], path_vertices(R[end]), 3);
      if (first.empty() || second.empty()) {
        note("phase " + std::to_string(i) + ": S3 hop unavailable, stepping on");
        continue;
      }
      note("phase " + std::to_string(i) + ": S3 via level-" + std::to_string(i + 1) + " vertex " +
           std::to_string(u));
      append(first);
      append(second);
      cur = end;
    }
  }

  // Q_L: the rest of the road.
  follow_road(cur, R.size() - 1);
  {
    std::size_t off_path = 0;
    for (Vertex v : R) {
      if (!relevant(paths.path_of(v))) ++off_path;
    }
    std::ostringstream line;
    line << "road vertices off relevant paths " << off_path << " (predicted <= " << aux_.beta / 3.0 << ")";
    note(line.str());
  }
  return finish();
}

}  // namespace hopset
