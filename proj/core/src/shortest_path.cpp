#include "negpath/shortest_path.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <string>

namespace negpath {

namespace {

using HeapEntry = std::pair<int64_t, Vertex>;  // (distance, vertex), lexicographic
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>>;

constexpr int64_t kUnreached = std::numeric_limits<int64_t>::max();

ShortestPathResult finish_result(Vertex s, const std::vector<int64_t>& dist,
                                 std::vector<EdgeId> parent) {
  ShortestPathResult r;
  r.source = s;
  r.dist.reserve(dist.size());
  for (int64_t d : dist) r.dist.push_back(d == kUnreached ? Dist::pos_inf() : Dist::finite(d));
  r.parent = std::move(parent);
  return r;
}

}  // namespace

ShortestPathResult dijkstra(const Graph& g, Vertex s) {
  const Vertex n = g.vertex_count();
  if (s < 0 || s >= n) throw ContractViolation("dijkstra: source out of range");
  std::vector<int64_t> dist(static_cast<size_t>(n), kUnreached);
  std::vector<EdgeId> parent(static_cast<size_t>(n), kNoEdge);
  MinHeap heap;
  dist[s] = 0;
  heap.push({0, s});
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[v]) continue;  // stale
    for (EdgeId e : g.out_edges(v)) {
      const Edge& ed = g.edge(e);
      if (ed.weight < 0) {
        throw ContractViolation("dijkstra: negative weight on edge " + std::to_string(e));
      }
      const int64_t nd = d + ed.weight;
      if (nd < dist[ed.head]) {
        dist[ed.head] = nd;
        parent[ed.head] = e;
        heap.push({nd, ed.head});
      }
    }
  }
  return finish_result(s, dist, std::move(parent));
}

BellmanFordResult bellman_ford(const Graph& g, Vertex s) {
  const Vertex n = g.vertex_count();
  if (s < 0 || s >= n) throw ContractViolation("bellman_ford: source out of range");
  std::vector<int64_t> dist(static_cast<size_t>(n), kUnreached);
  std::vector<EdgeId> parent(static_cast<size_t>(n), kNoEdge);
  dist[s] = 0;
  bool changed = n > 0;
  for (Vertex round = 0; round < n && changed; ++round) {
    changed = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      if (dist[ed.tail] == kUnreached) continue;
      const int64_t nd = dist[ed.tail] + ed.weight;
      if (nd < dist[ed.head]) {
        dist[ed.head] = nd;
        parent[ed.head] = e;
        changed = true;
      }
    }
  }

  BellmanFordResult out;
  if (changed) {
    // Ran n full rounds and the graph is still relaxing: a negative cycle is
    // reachable. Keep relaxing until the predecessor graph closes a cycle
    // (one extra pass suffices in practice; the bound n is a safety net),
    // then cut the cycle out of the parent links.
    std::vector<Vertex> affected;
    std::vector<Vertex> cycle;
    for (Vertex extra = 0; extra < n && cycle.empty(); ++extra) {
      affected.clear();
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (dist[ed.tail] == kUnreached) continue;
        const int64_t nd = dist[ed.tail] + ed.weight;
        if (nd < dist[ed.head]) {
          dist[ed.head] = nd;
          parent[ed.head] = e;
          affected.push_back(ed.head);
        }
      }
      if (affected.empty()) throw ContractViolation("bellman_ford: lost the relaxing edge");
      // Look for a cycle in the parent functional graph.
      std::vector<int32_t> color(static_cast<size_t>(n), 0);  // 0 white, >0 walk id, -1 done
      for (Vertex start = 0; start < n && cycle.empty(); ++start) {
        if (color[start] != 0 || parent[start] == kNoEdge) continue;
        const int32_t walk_id = start + 1;
        Vertex v = start;
        while (v != kNoVertex && color[v] == 0) {
          color[v] = walk_id;
          v = parent[v] == kNoEdge ? kNoVertex : g.edge(parent[v]).tail;
        }
        if (v != kNoVertex && color[v] == walk_id) {
          Vertex w = v;
          do {
            cycle.push_back(w);
            w = g.edge(parent[w]).tail;
          } while (w != v);
          std::reverse(cycle.begin(), cycle.end());  // parent walk runs against edges
        }
        for (Vertex u = start; u != kNoVertex && color[u] == walk_id;) {
          color[u] = -1;
          u = parent[u] == kNoEdge ? kNoVertex : g.edge(parent[u]).tail;
        }
      }
    }
    if (cycle.empty()) throw ContractViolation("bellman_ford: cycle detection failed");
    int64_t total = 0;
    for (Vertex v : cycle) total += g.edge(parent[v]).weight;
    if (total >= 0) throw ContractViolation("bellman_ford: extracted cycle not negative");

    // Mark everything a still-relaxing vertex can reach as -infinity.
    std::vector<char> neg(static_cast<size_t>(n), 0);
    std::vector<Vertex> queue;
    for (Vertex v : affected) {
      if (!neg[v]) {
        neg[v] = 1;
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      const Vertex v = queue.back();
      queue.pop_back();
      for (EdgeId e : g.out_edges(v)) {
        const Vertex h = g.edge(e).head;
        if (!neg[h]) {
          neg[h] = 1;
          queue.push_back(h);
        }
      }
    }
    out.paths = finish_result(s, dist, std::move(parent));
    for (Vertex v = 0; v < n; ++v) {
      if (neg[v]) out.paths.dist[v] = Dist::neg_inf();
    }
    out.negative_cycle = std::move(cycle);
    return out;
  }
  out.paths = finish_result(s, dist, std::move(parent));
  return out;
}

namespace {

int64_t adjusted_weight(const Edge& e, std::span<const int64_t> phi) {
  if (phi.empty()) return e.weight;
  return e.weight + phi[e.tail] - phi[e.head];
}

}  // namespace

ShortestPathResult dag_potential_sssp_adjusted(const Graph& g, Vertex s,
                                               std::span<const int64_t> extra_phi,
                                               const SccDecomposition* scc_hint) {
  const Vertex n = g.vertex_count();
  if (s < 0 || s >= n) throw ContractViolation("dag_potential_sssp: source out of range");
  SccDecomposition local;
  if (scc_hint == nullptr) {
    local = scc(g);
    scc_hint = &local;
  }
  const std::vector<int32_t>& comp = scc_hint->component;

  int64_t w_bound = 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const int64_t w = adjusted_weight(ed, extra_phi);
    if (comp[ed.tail] == comp[ed.head] && w < 0) {
      throw ContractViolation("dag_potential_sssp: negative intra-SCC edge " + std::to_string(e) +
                              " (" + std::to_string(ed.tail) + "->" + std::to_string(ed.head) +
                              ")");
    }
    w_bound = std::max(w_bound, w < 0 ? -w : w);
  }

  // phi(v) = -W * (topological index of v's SCC); cross-component edges gain
  // at least +W, intra-component edges are nonnegative by the precondition.
  std::vector<int64_t> dist(static_cast<size_t>(n), kUnreached);
  std::vector<EdgeId> parent(static_cast<size_t>(n), kNoEdge);
  auto dag_phi = [&](Vertex v) { return -w_bound * static_cast<int64_t>(comp[v] + 1); };
  MinHeap heap;
  dist[s] = 0;
  heap.push({0, s});
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[v]) continue;
    for (EdgeId e : g.out_edges(v)) {
      const Edge& ed = g.edge(e);
      const int64_t w = adjusted_weight(ed, extra_phi) + dag_phi(v) - dag_phi(ed.head);
      assert(w >= 0);
      const int64_t nd = d + w;
      if (nd < dist[ed.head]) {
        dist[ed.head] = nd;
        parent[ed.head] = e;
        heap.push({nd, ed.head});
      }
    }
  }
  // Translate the internal reweighting back (Johnson): d(u) = d_phi(u) - phi(s) + phi(u).
  for (Vertex v = 0; v < n; ++v) {
    if (dist[v] != kUnreached) dist[v] += dag_phi(v) - dag_phi(s);
  }
  return finish_result(s, dist, std::move(parent));
}

ShortestPathResult dag_potential_sssp(const Graph& g, Vertex s) {
  return dag_potential_sssp_adjusted(g, s, {}, nullptr);
}

std::vector<int64_t> dijkstra_in_region(const Graph& g, std::span<const Vertex> region,
                                        Vertex source, bool reversed) {
  const auto local_of = [&](Vertex v) -> int32_t {
    const auto it = std::lower_bound(region.begin(), region.end(), v);
    if (it == region.end() || *it != v) return -1;
    return static_cast<int32_t>(it - region.begin());
  };
  std::vector<int64_t> dist(region.size(), kUnreached);
  const int32_t src = local_of(source);
  if (src < 0) throw ContractViolation("dijkstra_in_region: source not in region");
  std::priority_queue<std::pair<int64_t, int32_t>, std::vector<std::pair<int64_t, int32_t>>,
                      std::greater<>>
      heap;
  dist[src] = 0;
  heap.push({0, src});
  while (!heap.empty()) {
    const auto [d, lv] = heap.top();
    heap.pop();
    if (d != dist[lv]) continue;
    const Vertex v = region[lv];
    for (EdgeId e : reversed ? g.in_edges(v) : g.out_edges(v)) {
      const Edge& ed = g.edge(e);
      const Vertex other = reversed ? ed.tail : ed.head;
      const int32_t lo = local_of(other);
      if (lo < 0) continue;
      if (ed.weight < 0) throw ContractViolation("dijkstra_in_region: negative weight");
      const int64_t nd = d + ed.weight;
      if (nd < dist[lo]) {
        dist[lo] = nd;
        heap.push({nd, lo});
      }
    }
  }
  return dist;
}

std::optional<ShortestPathResult> few_neg_sssp_opt(const Graph& g, Vertex s, int64_t k,
                                                   const FewNegOptions& opt) {
  const Vertex n = g.vertex_count();
  if (s < 0 || s >= n) throw ContractViolation("few_neg_sssp: source out of range");
  if (k < 0) throw ContractViolation("few_neg_sssp: k < 0");

  std::vector<int64_t> dist(static_cast<size_t>(n), kUnreached);
  std::vector<EdgeId> parent(static_cast<size_t>(n), kNoEdge);
  std::vector<EdgeId> neg_edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (adjusted_weight(g.edge(e), opt.phi) < 0) neg_edges.push_back(e);
  }

  MinHeap heap;
  auto run_nonneg_dijkstra = [&]() {
    while (!heap.empty()) {
      const auto [d, v] = heap.top();
      heap.pop();
      if (d != dist[v]) continue;
      for (EdgeId e : g.out_edges(v)) {
        const Edge& ed = g.edge(e);
        const int64_t w = adjusted_weight(ed, opt.phi);
        if (w < 0) continue;
        const int64_t nd = d + w;
        if (nd < dist[ed.head]) {
          dist[ed.head] = nd;
          parent[ed.head] = e;
          heap.push({nd, ed.head});
        }
      }
    }
  };

  // Layer 1: plain Dijkstra over the nonnegative subgraph.
  dist[s] = 0;
  heap.push({0, s});
  run_nonneg_dijkstra();

  // Layer i -> i+1: relax every negative edge once, then re-run Dijkstra
  // seeded with the improved vertices. Equivalent to the (k+1)-layer graph.
  for (int64_t round = 1; round <= k; ++round) {
    bool improved = false;
    for (EdgeId e : neg_edges) {
      const Edge& ed = g.edge(e);
      if (dist[ed.tail] == kUnreached) continue;
      const int64_t nd = dist[ed.tail] + adjusted_weight(ed, opt.phi);
      if (nd < dist[ed.head]) {
        if (opt.abort_below && nd < *opt.abort_below) return std::nullopt;
        dist[ed.head] = nd;
        parent[ed.head] = e;
        heap.push({nd, ed.head});
        improved = true;
      }
    }
    if (!improved) break;
    run_nonneg_dijkstra();
  }
  return finish_result(s, dist, std::move(parent));
}

ShortestPathResult few_neg_sssp(const Graph& g, Vertex s, int64_t k) {
  auto r = few_neg_sssp_opt(g, s, k, FewNegOptions{});
  assert(r.has_value());
  return std::move(*r);
}

}  // namespace negpath
