#include "negpath/karp.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>

#include "negpath/scc.hpp"

namespace negpath {

bool rational_less(int64_t num1, int64_t den1, int64_t num2, int64_t den2) {
  assert(den1 > 0 && den2 > 0);
  return static_cast<__int128>(num1) * den2 < static_cast<__int128>(num2) * den1;
}

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max();

struct SccMean {
  int64_t num;
  int64_t den;
};

// Karp's theorem on one SCC (given as local adjacency): the minimum cycle
// mean equals min_v max_k (D[h][v] - D[k][v]) / (h - k) over finite entries,
// where D[k][v] is the cheapest k-edge walk from an arbitrary root.
std::optional<SccMean> karp_on_scc(const std::vector<std::vector<std::pair<int32_t, Weight>>>& adj) {
  const int32_t h = static_cast<int32_t>(adj.size());
  std::vector<std::vector<int64_t>> d(static_cast<size_t>(h) + 1,
                                      std::vector<int64_t>(static_cast<size_t>(h), kInf));
  d[0][0] = 0;
  for (int32_t k = 1; k <= h; ++k) {
    for (int32_t v = 0; v < h; ++v) {
      if (d[k - 1][v] == kInf) continue;
      for (const auto& [to, w] : adj[v]) {
        d[k][to] = std::min(d[k][to], d[k - 1][v] + w);
      }
    }
  }
  std::optional<SccMean> best;
  for (int32_t v = 0; v < h; ++v) {
    if (d[h][v] == kInf) continue;
    std::optional<SccMean> worst;
    for (int32_t k = 0; k < h; ++k) {
      if (d[k][v] == kInf) continue;
      const SccMean cand{d[h][v] - d[k][v], h - k};
      if (!worst || rational_less(worst->num, worst->den, cand.num, cand.den)) worst = cand;
    }
    if (worst && (!best || rational_less(worst->num, worst->den, best->num, best->den))) {
      best = worst;
    }
  }
  return best;
}

}  // namespace

MinMeanCycle karp_min_mean_cycle(const Graph& g) {
  const SccDecomposition comps = scc(g);
  MinMeanCycle out;

  std::optional<SccMean> best;
  int32_t best_comp = -1;
  for (int32_t c = 0; c < comps.count(); ++c) {
    const auto& verts = comps.members[c];
    // A single vertex without a self-loop holds no cycle.
    bool has_self_loop = false;
    if (verts.size() == 1) {
      for (EdgeId e : g.out_edges(verts[0])) {
        if (g.edge(e).head == verts[0]) has_self_loop = true;
      }
      if (!has_self_loop) continue;
    }
    std::vector<Vertex> local_of(static_cast<size_t>(g.vertex_count()), kNoVertex);
    for (size_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = static_cast<Vertex>(i);
    std::vector<std::vector<std::pair<int32_t, Weight>>> adj(verts.size());
    for (Vertex v : verts) {
      for (EdgeId e : g.out_edges(v)) {
        const Edge& ed = g.edge(e);
        if (local_of[ed.head] != kNoVertex && comps.component[ed.head] == c) {
          adj[local_of[v]].push_back({local_of[ed.head], ed.weight});
        }
      }
    }
    const auto mean = karp_on_scc(adj);
    if (mean && (!best || rational_less(mean->num, mean->den, best->num, best->den))) {
      best = mean;
      best_comp = c;
    }
  }
  if (!best) return out;  // acyclic

  out.acyclic = false;
  const int64_t gcd = std::gcd(best->num < 0 ? -best->num : best->num, best->den);
  out.num = gcd ? best->num / gcd : 0;
  out.den = gcd ? best->den / gcd : 1;

  // Witness: under w'(e) = den*w(e) - num every cycle is nonnegative and the
  // optimum cycle is tight, so any cycle made of tight edges (w'_phi == 0
  // under Bellman-Ford potentials) achieves the minimum mean exactly.
  const auto& verts = comps.members[best_comp];
  std::vector<Vertex> local_of(static_cast<size_t>(g.vertex_count()), kNoVertex);
  for (size_t i = 0; i < verts.size(); ++i) local_of[verts[i]] = static_cast<Vertex>(i);
  const int32_t h = static_cast<int32_t>(verts.size());
  std::vector<std::tuple<int32_t, int32_t, int64_t>> edges;  // (from, to, w')
  for (Vertex v : verts) {
    for (EdgeId e : g.out_edges(v)) {
      const Edge& ed = g.edge(e);
      if (local_of[ed.head] != kNoVertex && comps.component[ed.head] == best_comp) {
        edges.emplace_back(local_of[v], local_of[ed.head],
                           out.den * ed.weight - out.num);
      }
    }
  }
  std::vector<int64_t> phi(static_cast<size_t>(h), kInf);
  phi[0] = 0;
  for (int32_t round = 0; round < h; ++round) {
    bool ch = false;
    for (const auto& [a, b, w] : edges) {
      if (phi[a] != kInf && phi[a] + w < phi[b]) {
        phi[b] = phi[a] + w;
        ch = true;
      }
    }
    if (!ch) break;
  }
  // DFS for a cycle made of tight edges; the optimum cycle is fully tight,
  // so one exists.
  std::vector<std::vector<int32_t>> tight(static_cast<size_t>(h));
  for (const auto& [a, b, w] : edges) {
    assert(phi[a] != kInf && phi[b] != kInf);
    if (w + phi[a] - phi[b] == 0) tight[a].push_back(b);
  }
  std::vector<int32_t> color(static_cast<size_t>(h), 0);  // 0 white, 1 on path, 2 done
  std::vector<int32_t> path;
  struct DfsFrame {
    int32_t v;
    size_t next;
  };
  std::vector<DfsFrame> dfs;
  for (int32_t root = 0; root < h && out.cycle.empty(); ++root) {
    if (color[root] != 0) continue;
    dfs.push_back({root, 0});
    color[root] = 1;
    path.push_back(root);
    while (!dfs.empty() && out.cycle.empty()) {
      DfsFrame& f = dfs.back();
      if (f.next < tight[f.v].size()) {
        const int32_t w = tight[f.v][f.next++];
        if (color[w] == 1) {
          const auto it = std::find(path.begin(), path.end(), w);
          for (auto p = it; p != path.end(); ++p) out.cycle.push_back(verts[*p]);
        } else if (color[w] == 0) {
          color[w] = 1;
          path.push_back(w);
          dfs.push_back({w, 0});
        }
        continue;
      }
      color[f.v] = 2;
      path.pop_back();
      dfs.pop_back();
    }
    dfs.clear();
    path.clear();
  }
  assert(!out.cycle.empty());
  return out;
}

}  // namespace negpath
