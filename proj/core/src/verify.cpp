#include "negpath/verify.hpp"

#include <algorithm>
#include <cassert>

#include "negpath/karp.hpp"
#include "negpath/rng.hpp"
#include "negpath/scc.hpp"

namespace negpath {

namespace {
constexpr int64_t kUnreached = std::numeric_limits<int64_t>::max();

std::string edge_str(const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  return "edge " + std::to_string(e) + " (" + std::to_string(ed.tail) + "->" +
         std::to_string(ed.head) + ", w=" + std::to_string(ed.weight) + ")";
}
}  // namespace

VerifyReport verify_projection(const Projection& p, const Graph& base) {
  if (p.base_n != base.vertex_count()) {
    return VerifyReport::fail("base-mismatch", "projection built over a different base size");
  }
  if (static_cast<Vertex>(p.pi.size()) != p.carrier.vertex_count()) {
    return VerifyReport::fail("pi-size", "pi not defined on every carrier vertex");
  }
  if (static_cast<Vertex>(p.rep.size()) != base.vertex_count()) {
    return VerifyReport::fail("rep-size", "rep table size mismatch");
  }
  for (Vertex x = 0; x < p.carrier.vertex_count(); ++x) {
    if (p.pi[x] < 0 || p.pi[x] >= base.vertex_count()) {
      return VerifyReport::fail("pi-range", "pi(" + std::to_string(x) + ") out of range");
    }
  }
  // Homomorphism: every carrier edge maps to a base edge of equal weight.
  for (EdgeId e = 0; e < p.carrier.edge_count(); ++e) {
    const Edge& ed = p.carrier.edge(e);
    const Vertex a = p.pi[ed.tail], b = p.pi[ed.head];
    bool found = false;
    for (EdgeId be : base.out_edges(a)) {
      if (base.edge(be).head == b && base.edge(be).weight == ed.weight) {
        found = true;
        break;
      }
    }
    if (!found) {
      VerifyReport r = VerifyReport::fail(
          "not-homomorphism", "carrier " + edge_str(p.carrier, e) + " maps to (" +
                                  std::to_string(a) + "->" + std::to_string(b) +
                                  ") which is not a base edge of that weight");
      r.witness = {ed.tail, ed.head};
      return r;
    }
  }
  // Representatives: total on present vertices, pi(rep(v)) = v.
  std::vector<char> present(static_cast<size_t>(base.vertex_count()), 0);
  for (Vertex x = 0; x < p.carrier.vertex_count(); ++x) present[p.pi[x]] = 1;
  for (Vertex v = 0; v < base.vertex_count(); ++v) {
    if (present[v] && p.rep[v] == kNoVertex) {
      return VerifyReport::fail("rep-missing",
                                "present vertex " + std::to_string(v) + " has no representative");
    }
    if (p.rep[v] != kNoVertex) {
      if (p.rep[v] < 0 || p.rep[v] >= p.carrier.vertex_count()) {
        return VerifyReport::fail("rep-range", "rep(" + std::to_string(v) + ") out of range");
      }
      if (p.pi[p.rep[v]] != v) {
        return VerifyReport::fail("rep-wrong-fiber",
                                  "rep(" + std::to_string(v) + ") maps to base vertex " +
                                      std::to_string(p.pi[p.rep[v]]));
      }
    }
  }
  return VerifyReport::ok();
}

namespace {

// Exact diameter of one SCC (members sorted); -1 flags a negative intra-SCC
// weight, reported through `bad_edge`.
int64_t scc_diameter(const Graph& g, const std::vector<Vertex>& members,
                     std::optional<EdgeId>* bad_edge) {
  for (Vertex v : members) {
    for (EdgeId e : g.out_edges(v)) {
      const Edge& ed = g.edge(e);
      if (ed.weight < 0 && std::binary_search(members.begin(), members.end(), ed.head)) {
        if (bad_edge) *bad_edge = e;
        return -1;
      }
    }
  }
  int64_t diam = 0;
  for (Vertex u : members) {
    const auto dist = dijkstra_in_region(g, members, u, false);
    for (int64_t d : dist) {
      assert(d != kUnreached);
      diam = std::max(diam, d);
    }
  }
  return diam;
}

}  // namespace

int64_t exact_scc_diameter(const Graph& g) {
  const SccDecomposition comps = scc(g);
  int64_t diam = 0;
  for (const auto& members : comps.members) {
    if (members.size() <= 1) continue;
    std::optional<EdgeId> bad;
    const int64_t d = scc_diameter(g, members, &bad);
    if (d < 0) throw ContractViolation("exact_scc_diameter: negative intra-SCC weight");
    diam = std::max(diam, d);
  }
  return diam;
}

VerifyReport verify_clustered(const Graph& g, int64_t bound, const ClusteredOptions& opt) {
  const SccDecomposition comps = scc(g);
  VerifyReport report = VerifyReport::ok();
  int64_t max_diam = 0;
  for (const auto& members : comps.members) {
    if (members.size() <= 1) continue;
    int64_t diam = 0;
    if (opt.weak_base != nullptr) {
      // Weak diameter: distances between pi-images measured in the base.
      std::vector<Vertex> images;
      images.reserve(members.size());
      for (Vertex v : members) images.push_back(opt.pi[v]);
      std::sort(images.begin(), images.end());
      images.erase(std::unique(images.begin(), images.end()), images.end());
      std::vector<char> is_image(static_cast<size_t>(opt.weak_base->vertex_count()), 0);
      for (Vertex x : images) is_image[x] = 1;
      for (Vertex x : images) {
        const ShortestPathResult r = dijkstra(*opt.weak_base, x);
        for (Vertex y : images) {
          if (!r.dist[y].is_finite()) {
            return VerifyReport::fail("weak-unreachable",
                                      "pi-images " + std::to_string(x) + " and " +
                                          std::to_string(y) + " disconnected in the base");
          }
          diam = std::max(diam, r.dist[y].value());
        }
      }
    } else {
      std::optional<EdgeId> bad;
      diam = scc_diameter(g, members, &bad);
      if (diam < 0) {
        VerifyReport r = VerifyReport::fail("negative-intra-scc-weight",
                                            "SCC contains " + edge_str(g, *bad));
        return r;
      }
    }
    max_diam = std::max(max_diam, diam);
    if (diam > bound && report.pass) {
      report = VerifyReport::fail("diameter-exceeded",
                                  "SCC of size " + std::to_string(members.size()) +
                                      " has diameter " + std::to_string(diam) + " > bound " +
                                      std::to_string(bound));
      report.witness.assign(members.begin(), members.end());
    }
  }
  report.max_scc_diameter = max_diam;
  return report;
}

namespace {

// State shared by the exhaustive DFS over simple <=d paths.
struct CoverDfs {
  const Graph& base;
  const Projection& p;
  int64_t d;
  bool rep_start;
  int64_t budget;
  int64_t checked = 0;
  // Carrier adjacency grouped per base head happens on the fly; the inverse
  // image lists are precomputed.
  std::vector<std::vector<Vertex>> fiber;  // base vertex -> carrier copies
  int64_t neg_slack = 0;                   // total |w| over negative base edges

  explicit CoverDfs(const Graph& b, const Projection& proj, int64_t dd, bool rs, int64_t bud)
      : base(b), p(proj), d(dd), rep_start(rs), budget(bud) {
    fiber.resize(static_cast<size_t>(b.vertex_count()));
    for (Vertex x = 0; x < p.carrier.vertex_count(); ++x) fiber[p.pi[x]].push_back(x);
    for (const Edge& e : b.edges()) {
      if (e.weight < 0) neg_slack += -e.weight;
    }
  }

  // Lift frontier transition: carrier successors of S mapping to `next`.
  std::vector<Vertex> advance(const std::vector<Vertex>& frontier, Vertex next) const {
    std::vector<Vertex> out;
    for (Vertex x : frontier) {
      for (EdgeId e : p.carrier.out_edges(x)) {
        const Vertex y = p.carrier.edge(e).head;
        if (p.pi[y] == next) out.push_back(y);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

}  // namespace

VerifyReport verify_path_covering(const Graph& base, const Projection& p, int64_t d,
                                  const PathCoveringOptions& opt) {
  if (d < 0) throw ContractViolation("verify_path_covering: d < 0");
  // Zero-length paths: every base vertex must be present (with a
  // representative when the start property is demanded).
  for (Vertex v = 0; v < base.vertex_count(); ++v) {
    const bool has_copy = p.rep[v] != kNoVertex;
    if (!has_copy) {
      bool present = false;
      for (Vertex x = 0; x < p.carrier.vertex_count() && !present; ++x) present = p.pi[x] == v;
      if (present) {
        return VerifyReport::fail("rep-missing", "present vertex " + std::to_string(v) +
                                                     " has no representative");
      }
      VerifyReport r = VerifyReport::fail(
          "uncovered-vertex", "base vertex " + std::to_string(v) + " is absent from the carrier");
      r.witness = {v};
      return r;
    }
  }

  CoverDfs dfs(base, p, d, opt.require_rep_start, opt.budget);

  // Covering is a property of vertex sequences, so parallel edges collapse:
  // the cheapest one decides the sequence weight and represents the hop.
  auto min_hop = [&](Vertex a, Vertex b) -> std::pair<int64_t, EdgeId> {
    int64_t best = kUnreached;
    EdgeId first = kNoEdge;
    for (EdgeId e : base.out_edges(a)) {
      if (base.edge(e).head == b && base.edge(e).weight < best) {
        best = base.edge(e).weight;
        first = e;
      }
    }
    return {best, first};
  };

  auto start_frontier = [&](Vertex v) {
    return opt.require_rep_start ? std::vector<Vertex>{p.rep[v]} : dfs.fiber[v];
  };

  // Checks one explicit vertex sequence; returns empty on success.
  auto check_sequence = [&](const std::vector<Vertex>& seq) -> std::optional<VerifyReport> {
    std::vector<Vertex> frontier = start_frontier(seq[0]);
    for (size_t i = 1; i < seq.size(); ++i) {
      frontier = dfs.advance(frontier, seq[i]);
      if (frontier.empty()) {
        VerifyReport r = VerifyReport::fail("uncovered-path", "no lift for the witness path");
        r.witness = seq;
        return r;
      }
    }
    return std::nullopt;
  };

  int64_t checked = 0;
  if (opt.mode == CoverMode::exhaustive) {
    // Iterative DFS over simple paths; prunes on the weight bound (allowing
    // slack for negative base weights) and carries the lift frontier.
    struct Frame {
      Vertex v;
      size_t next_edge;
      int64_t weight;                 // min-parallel weight of the path so far
      std::vector<Vertex> frontier;   // empty = already uncovered
    };
    std::vector<char> on_path(static_cast<size_t>(base.vertex_count()), 0);
    std::vector<Vertex> path;
    std::vector<Frame> stack;
    for (Vertex s = 0; s < base.vertex_count(); ++s) {
      stack.push_back(Frame{s, 0, 0, start_frontier(s)});
      path.push_back(s);
      on_path[s] = 1;
      ++checked;
      while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.frontier.empty() && f.weight <= d) {
          VerifyReport r = VerifyReport::fail("uncovered-path", "no lift for the witness path");
          r.witness = path;
          r.paths_checked = checked;
          return r;
        }
        const auto out = base.out_edges(f.v);
        bool descended = false;
        while (f.next_edge < out.size()) {
          const EdgeId eid = out[f.next_edge++];
          const Edge& ed = base.edge(eid);
          if (on_path[ed.head]) continue;
          const auto [hop, hop_edge] = min_hop(f.v, ed.head);
          if (eid != hop_edge) continue;  // visit each successor vertex once
          const int64_t w = f.weight + hop;
          if (w > d + dfs.neg_slack) continue;
          if (++checked > opt.budget) {
            throw BudgetExceeded("verify_path_covering: path census over budget (" +
                                 std::to_string(opt.budget) + ")");
          }
          std::vector<Vertex> nf = dfs.advance(f.frontier, ed.head);
          path.push_back(ed.head);
          on_path[ed.head] = 1;
          stack.push_back(Frame{ed.head, 0, w, std::move(nf)});
          descended = true;
          break;
        }
        if (!descended) {
          on_path[f.v] = 0;
          path.pop_back();
          stack.pop_back();
        }
      }
    }
  } else {
    // Sampled: all single-edge paths, then seeded bounded random walks.
    for (const Edge& e : base.edges()) {
      if (e.weight > d || e.tail == e.head) continue;
      ++checked;
      if (auto r = check_sequence({e.tail, e.head})) {
        r->paths_checked = checked;
        return *r;
      }
    }
    Rng rng(opt.seed);
    std::vector<char> on_path(static_cast<size_t>(base.vertex_count()), 0);
    for (int64_t it = 0; it < opt.samples; ++it) {
      std::vector<Vertex> seq{static_cast<Vertex>(rng.bounded(base.vertex_count()))};
      on_path[seq[0]] = 1;
      int64_t w = 0;
      while (true) {
        std::vector<std::pair<Vertex, int64_t>> moves;
        for (EdgeId e : base.out_edges(seq.back())) {
          const Edge& ed = base.edge(e);
          if (!on_path[ed.head] && w + ed.weight <= d) moves.push_back({ed.head, ed.weight});
        }
        if (moves.empty() || rng.bounded(4) == 0) break;
        const auto& [to, hop] = moves[rng.bounded(moves.size())];
        seq.push_back(to);
        on_path[to] = 1;
        w += hop;
      }
      for (Vertex v : seq) on_path[v] = 0;
      if (seq.size() < 2) continue;
      ++checked;
      if (auto r = check_sequence(seq)) {
        r->paths_checked = checked;
        return *r;
      }
    }
  }
  VerifyReport r = VerifyReport::ok();
  r.paths_checked = checked;
  return r;
}

VerifyReport verify_restricted(const Graph& g, Vertex s) {
  const Vertex n = g.vertex_count();
  if (s < 0 || s >= n) return VerifyReport::fail("bad-source", "source out of range");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.weight < -1 || ed.weight > n) {
      VerifyReport r = VerifyReport::fail(
          "weight-range", edge_str(g, e) + " outside {-1..n} with n=" + std::to_string(n));
      r.witness = {ed.tail, ed.head};
      return r;
    }
  }
  std::vector<char> has_zero(static_cast<size_t>(n), 0);
  for (EdgeId e : g.out_edges(s)) {
    if (g.edge(e).weight == 0) has_zero[g.edge(e).head] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v != s && !has_zero[v]) {
      VerifyReport r = VerifyReport::fail(
          "missing-source-edge", "no 0-weight edge from source to " + std::to_string(v));
      r.witness = {v};
      return r;
    }
  }
  const MinMeanCycle mmc = karp_min_mean_cycle(g);
  if (!mmc.acyclic) {
    VerifyReport r;
    r.min_mean_cycle = {{mmc.num, mmc.den}};
    if (rational_less(mmc.num, mmc.den, 1, 1)) {
      r.pass = false;
      r.failure = "cycle-mean";
      r.detail = "cycle with mean " + std::to_string(mmc.num) + "/" + std::to_string(mmc.den) +
                 " < 1";
      r.witness = mmc.cycle;
    }
    return r;
  }
  return VerifyReport::ok();
}

VerifyReport verify_sssp(const Graph& g, Vertex s, const ShortestPathResult& r) {
  const Vertex n = g.vertex_count();
  if (s < 0 || s >= n) return VerifyReport::fail("bad-source", "source out of range");
  if (static_cast<Vertex>(r.dist.size()) != n || static_cast<Vertex>(r.parent.size()) != n) {
    return VerifyReport::fail("size-mismatch", "result arrays do not match the graph");
  }
  if (r.source != s) return VerifyReport::fail("wrong-source", "result has a different source");
  if (!(r.dist[s] == Dist::finite(0))) {
    return VerifyReport::fail("source-dist", "dist(source) = " + r.dist[s].str() + " != 0");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!r.dist[ed.tail].is_finite()) continue;
    if (!(r.dist[ed.head] <= r.dist[ed.tail].plus(ed.weight))) {
      VerifyReport rep = VerifyReport::fail(
          "edge-violation", edge_str(g, e) + " violates dist(" + std::to_string(ed.head) +
                                ") <= dist(" + std::to_string(ed.tail) + ") + w");
      rep.witness = {ed.tail, ed.head};
      return rep;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    const EdgeId pe = r.parent[v];
    if (pe != kNoEdge) {
      if (pe < 0 || pe >= g.edge_count() || g.edge(pe).head != v) {
        return VerifyReport::fail("bad-parent", "parent of " + std::to_string(v) +
                                                    " is not an in-edge");
      }
      const Edge& ed = g.edge(pe);
      if (!r.dist[v].is_finite() || !r.dist[ed.tail].is_finite()) continue;
      if (r.dist[v] != r.dist[ed.tail].plus(ed.weight)) {
        VerifyReport rep =
            VerifyReport::fail("parent-not-tight", "parent " + edge_str(g, pe) + " of vertex " +
                                                       std::to_string(v) + " is not tight");
        rep.witness = {v};
        return rep;
      }
    } else if (v != s && r.dist[v].is_finite()) {
      return VerifyReport::fail("missing-parent",
                                "finite vertex " + std::to_string(v) + " has no parent");
    }
  }
  // Every finite vertex must reach the source through parent links.
  std::vector<int8_t> state(static_cast<size_t>(n), 0);  // 0 unknown, 1 ok, 2 on walk
  state[s] = 1;
  std::vector<Vertex> walk;
  for (Vertex v = 0; v < n; ++v) {
    if (!r.dist[v].is_finite() || state[v] != 0) continue;
    walk.clear();
    Vertex cur = v;
    while (state[cur] == 0) {
      state[cur] = 2;
      walk.push_back(cur);
      const EdgeId pe = r.parent[cur];
      if (pe == kNoEdge || !r.dist[cur].is_finite()) {
        return VerifyReport::fail("parent-dangling", "parent walk from " + std::to_string(v) +
                                                         " leaves the tree at " +
                                                         std::to_string(cur));
      }
      cur = g.edge(pe).tail;
    }
    if (state[cur] == 2) {
      VerifyReport rep =
          VerifyReport::fail("parent-cycle", "parent links cycle at " + std::to_string(cur));
      rep.witness = walk;
      return rep;
    }
    for (Vertex w : walk) state[w] = 1;
  }
  return VerifyReport::ok();
}

}  // namespace negpath
