// Classical building blocks: Dijkstra, the Bellman-Ford oracle with
// negative-cycle extraction, and the two layered solvers used by the
// restricted recursion (DAG-potential Dijkstra, few-negative-edges SSSP).
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "negpath/graph.hpp"
#include "negpath/scc.hpp"

namespace negpath {

struct ShortestPathResult {
  Vertex source = 0;
  std::vector<Dist> dist;
  std::vector<EdgeId> parent;  // kNoEdge when none (source / unreachable)
};

// Nonnegative weights only; a negative weight on a touched edge throws
// ContractViolation. Deterministic (distance, vertex) heap order.
ShortestPathResult dijkstra(const Graph& g, Vertex s);

struct BellmanFordResult {
  ShortestPathResult paths;
  // Present iff a negative cycle is reachable from the source. The cycle's
  // summed weight is verified negative before returning; vertices that a
  // cycle can reach carry -inf distances.
  std::optional<std::vector<Vertex>> negative_cycle;
};

BellmanFordResult bellman_ford(const Graph& g, Vertex s);

// SSSP when every negative edge crosses between different SCCs: reweight by
// phi(v) = -W * (topological index of v's SCC) and run Dijkstra.
ShortestPathResult dag_potential_sssp(const Graph& g, Vertex s);

// Internal-friendly variant: `extra_phi` is composed into edge weights on the
// fly and `scc_hint` skips the Tarjan pass; both optional.
ShortestPathResult dag_potential_sssp_adjusted(const Graph& g, Vertex s,
                                               std::span<const int64_t> extra_phi,
                                               const SccDecomposition* scc_hint);

// SSSP under the promise that every shortest path from s uses at most k
// negative edges: the (k+1)-layer construction, evaluated as alternating
// negative-edge relaxation rounds and Dijkstra passes over the nonnegative
// subgraph. Stops early once a round changes nothing.
ShortestPathResult few_neg_sssp(const Graph& g, Vertex s, int64_t k);

// Dijkstra inside g[region] (region sorted ascending, nonnegative weights);
// result is keyed by position in `region`, INT64_MAX where unreached.
// `reversed` follows in-edges instead (distances *to* the source).
std::vector<int64_t> dijkstra_in_region(const Graph& g, std::span<const Vertex> region,
                                        Vertex source, bool reversed);

struct FewNegOptions {
  // Compose this potential into weights on the fly (empty = none).
  std::span<const int64_t> phi = {};
  // Abort (returns nullopt) once any tentative distance drops below this;
  // used to cut off hopeless runs when a negative cycle is suspected.
  std::optional<int64_t> abort_below = {};
};

std::optional<ShortestPathResult> few_neg_sssp_opt(const Graph& g, Vertex s, int64_t k,
                                                   const FewNegOptions& opt);

}  // namespace negpath
