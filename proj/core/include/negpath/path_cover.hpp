// The d-path cover recursion: interleaved forward/backward thin-layer ball
// growing, the two split cases, and layered gluing of the pieces. Output is
// a projection covering every simple path of weight <= d, with the stronger
// start property Start(lift) = rep(Start(path)).
#pragma once

#include <span>
#include <vector>

#include "negpath/ball_grower.hpp"
#include "negpath/projection.hpp"
#include "negpath/shortest_path.hpp"

namespace negpath {

struct PathCoverParams {
  int64_t d = 0;
  int64_t lambda = 16;
  bool paper_preset = false;
  // Extra per-node bookkeeping asserts (test builds).
  bool check_invariants = false;
  // Stats report the exact max SCC diameter up to this carrier size and a
  // certified upper bound beyond it.
  int64_t exact_diameter_limit = 4096;

  // lambda = max(lambda, 10000 * ceil(log2 n)^4), as the construction's
  // layer-count bound requires.
  static PathCoverParams paper(Vertex n, int64_t d);
  static PathCoverParams practical(int64_t d, int64_t lambda = 16);

  Rational eps_prime(Vertex n) const { return Rational{9 * log2_ceil(n), lambda}; }
};

struct CoverStats {
  int64_t carrier_vertex_count = 0;
  int64_t carrier_edge_count = 0;
  int64_t sum_base_deg = 0;  // sum over carrier vertices of deg_G(pi(v'))
  int64_t max_layer_out = 0;
  int64_t max_layer_in = 0;
  int64_t case1_count = 0;
  int64_t case2_count = 0;
  int64_t empty_mid_fallbacks = 0;
  int64_t realized_scc_diameter = 0;
  bool diameter_is_exact = false;
};

struct PathCoverResult {
  Projection projection;
  CoverStats stats;
  // Carrier copies of the Case-2 pivots; every non-singleton carrier SCC is
  // one middle piece and contains its pivot copy.
  std::vector<Vertex> cluster_anchors;
};

// Weights of g must be nonnegative.
PathCoverResult path_cover(const Graph& g, const PathCoverParams& params);

// Case-2 middle piece: the union of shortest-path-tree paths from the pivot
// to M = B_out intersect B_in (in t_out) and from M back to the pivot (in
// t_in). t_out/t_in are rooted at the same pivot; t_in follows in-edges.
std::vector<Vertex> build_middle_graph(const Graph& g, std::span<const Vertex> b_out,
                                       std::span<const Vertex> b_in,
                                       const ShortestPathResult& t_out,
                                       const ShortestPathResult& t_in);

// Upper bound on the max SCC diameter: ecc_out + ecc_in from one root per
// SCC (the anchor when present). Cheap and certified, but up to 2x slack.
int64_t certified_scc_diameter_bound(const Graph& carrier, std::span<const Vertex> anchors);

}  // namespace negpath
