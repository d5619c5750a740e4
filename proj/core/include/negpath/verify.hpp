// Independent validators for the structural promises: projection validity,
// clustering, d-path covering with the representative-start property,
// restricted-instance validity, and shortest-path certification.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "negpath/projection.hpp"
#include "negpath/shortest_path.hpp"

namespace negpath {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct VerifyReport {
  bool pass = true;
  std::string failure;  // short code, empty on pass
  std::string detail;   // counterexample description
  std::optional<int64_t> max_scc_diameter;
  std::optional<std::pair<int64_t, int64_t>> min_mean_cycle;  // num/den
  std::optional<int64_t> paths_checked;
  std::vector<Vertex> witness;

  static VerifyReport ok() { return {}; }
  static VerifyReport fail(std::string code, std::string det) {
    VerifyReport r;
    r.pass = false;
    r.failure = std::move(code);
    r.detail = std::move(det);
    return r;
  }
};

// Weight-preserving homomorphism plus representative checks. Does not trust
// Projection::base_edge; edges are re-matched against the base graph.
VerifyReport verify_projection(const Projection& p, const Graph& base);

struct ClusteredOptions {
  // Weak-diameter variant: measure distances between pi-images inside
  // `weak_base` instead of inside the carrier. Off by default.
  const Graph* weak_base = nullptr;
  std::span<const Vertex> pi = {};
};

// Exact per-SCC diameters via all-sources Dijkstra; desk-scale audit.
VerifyReport verify_clustered(const Graph& g, int64_t bound, const ClusteredOptions& opt = {});

// Max SCC diameter (exact); shared with cover statistics.
int64_t exact_scc_diameter(const Graph& g);

enum class CoverMode { exhaustive, sampled };

struct PathCoveringOptions {
  CoverMode mode = CoverMode::exhaustive;
  bool require_rep_start = true;
  int64_t budget = 2'000'000;  // exhaustive: max enumerated paths
  uint64_t seed = 1;           // sampled mode
  int64_t samples = 2000;
};

// Lift dynamic program over every simple path of weight <= d (exhaustive) or
// over sampled walks plus all single edges. Throws BudgetExceeded when the
// exhaustive census outgrows the budget.
VerifyReport verify_path_covering(const Graph& base, const Projection& p, int64_t d,
                                  const PathCoveringOptions& opt = {});

// Def-style restricted instance check: weights in {-1..n}, min cycle mean
// >= 1 (exact, via Karp), and 0-weight source edges to every vertex.
VerifyReport verify_restricted(const Graph& g, Vertex s);

// Certifies distances + parent tree: tight parents, no violated edges,
// parent walks reach the source.
VerifyReport verify_sssp(const Graph& g, Vertex s, const ShortestPathResult& r);

}  // namespace negpath
