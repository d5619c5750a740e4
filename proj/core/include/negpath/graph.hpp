// Immutable directed weighted multigraph with out/in adjacency tables,
// weight transforms and DIMACS-style serialization.
#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "negpath/types.hpp"

namespace negpath {

struct Edge {
  Vertex tail;
  Vertex head;
  Weight weight;
};

// Per-vertex potential phi; pure data.
struct Potential {
  std::vector<int64_t> values;
};

class Graph {
 public:
  // Whether to materialize the in-adjacency table. Large internal DAG-like
  // products only ever walk forward; everything user-facing keeps both.
  enum class Tables { out_and_in, out_only };

  Graph() = default;
  Graph(Vertex n, std::vector<Edge> edges, Tables tables = Tables::out_and_in);

  Vertex vertex_count() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const EdgeId> out_edges(Vertex v) const {
    return {out_ids_.data() + out_start_[v], out_ids_.data() + out_start_[v + 1]};
  }
  std::span<const EdgeId> in_edges(Vertex v) const;
  bool has_in_tables() const { return has_in_; }

  int64_t deg_out(Vertex v) const { return out_start_[v + 1] - out_start_[v]; }
  int64_t deg_in(Vertex v) const;
  int64_t deg_total(Vertex v) const { return deg_out(v) + deg_in(v); }

  // Largest weight magnitude over all edges (0 when edgeless).
  Weight weight_bound() const { return weight_bound_; }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int64_t> out_start_{0};
  std::vector<EdgeId> out_ids_;
  std::vector<int64_t> in_start_{0};
  std::vector<EdgeId> in_ids_;
  Weight weight_bound_ = 0;
  bool has_in_ = true;
};

// DIMACS-style .gr text. Malformed input throws ParseError with line number.
Graph load_dimacs(std::istream& in);
Graph load_dimacs_string(const std::string& text);
void dump_dimacs(const Graph& g, std::ostream& out);
std::string dump_dimacs_string(const Graph& g);

// Edge-wise max(0, w).
Graph truncate_nonneg(const Graph& g);

// w_phi(u,v) = w(u,v) + phi(u) - phi(v); structure unchanged.
Graph apply_potential(const Graph& g, const Potential& phi);

struct SubgraphResult {
  Graph graph;
  std::vector<Vertex> old_to_new;  // kNoVertex where absent
  std::vector<Vertex> new_to_old;
};

// Induced subgraph on `vertices` (deduplicated, kept in sorted order).
SubgraphResult induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace negpath
