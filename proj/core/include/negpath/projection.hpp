// Projections (weight-preserving graph homomorphisms onto a base graph)
// with representatives, and the layered-projection gluing rule.
#pragma once

#include <span>
#include <tuple>
#include <vector>

#include "negpath/graph.hpp"

namespace negpath {

struct Projection {
  Graph carrier;
  Vertex base_n = 0;
  std::vector<Vertex> pi;         // carrier vertex -> base vertex
  std::vector<Vertex> rep;        // base vertex -> carrier vertex, kNoVertex if absent
  std::vector<EdgeId> base_edge;  // carrier edge -> base edge id (kNoEdge when unresolved)

  bool present(Vertex base_v) const { return rep[base_v] != kNoVertex; }
};

// Identity projection of an induced subgraph: one carrier copy per vertex in
// `vertices`, representative = the copy itself.
Projection identity_projection(const Graph& base, std::span<const Vertex> vertices);

// Layered projection (the ordered gluing): disjoint union of the parts,
// rep(v) = rep in the earliest part where v is present, and for every base
// edge (a,b), every copy a' in a part strictly earlier than the part holding
// rep(b) gains the edge (a', rep(b)) with w(a,b). Parts may be empty; empty
// parts are skipped.
Projection layer_projections(const Graph& base, std::span<const Projection> parts);

// Mutable builder shared by layer_projections and the cover recursion, so the
// gluing rule exists in exactly one place.
class CarrierBuilder {
 public:
  explicit CarrierBuilder(const Graph& base);

  Vertex add_vertex(Vertex base_v);
  void add_edge(Vertex x, Vertex y, EdgeId base_e);
  Vertex size() const { return static_cast<Vertex>(pi_.size()); }
  int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }
  Vertex pi(Vertex carrier_v) const { return pi_[carrier_v]; }

  // One part = a carrier id range plus its representative list.
  struct PartRef {
    Vertex begin = 0, end = 0;                          // carrier id range (may be empty)
    std::span<const std::pair<Vertex, Vertex>> reps;    // (base vertex, carrier vertex)
  };

  // Applies the layering rule across `parts` (in order): merges reps
  // earliest-part-wins into `merged_reps` and adds the cross edges. Only
  // base vertices present in some part count as present.
  void layer_parts(std::span<const PartRef> parts,
                   std::vector<std::pair<Vertex, Vertex>>& merged_reps);

  // Hands the accumulated carrier out as a Projection over the base graph.
  Projection finish(std::vector<std::pair<Vertex, Vertex>> root_reps);

  const Graph& base() const { return *base_; }

 private:
  const Graph* base_;
  std::vector<Vertex> pi_;
  std::vector<std::tuple<Vertex, Vertex, EdgeId>> edges_;
  // Scratch for layer_parts, stamped per call.
  std::vector<int32_t> mark_;
  std::vector<int32_t> part_rank_;
  std::vector<Vertex> rep_carrier_;
  int32_t epoch_ = 0;
};

}  // namespace negpath
