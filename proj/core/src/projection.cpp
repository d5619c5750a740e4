#include "negpath/projection.hpp"

#include <algorithm>

namespace negpath {

Projection identity_projection(const Graph& base, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Projection p;
  p.base_n = base.vertex_count();
  p.rep.assign(static_cast<size_t>(base.vertex_count()), kNoVertex);
  std::vector<Vertex> local(static_cast<size_t>(base.vertex_count()), kNoVertex);
  for (size_t i = 0; i < sorted.size(); ++i) {
    const Vertex v = sorted[i];
    if (v < 0 || v >= base.vertex_count()) throw ContractViolation("vertex out of range");
    p.pi.push_back(v);
    p.rep[v] = static_cast<Vertex>(i);
    local[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    const Edge& ed = base.edge(e);
    if (local[ed.tail] != kNoVertex && local[ed.head] != kNoVertex) {
      edges.push_back(Edge{local[ed.tail], local[ed.head], ed.weight});
      p.base_edge.push_back(e);
    }
  }
  p.carrier = Graph(static_cast<Vertex>(sorted.size()), std::move(edges));
  return p;
}

CarrierBuilder::CarrierBuilder(const Graph& base)
    : base_(&base),
      mark_(static_cast<size_t>(base.vertex_count()), 0),
      part_rank_(static_cast<size_t>(base.vertex_count()), 0),
      rep_carrier_(static_cast<size_t>(base.vertex_count()), kNoVertex) {}

Vertex CarrierBuilder::add_vertex(Vertex base_v) {
  pi_.push_back(base_v);
  return static_cast<Vertex>(pi_.size() - 1);
}

void CarrierBuilder::add_edge(Vertex x, Vertex y, EdgeId base_e) {
  edges_.emplace_back(x, y, base_e);
}

void CarrierBuilder::layer_parts(std::span<const PartRef> parts,
                                 std::vector<std::pair<Vertex, Vertex>>& merged_reps) {
  ++epoch_;
  merged_reps.clear();
  for (size_t r = 0; r < parts.size(); ++r) {
    for (const auto& [base_v, carrier_v] : parts[r].reps) {
      if (mark_[base_v] != epoch_) {
        mark_[base_v] = epoch_;
        part_rank_[base_v] = static_cast<int32_t>(r);
        rep_carrier_[base_v] = carrier_v;
        merged_reps.emplace_back(base_v, carrier_v);
      }
    }
  }
  // Cross edges: copies in earlier parts point at representatives that live
  // in strictly later parts. One edge per base edge per copy of its tail.
  for (size_t r = 0; r + 1 < parts.size(); ++r) {
    for (Vertex x = parts[r].begin; x < parts[r].end; ++x) {
      const Vertex a = pi_[x];
      for (EdgeId e : base_->out_edges(a)) {
        const Vertex b = base_->edge(e).head;
        if (mark_[b] == epoch_ && part_rank_[b] > static_cast<int32_t>(r)) {
          add_edge(x, rep_carrier_[b], e);
        }
      }
    }
  }
}

Projection CarrierBuilder::finish(std::vector<std::pair<Vertex, Vertex>> root_reps) {
  Projection p;
  p.base_n = base_->vertex_count();
  p.pi = std::move(pi_);
  p.rep.assign(static_cast<size_t>(base_->vertex_count()), kNoVertex);
  for (const auto& [base_v, carrier_v] : root_reps) p.rep[base_v] = carrier_v;
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  p.base_edge.reserve(edges_.size());
  for (const auto& [x, y, base_e] : edges_) {
    edges.push_back(Edge{x, y, base_->edge(base_e).weight});
    p.base_edge.push_back(base_e);
  }
  p.carrier = Graph(static_cast<Vertex>(p.pi.size()), std::move(edges));
  return p;
}

namespace {

// carrier edge -> base edge id by (pi(tail), pi(head), weight) lookup; a miss
// means the part is not a projection of the base.
EdgeId resolve_base_edge(const Graph& base, const Projection& part, EdgeId carrier_e) {
  const Edge& ed = part.carrier.edge(carrier_e);
  if (carrier_e < static_cast<EdgeId>(part.base_edge.size())) {
    const EdgeId hint = part.base_edge[carrier_e];
    if (hint != kNoEdge && base.edge(hint).tail == part.pi[ed.tail] &&
        base.edge(hint).head == part.pi[ed.head] && base.edge(hint).weight == ed.weight) {
      return hint;
    }
  }
  const Vertex a = part.pi[ed.tail];
  for (EdgeId e : base.out_edges(a)) {
    const Edge& be = base.edge(e);
    if (be.head == part.pi[ed.head] && be.weight == ed.weight) return e;
  }
  return kNoEdge;
}

}  // namespace

Projection layer_projections(const Graph& base, std::span<const Projection> parts) {
  CarrierBuilder builder(base);
  std::vector<std::vector<std::pair<Vertex, Vertex>>> rep_lists(parts.size());
  std::vector<CarrierBuilder::PartRef> refs(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) {
    const Projection& part = parts[i];
    if (part.base_n != base.vertex_count()) {
      throw ContractViolation("layer_projections: part over a different base");
    }
    const Vertex begin = builder.size();
    for (Vertex x = 0; x < part.carrier.vertex_count(); ++x) builder.add_vertex(part.pi[x]);
    for (EdgeId e = 0; e < part.carrier.edge_count(); ++e) {
      const Edge& ed = part.carrier.edge(e);
      const EdgeId base_e = resolve_base_edge(base, part, e);
      if (base_e == kNoEdge) {
        throw ContractViolation("layer_projections: part carrier edge is not a projection edge");
      }
      builder.add_edge(begin + ed.tail, begin + ed.head, base_e);
    }
    rep_lists[i].reserve(part.carrier.vertex_count());
    for (Vertex v = 0; v < base.vertex_count(); ++v) {
      if (part.rep[v] != kNoVertex) {
        if (part.pi[part.rep[v]] != v) {
          throw ContractViolation("layer_projections: part rep maps to a different base vertex");
        }
        rep_lists[i].emplace_back(v, begin + part.rep[v]);
      }
    }
    // Every present vertex needs a representative (Projection invariant).
    std::vector<char> has_rep(static_cast<size_t>(base.vertex_count()), 0);
    for (const auto& [bv, cv] : rep_lists[i]) has_rep[bv] = 1;
    for (Vertex x = 0; x < part.carrier.vertex_count(); ++x) {
      if (!has_rep[part.pi[x]]) {
        throw ContractViolation("layer_projections: present vertex without representative");
      }
    }
    refs[i] = CarrierBuilder::PartRef{begin, builder.size(), rep_lists[i]};
  }
  std::vector<std::pair<Vertex, Vertex>> merged;
  builder.layer_parts(refs, merged);
  return builder.finish(std::move(merged));
}

}  // namespace negpath
