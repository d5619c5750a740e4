// Resumable thin-layer ball growing: Dijkstra restricted to a region,
// advanced one memory access at a time so a forward and a backward grower
// can run in strict alternation. Settling a vertex charges its total degree
// in the top-level graph as one step-group.
#pragma once

#include <span>
#include <vector>

#include "negpath/graph.hpp"

namespace negpath {

enum class GrowDirection { out, in };

// Region membership plus region-local positions, stamped so one scratch pair
// serves a whole recursion.
struct RegionIndex {
  std::span<const int32_t> stamp;
  std::span<const int32_t> pos;
  int32_t epoch = 0;
  int32_t local_of(Vertex v) const { return stamp[v] == epoch ? pos[v] : -1; }
};

class BallGrower {
 public:
  enum class Status { running, done };

  // Non-owning: `region` (sorted ascending) and `index` must outlive the
  // grower. Distances are measured inside g[region]; degree sums use
  // deg_total in g itself.
  BallGrower(const Graph& g, std::span<const Vertex> region, RegionIndex index, Vertex center,
             GrowDirection dir, int64_t radius_step, Rational eps_prime);

  BallGrower(const BallGrower&) = delete;
  BallGrower& operator=(const BallGrower&) = delete;
  BallGrower(BallGrower&&) = default;
  BallGrower& operator=(BallGrower&&) = default;

  // Consumes at most one budget unit; returns done when the stopping rule
  // deg(Ball(u,i*d)) <= (1+eps') * deg(Ball(u,(i-1)*d)) first fires.
  Status step();
  bool done() const { return done_; }
  void run_to_completion();

  // Valid once done:
  int64_t layer_index() const { return stop_i_; }
  std::span<const Vertex> inner_ball() const {
    return {settle_order_.data(), static_cast<size_t>(inner_count_)};
  }
  std::span<const Vertex> outer_ball() const {
    return {settle_order_.data(), static_cast<size_t>(outer_count_)};
  }
  int64_t inner_deg() const { return inner_deg_; }
  int64_t outer_deg() const { return outer_deg_; }
  int64_t consumed_budget() const { return consumed_; }

  // Settled Dijkstra state (the shortest-path tree over the outer ball).
  std::span<const Vertex> settled_order() const { return settle_order_; }
  bool is_settled(Vertex v) const;
  int64_t dist_of(Vertex v) const;
  EdgeId parent_of(Vertex v) const;

 private:
  void advance_control();
  void close_layer();
  void finalize_settle(int32_t local);
  void relax(Vertex v, int64_t base_dist);

  const Graph* g_ = nullptr;
  std::span<const Vertex> region_;
  RegionIndex index_;
  Vertex center_ = 0;
  GrowDirection dir_ = GrowDirection::out;
  int64_t d_ = 0;
  Rational eps_;

  std::vector<int64_t> dist_;
  std::vector<EdgeId> parent_;
  std::vector<char> settled_;
  std::vector<std::pair<int64_t, int32_t>> heap_;  // (dist, local idx) min-heap

  std::vector<Vertex> settle_order_;
  int64_t settled_deg_ = 0;

  int64_t cur_layer_ = 0;
  int64_t layer_limit_ = 0;
  int64_t prev_count_ = 0;
  int64_t prev_deg_ = 0;
  bool have_prev_ = false;

  int64_t pending_charge_ = 0;
  int32_t pending_local_ = -1;
  int64_t consumed_ = 0;

  bool done_ = false;
  int64_t stop_i_ = 0;
  int64_t inner_count_ = 0, outer_count_ = 0;
  int64_t inner_deg_ = 0, outer_deg_ = 0;
};

// Self-contained wrapper owning its region copy and index arrays.
class ThinLayerGrower {
 public:
  ThinLayerGrower(const Graph& g, std::span<const Vertex> region, Vertex center,
                  GrowDirection dir, int64_t radius_step, Rational eps_prime);
  BallGrower& grower() { return *grower_; }

 private:
  std::vector<Vertex> region_;
  std::vector<int32_t> stamp_;
  std::vector<int32_t> pos_;
  std::unique_ptr<BallGrower> grower_;
};

ThinLayerGrower grow_thin_layer(const Graph& g, std::span<const Vertex> region, Vertex center,
                                GrowDirection dir, int64_t radius_step, Rational eps_prime);

}  // namespace negpath
