#include "negpath/ball_grower.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <string>

namespace negpath {

namespace {
constexpr int64_t kUnreached = std::numeric_limits<int64_t>::max();
}

BallGrower::BallGrower(const Graph& g, std::span<const Vertex> region, RegionIndex index,
                       Vertex center, GrowDirection dir, int64_t radius_step, Rational eps_prime)
    : g_(&g),
      region_(region),
      index_(index),
      center_(center),
      dir_(dir),
      d_(radius_step),
      eps_(eps_prime) {
  if (d_ < 0) throw ContractViolation("ball growing: negative radius step");
  if (eps_.den <= 0 || eps_.num < 0) throw ContractViolation("ball growing: bad eps'");
  const int32_t c = index_.local_of(center_);
  if (c < 0) throw ContractViolation("ball growing: center not in region");
  dist_.assign(region_.size(), kUnreached);
  parent_.assign(region_.size(), kNoEdge);
  settled_.assign(region_.size(), 0);
  dist_[c] = 0;
  heap_.push_back({0, c});
}

BallGrower::Status BallGrower::step() {
  while (!done_) {
    if (pending_charge_ > 0) {
      --pending_charge_;
      ++consumed_;
      if (pending_charge_ == 0) {
        const int32_t local = pending_local_;
        pending_local_ = -1;
        finalize_settle(local);
      }
      return done_ ? Status::done : Status::running;
    }
    advance_control();
  }
  return Status::done;
}

void BallGrower::run_to_completion() {
  while (step() == Status::running) {
  }
}

void BallGrower::advance_control() {
  // Drop stale heap entries.
  while (!heap_.empty() && settled_[heap_.front().second]) {
    std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
    heap_.pop_back();
  }
  if (heap_.empty()) {
    // Ball exhausted: closing layers now only repeats the same ball, so the
    // stopping rule fires at the latest on the second close.
    close_layer();
    return;
  }
  if (heap_.front().first > layer_limit_) {
    close_layer();
    return;
  }
  std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
  const auto [dv, local] = heap_.back();
  heap_.pop_back();
  const Vertex v = region_[local];
  settled_[local] = 1;
  settle_order_.push_back(v);
  settled_deg_ += g_->deg_total(v);
  const int64_t charge = g_->deg_total(v);
  if (charge == 0) {
    finalize_settle(local);
  } else {
    pending_local_ = local;
    pending_charge_ = charge;
  }
}

void BallGrower::finalize_settle(int32_t local) {
  relax(region_[local], dist_[local]);
}

void BallGrower::relax(Vertex v, int64_t base_dist) {
  const auto ids = dir_ == GrowDirection::out ? g_->out_edges(v) : g_->in_edges(v);
  for (EdgeId e : ids) {
    const Edge& ed = g_->edge(e);
    const Vertex other = dir_ == GrowDirection::out ? ed.head : ed.tail;
    const int32_t lo = index_.local_of(other);
    if (lo < 0 || settled_[lo]) continue;
    if (ed.weight < 0) {
      throw ContractViolation("ball growing: negative weight on edge " + std::to_string(e));
    }
    const int64_t nd = base_dist + ed.weight;
    if (nd < dist_[lo]) {
      dist_[lo] = nd;
      parent_[lo] = e;
      heap_.push_back({nd, lo});
      std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
    }
  }
}

void BallGrower::close_layer() {
  const int64_t count = static_cast<int64_t>(settle_order_.size());
  const int64_t deg = settled_deg_;
  if (cur_layer_ >= 1) {
    assert(have_prev_);
    // deg <= (1 + num/den) * prev_deg, exactly.
    const __int128 lhs = static_cast<__int128>(deg) * eps_.den;
    const __int128 rhs = static_cast<__int128>(eps_.den + eps_.num) * prev_deg_;
    if (lhs <= rhs) {
      done_ = true;
      stop_i_ = cur_layer_;
      inner_count_ = prev_count_;
      inner_deg_ = prev_deg_;
      outer_count_ = count;
      outer_deg_ = deg;
      return;
    }
  }
  prev_count_ = count;
  prev_deg_ = deg;
  have_prev_ = true;
  ++cur_layer_;
  if (cur_layer_ > (kUnreached / (d_ == 0 ? 1 : d_))) {
    throw ContractViolation("ball growing: layer index overflow");
  }
  layer_limit_ = cur_layer_ * d_;
}

bool BallGrower::is_settled(Vertex v) const {
  const int32_t lo = index_.local_of(v);
  return lo >= 0 && settled_[lo];
}

int64_t BallGrower::dist_of(Vertex v) const {
  const int32_t lo = index_.local_of(v);
  if (lo < 0 || !settled_[lo]) throw ContractViolation("dist_of: vertex not settled");
  return dist_[lo];
}

EdgeId BallGrower::parent_of(Vertex v) const {
  const int32_t lo = index_.local_of(v);
  if (lo < 0 || !settled_[lo]) throw ContractViolation("parent_of: vertex not settled");
  return parent_[lo];
}

ThinLayerGrower::ThinLayerGrower(const Graph& g, std::span<const Vertex> region, Vertex center,
                                 GrowDirection dir, int64_t radius_step, Rational eps_prime)
    : region_(region.begin(), region.end()),
      stamp_(static_cast<size_t>(g.vertex_count()), 0),
      pos_(static_cast<size_t>(g.vertex_count()), -1) {
  std::sort(region_.begin(), region_.end());
  region_.erase(std::unique(region_.begin(), region_.end()), region_.end());
  for (size_t i = 0; i < region_.size(); ++i) {
    const Vertex v = region_[i];
    if (v < 0 || v >= g.vertex_count()) throw ContractViolation("region vertex out of range");
    stamp_[v] = 1;
    pos_[v] = static_cast<int32_t>(i);
  }
  grower_ = std::make_unique<BallGrower>(
      g, std::span<const Vertex>(region_), RegionIndex{stamp_, pos_, 1}, center, dir, radius_step,
      eps_prime);
}

ThinLayerGrower grow_thin_layer(const Graph& g, std::span<const Vertex> region, Vertex center,
                                GrowDirection dir, int64_t radius_step, Rational eps_prime) {
  return ThinLayerGrower(g, region, center, dir, radius_step, eps_prime);
}

}  // namespace negpath
