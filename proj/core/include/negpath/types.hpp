// Basic shared types: vertex/edge indices, weights, three-valued distances,
// exact rationals for growth thresholds, and the error hierarchy.
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace negpath {

using Vertex = int32_t;
using EdgeId = int32_t;
using Weight = int64_t;

inline constexpr EdgeId kNoEdge = -1;
inline constexpr Vertex kNoVertex = -1;

// Thrown when a documented precondition is violated by the caller.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Thrown on malformed external input (DIMACS text, JSON files).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A distance value: finite integer, +infinity (unreachable) or -infinity
// (reaches a negative cycle). Finite arithmetic never touches the sentinels;
// the graph-wide overflow guard keeps every reachable distance well inside.
class Dist {
 public:
  constexpr Dist() : v_(kPos) {}

  static constexpr Dist finite(int64_t v) { return Dist(v); }
  static constexpr Dist pos_inf() { return Dist(kPos); }
  static constexpr Dist neg_inf() { return Dist(kNeg); }

  constexpr bool is_finite() const { return v_ != kPos && v_ != kNeg; }
  constexpr bool is_pos_inf() const { return v_ == kPos; }
  constexpr bool is_neg_inf() const { return v_ == kNeg; }

  constexpr int64_t value() const {
    if (!is_finite()) throw ContractViolation("Dist::value on non-finite distance");
    return v_;
  }

  // w-shifted distance; +/-infinity absorb.
  constexpr Dist plus(Weight w) const {
    if (!is_finite()) return *this;
    return Dist(v_ + w);
  }

  friend constexpr bool operator==(Dist a, Dist b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Dist a, Dist b) { return a.v_ != b.v_; }
  // Sentinel encoding makes the natural order correct: -inf < finite < +inf.
  friend constexpr bool operator<(Dist a, Dist b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(Dist a, Dist b) { return a.v_ <= b.v_; }

  std::string str() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    return std::to_string(v_);
  }

 private:
  static constexpr int64_t kPos = std::numeric_limits<int64_t>::max();
  static constexpr int64_t kNeg = std::numeric_limits<int64_t>::min();
  constexpr explicit Dist(int64_t v) : v_(v) {}
  int64_t v_;
};

// Exact nonnegative rational, used for the thin-layer growth slack.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;
};

inline int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  return q - ((a % b != 0 && (a < 0) != (b < 0)) ? 1 : 0);
}

// b > 0; rounds toward +infinity, exact on negatives.
inline int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

inline int64_t log2_ceil(int64_t n) {
  // log2 of max(n,2), rounded up.
  if (n < 2) n = 2;
  int64_t l = 0;
  int64_t p = 1;
  while (p < n) {
    p *= 2;
    ++l;
  }
  return l;
}

}  // namespace negpath
