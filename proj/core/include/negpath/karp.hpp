#pragma once

#include <vector>

#include "negpath/graph.hpp"

namespace negpath {

// Minimum cycle mean as an exact rational plus a witness cycle; `acyclic`
// when the graph has no cycle at all. Intended for desk-scale audits
// (O(n*m) time, O(n^2) space per SCC).
struct MinMeanCycle {
  bool acyclic = true;
  int64_t num = 0;  // mean = num/den, reduced, den > 0
  int64_t den = 1;
  std::vector<Vertex> cycle;
};

MinMeanCycle karp_min_mean_cycle(const Graph& g);

// Exact comparison num1/den1 < num2/den2 with positive denominators.
bool rational_less(int64_t num1, int64_t den1, int64_t num2, int64_t den2);

}  // namespace negpath
