#pragma once

#include <vector>

#include "negpath/graph.hpp"

namespace negpath {

// Strongly connected components with ids in a topological order of the
// condensation: every edge satisfies component[tail] <= component[head].
struct SccDecomposition {
  std::vector<int32_t> component;           // vertex -> component id
  std::vector<std::vector<Vertex>> members; // id -> vertices, ascending
  int32_t count() const { return static_cast<int32_t>(members.size()); }
};

SccDecomposition scc(const Graph& g);

}  // namespace negpath
