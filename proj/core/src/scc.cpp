#include "negpath/scc.hpp"

#include <algorithm>

namespace negpath {

// Tarjan with an explicit DFS stack; survives chains of length 10^6+.
SccDecomposition scc(const Graph& g) {
  const Vertex n = g.vertex_count();
  SccDecomposition out;
  out.component.assign(static_cast<size_t>(n), -1);

  std::vector<int32_t> index(static_cast<size_t>(n), -1);
  std::vector<int32_t> lowlink(static_cast<size_t>(n), -1);
  std::vector<char> on_stack(static_cast<size_t>(n), 0);
  std::vector<Vertex> stack;
  stack.reserve(static_cast<size_t>(n));

  struct Frame {
    Vertex v;
    size_t next;  // next position in out_edges(v)
  };
  std::vector<Frame> dfs;
  int32_t counter = 0;
  int32_t comp_count = 0;
  std::vector<std::vector<Vertex>> comps;  // emitted in reverse topological order

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    dfs.push_back(Frame{root, 0});
    index[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!dfs.empty()) {
      Frame& f = dfs.back();
      const auto out_e = g.out_edges(f.v);
      if (f.next < out_e.size()) {
        const Vertex w = g.edge(out_e[f.next++]).head;
        if (index[w] == -1) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          dfs.push_back(Frame{w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      dfs.pop_back();
      if (!dfs.empty()) lowlink[dfs.back().v] = std::min(lowlink[dfs.back().v], lowlink[v]);
      if (lowlink[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
        ++comp_count;
      }
    }
  }

  // Tarjan emits components in reverse topological order.
  std::reverse(comps.begin(), comps.end());
  for (int32_t c = 0; c < comp_count; ++c) {
    for (Vertex v : comps[c]) out.component[v] = c;
  }
  out.members = std::move(comps);
  return out;
}

}  // namespace negpath
