#include "negpath/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace negpath {

namespace {

// Overflow guard: potentials scale like n*W and layered products like n*x,
// so reject graphs where (n+2)*(W+3) no longer fits comfortably in 60 bits.
void check_magnitude_guard(Vertex n, Weight w_bound) {
  const __int128 prod = (static_cast<__int128>(n) + 2) * (static_cast<__int128>(w_bound) + 3);
  if (prod >= (static_cast<__int128>(1) << 60)) {
    throw ContractViolation("graph magnitude guard: (n+2)*(W+3) >= 2^60 with n=" +
                            std::to_string(n) + " W=" + std::to_string(w_bound));
  }
}

}  // namespace

Graph::Graph(Vertex n, std::vector<Edge> edges, Tables tables)
    : n_(n), edges_(std::move(edges)), has_in_(tables == Tables::out_and_in) {
  if (n_ < 0) throw ContractViolation("negative vertex count");
  if (edges_.size() > static_cast<size_t>(std::numeric_limits<EdgeId>::max())) {
    throw ContractViolation("edge count exceeds index range");
  }
  weight_bound_ = 0;
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_) {
      throw ContractViolation("edge endpoint out of range");
    }
    weight_bound_ = std::max<Weight>(weight_bound_, e.weight < 0 ? -e.weight : e.weight);
  }
  check_magnitude_guard(n_, weight_bound_);

  const EdgeId m = edge_count();
  out_start_.assign(static_cast<size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) ++out_start_[static_cast<size_t>(e.tail) + 1];
  for (Vertex v = 0; v < n_; ++v) out_start_[v + 1] += out_start_[v];
  out_ids_.resize(static_cast<size_t>(m));
  {
    std::vector<int64_t> cursor(out_start_.begin(), out_start_.end() - 1);
    for (EdgeId e = 0; e < m; ++e) out_ids_[static_cast<size_t>(cursor[edges_[e].tail]++)] = e;
  }
  if (has_in_) {
    in_start_.assign(static_cast<size_t>(n_) + 1, 0);
    for (const Edge& e : edges_) ++in_start_[static_cast<size_t>(e.head) + 1];
    for (Vertex v = 0; v < n_; ++v) in_start_[v + 1] += in_start_[v];
    in_ids_.resize(static_cast<size_t>(m));
    std::vector<int64_t> cursor(in_start_.begin(), in_start_.end() - 1);
    for (EdgeId e = 0; e < m; ++e) in_ids_[static_cast<size_t>(cursor[edges_[e].head]++)] = e;
  }
}

std::span<const EdgeId> Graph::in_edges(Vertex v) const {
  if (!has_in_) throw ContractViolation("graph built without in-adjacency tables");
  return {in_ids_.data() + in_start_[v], in_ids_.data() + in_start_[v + 1]};
}

int64_t Graph::deg_in(Vertex v) const {
  if (!has_in_) throw ContractViolation("graph built without in-adjacency tables");
  return in_start_[v + 1] - in_start_[v];
}

namespace {

int64_t parse_int(std::string_view tok, int line_no, const char* what) {
  int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" +
                     std::string(tok) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph load_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int64_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      if (toks.size() != 4 || toks[1] != "sp") {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'p sp <n> <m>'");
      }
      n = parse_int(toks[2], line_no, "vertex count");
      m = parse_int(toks[3], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError("line " + std::to_string(line_no) + ": negative size");
      have_header = true;
      edges.reserve(static_cast<size_t>(m));
      continue;
    }
    if (toks[0] == "a") {
      if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": arc before header");
      if (toks.size() != 4) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'a <u> <v> <w>'");
      }
      const int64_t u = parse_int(toks[1], line_no, "tail");
      const int64_t v = parse_int(toks[2], line_no, "head");
      const int64_t w = parse_int(toks[3], line_no, "weight");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range");
      }
      edges.push_back(Edge{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), w});
      continue;
    }
    throw ParseError("line " + std::to_string(line_no) + ": unknown line kind '" +
                     std::string(toks[0]) + "'");
  }
  if (!have_header) throw ParseError("missing 'p sp' header");
  if (static_cast<int64_t>(edges.size()) != m) {
    throw ParseError("declared " + std::to_string(m) + " arcs, found " +
                     std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<Vertex>(n), std::move(edges));
  } catch (const ContractViolation& e) {
    throw ParseError(std::string("graph rejected: ") + e.what());
  }
}

Graph load_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return load_dimacs(in);
}

void dump_dimacs(const Graph& g, std::ostream& out) {
  out << "p sp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "a " << (e.tail + 1) << ' ' << (e.head + 1) << ' ' << e.weight << '\n';
  }
}

std::string dump_dimacs_string(const Graph& g) {
  std::ostringstream out;
  dump_dimacs(g, out);
  return out.str();
}

Graph truncate_nonneg(const Graph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.weight = std::max<Weight>(0, e.weight);
  return Graph(g.vertex_count(), std::move(edges));
}

Graph apply_potential(const Graph& g, const Potential& phi) {
  if (static_cast<Vertex>(phi.values.size()) != g.vertex_count()) {
    throw ContractViolation("potential not defined on every vertex");
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) {
    const __int128 w = static_cast<__int128>(e.weight) + phi.values[e.tail] - phi.values[e.head];
    if (w > std::numeric_limits<int64_t>::max() || w < std::numeric_limits<int64_t>::min()) {
      throw ContractViolation("potential adjustment overflows");
    }
    e.weight = static_cast<Weight>(w);
  }
  return Graph(g.vertex_count(), std::move(edges));
}

SubgraphResult induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  SubgraphResult r;
  r.old_to_new.assign(static_cast<size_t>(g.vertex_count()), kNoVertex);
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (v < 0 || v >= g.vertex_count()) throw ContractViolation("subgraph vertex out of range");
  }
  r.new_to_old = sorted;
  for (size_t i = 0; i < sorted.size(); ++i) r.old_to_new[sorted[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex t = r.old_to_new[e.tail];
    const Vertex h = r.old_to_new[e.head];
    if (t != kNoVertex && h != kNoVertex) edges.push_back(Edge{t, h, e.weight});
  }
  r.graph = Graph(static_cast<Vertex>(sorted.size()), std::move(edges));
  return r;
}

}  // namespace negpath
