#include "shiftturan/graph.hpp"

#include <stdexcept>
#include <string>

#include "shiftturan/errors.hpp"

namespace shiftturan {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformed:
      return "malformed";
    case ParseErrorKind::kSelfLoop:
      return "self-loop";
    case ParseErrorKind::kDuplicateEdge:
      return "duplicate edge";
    case ParseErrorKind::kLabelOutOfRange:
      return "label out of range";
  }
  return "unknown";
}

Edge Edge::of(int a, int b) {
  if (a == b) throw ArgumentError("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " outside 0..64");
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (!g.add_edge(e.u, e.v)) {
      throw ArgumentError("duplicate edge {" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + "}");
    }
  }
  return g;
}

Graph Graph::from_adjacency(int n, std::span<const VertexMask> rows) {
  Graph g(n);
  if (rows.size() < static_cast<std::size_t>(n)) {
    throw ArgumentError("adjacency has fewer rows than vertices");
  }
  int degree_sum = 0;
  for (int u = 1; u <= n; ++u) {
    const VertexMask row = rows[u - 1];
    if ((row & label_bit(u)) || (row & ~prefix_mask(n))) {
      throw ArgumentError("adjacency row " + std::to_string(u) + " has a loop or stray bit");
    }
    for (VertexMask rest = row; rest; rest &= rest - 1) {
      if (!(rows[std::countr_zero(rest)] & label_bit(u))) {
        throw ArgumentError("adjacency is not symmetric at vertex " + std::to_string(u));
      }
    }
    g.adj_[u - 1] = row;
    degree_sum += std::popcount(row);
  }
  g.m_ = degree_sum / 2;
  return g;
}

void Graph::check_label(int v) const {
  if (v < 1 || v > n_) {
    throw ArgumentError("vertex label " + std::to_string(v) + " outside 1.." +
                        std::to_string(n_));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_label(u);
  check_label(v);
  return (adj_[u - 1] & label_bit(v)) != 0;
}

bool Graph::add_edge(int u, int v) {
  check_label(u);
  check_label(v);
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
  if (adj_[u - 1] & label_bit(v)) return false;
  adj_[u - 1] |= label_bit(v);
  adj_[v - 1] |= label_bit(u);
  ++m_;
  return true;
}

bool Graph::remove_edge(int u, int v) {
  check_label(u);
  check_label(v);
  if (!(adj_[u - 1] & label_bit(v))) return false;
  adj_[u - 1] &= ~label_bit(v);
  adj_[v - 1] &= ~label_bit(u);
  --m_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 1; u <= n_; ++u) {
    VertexMask higher = adj_[u - 1] & ~prefix_mask(u);
    while (higher) {
      int v = std::countr_zero(higher) + 1;
      higher &= higher - 1;
      out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::is_subgraph_of(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v) {
    if (adj_[v] & ~other.adj_[v]) return false;
  }
  return true;
}

void Graph::check_invariants() const {
  int degree_sum = 0;
  for (int u = 1; u <= n_; ++u) {
    VertexMask row = adj_[u - 1];
    if (row & label_bit(u)) throw std::logic_error("self-loop in adjacency");
    if (row & ~prefix_mask(n_)) throw std::logic_error("neighbor beyond n");
    degree_sum += std::popcount(row);
    for (VertexMask rest = row; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest) + 1;
      if (!(adj_[v - 1] & label_bit(u))) {
        throw std::logic_error("asymmetric adjacency");
      }
    }
  }
  for (int v = n_; v < kMaxVertices; ++v) {
    if (adj_[v]) throw std::logic_error("adjacency beyond n");
  }
  if (degree_sum != 2 * m_) throw std::logic_error("stale edge count");
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && m_ == other.m_ && adj_ == other.adj_;
}

BipartiteGraph::BipartiteGraph(int nx, int ny) : nx_(nx), ny_(ny) {
  if (nx < 0 || ny < 0 || nx > kMaxVertices || ny > kMaxVertices) {
    throw CapacityError("bipartite part sizes " + std::to_string(nx) + "," +
                        std::to_string(ny) + " outside 0..64");
  }
}

void BipartiteGraph::check_labels(int x, int y) const {
  if (x < 1 || x > nx_ || y < 1 || y > ny_) {
    throw ArgumentError("bipartite edge (" + std::to_string(x) + "," +
                        std::to_string(y) + ") outside parts");
  }
}

int BipartiteGraph::edge_count() const {
  int m = 0;
  for (int x = 0; x < nx_; ++x) m += std::popcount(rows_[x]);
  return m;
}

bool BipartiteGraph::has_edge(int x, int y) const {
  check_labels(x, y);
  return (rows_[x - 1] & label_bit(y)) != 0;
}

bool BipartiteGraph::add_edge(int x, int y) {
  check_labels(x, y);
  if (rows_[x - 1] & label_bit(y)) return false;
  rows_[x - 1] |= label_bit(y);
  return true;
}

VertexMask BipartiteGraph::column(int y) const {
  VertexMask col = 0;
  for (int x = 1; x <= nx_; ++x) {
    if (rows_[x - 1] & label_bit(y)) col |= label_bit(x);
  }
  return col;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (int x = 1; x <= nx_; ++x) {
    for (VertexMask r = rows_[x - 1]; r; r &= r - 1) {
      out.push_back({x, std::countr_zero(r) + 1});
    }
  }
  return out;
}

bool BipartiteGraph::is_subgraph_of(const BipartiteGraph& other) const {
  if (nx_ != other.nx_ || ny_ != other.ny_) return false;
  for (int x = 0; x < nx_; ++x) {
    if (rows_[x] & ~other.rows_[x]) return false;
  }
  return true;
}

Graph BipartiteGraph::as_graph() const {
  if (nx_ + ny_ > kMaxVertices) {
    throw CapacityError("bipartite graph too large for a general-graph view");
  }
  Graph g(nx_ + ny_);
  for (const Edge& e : edges()) g.add_edge(e.u, nx_ + e.v);
  return g;
}

bool BipartiteGraph::operator==(const BipartiteGraph& other) const {
  return nx_ == other.nx_ && ny_ == other.ny_ && rows_ == other.rows_;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph matching_graph(int k) {
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i + 1, 2 * i + 2);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 + n2 > kMaxVertices) {
    throw CapacityError("join of orders " + std::to_string(n1) + " and " +
                        std::to_string(n2) + " exceeds 64 vertices");
  }
  Graph g(n1 + n2);
  for (const Edge& e : g1.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : g2.edges()) g.add_edge(n1 + e.u, n1 + e.v);
  for (int u = 1; u <= n1; ++u) {
    for (int v = 1; v <= n2; ++v) g.add_edge(u, n1 + v);
  }
  return g;
}

Graph construct_H(int n, int k, int l) {
  if (k < 0 || l < k + 1 || l > 2 * k + 1 || n < l) {
    throw RangeError("H(n,k,l) needs k+1 <= l <= 2k+1 and l <= n; got n=" +
                     std::to_string(n) + " k=" + std::to_string(k) +
                     " l=" + std::to_string(l));
  }
  Graph g(n);
  for (int u = 1; u <= l; ++u) {
    for (int v = u + 1; v <= l; ++v) g.add_edge(u, v);
  }
  const int core = 2 * k + 1 - l;
  for (int u = 1; u <= core; ++u) {
    for (int v = l + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

BipartiteGraph complete_bipartite(int nx, int ny) {
  BipartiteGraph g(nx, ny);
  for (int x = 1; x <= nx; ++x) {
    for (int y = 1; y <= ny; ++y) g.add_edge(x, y);
  }
  return g;
}

}  // namespace shiftturan
