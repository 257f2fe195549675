#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace shiftturan {

using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Mask bit for a 1-based vertex label. Bit v-1 represents vertex v.
constexpr VertexMask label_bit(int v) { return VertexMask{1} << (v - 1); }

/// Mask of the labels 1..n.
constexpr VertexMask prefix_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Undirected edge {u, v}, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  /// Builds the edge in normalized order; throws ArgumentError on u == v.
  static Edge of(int a, int b);

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on the labels 1..n, n <= 64, one adjacency word
/// per vertex.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph E_n. Throws CapacityError when n > 64.
  explicit Graph(int n);

  /// Throws ArgumentError for self-loops, out-of-range labels and repeats.
  static Graph from_edges(int n, std::span<const Edge> edges);
  /// Row v-1 of `rows` is the neighbor mask of vertex v. Throws
  /// ArgumentError if the rows are asymmetric, loop or exceed n.
  static Graph from_adjacency(int n, std::span<const VertexMask> rows);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  VertexMask neighbors(int v) const { return adj_[v - 1]; }
  int degree(int v) const { return std::popcount(adj_[v - 1]); }
  VertexMask vertices() const { return prefix_mask(n_); }

  /// Adds {u, v}. Returns false if the edge was already present.
  bool add_edge(int u, int v);
  /// Removes {u, v}. Returns false if the edge was absent.
  bool remove_edge(int u, int v);

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Same vertex count and every edge of *this present in other.
  bool is_subgraph_of(const Graph& other) const;

  /// Throws std::logic_error if symmetry, loop-freeness or the cached edge
  /// count is broken.
  void check_invariants() const;

  bool operator==(const Graph& other) const;

 private:
  void check_label(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

/// Bipartite graph with parts X = 1..nx and Y = 1..ny. Only X-Y edges are
/// representable.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int nx, int ny);

  int x_size() const { return nx_; }
  int y_size() const { return ny_; }
  int edge_count() const;

  bool has_edge(int x, int y) const;
  bool add_edge(int x, int y);
  /// Y-neighbors of X-vertex x as a mask over Y labels.
  VertexMask row(int x) const { return rows_[x - 1]; }
  /// X-neighbors of Y-vertex y as a mask over X labels.
  VertexMask column(int y) const;

  /// Edges as (x, y) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_subgraph_of(const BipartiteGraph& other) const;

  /// General-graph view: X keeps labels 1..nx, Y label j becomes nx + j.
  Graph as_graph() const;

  bool operator==(const BipartiteGraph& other) const;

 private:
  void check_labels(int x, int y) const;

  int nx_ = 0;
  int ny_ = 0;
  std::array<VertexMask, kMaxVertices> rows_{};
};

Graph complete_graph(int n);
Graph empty_graph(int n);
/// k pairwise disjoint edges {1,2}, {3,4}, ... on 2k vertices.
Graph matching_graph(int k);
/// G1 ∨ G2; labels of g2 are shifted by g1.order().
Graph join(const Graph& g1, const Graph& g2);
/// Clique on [l] plus every edge between [2k+1-l] and [n] \ [l].
/// Requires k+1 <= l <= 2k+1 and l <= n <= 64; throws RangeError otherwise.
Graph construct_H(int n, int k, int l);

BipartiteGraph complete_bipartite(int nx, int ny);

}  // namespace shiftturan
