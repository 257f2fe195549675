#pragma once

// Brute-force reference implementations. Each one deliberately takes a
// different route from the library code it is compared against.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "shiftturan/bigcount.hpp"
#include "shiftturan/graph.hpp"

namespace naive {

using shiftturan::BigCount;
using shiftturan::BipartiteGraph;
using shiftturan::Edge;
using shiftturan::Graph;

/// Pascal's rule, with 0 outside 0 <= r <= n.
inline BigCount binom(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  std::vector<BigCount> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (long long i = 1; i <= n; ++i) {
    for (long long j = i; j >= 1; --j) row[j] += row[j - 1];
  }
  return row[r];
}

inline bool is_clique(const Graph& g, std::uint64_t set) {
  for (int u = 1; u <= g.order(); ++u) {
    if (!(set >> (u - 1) & 1)) continue;
    for (int v = u + 1; v <= g.order(); ++v) {
      if ((set >> (v - 1) & 1) && !g.has_edge(u, v)) return false;
    }
  }
  return true;
}

inline BigCount count_cliques(const Graph& g, int s) {
  BigCount total = 0;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << g.order()); ++set) {
    if (std::popcount(set) == s && is_clique(g, set)) ++total;
  }
  return total;
}

/// Assigns each vertex to C1, C2 or neither and checks the pattern.
inline BigCount count_star(const Graph& g, int s, int t) {
  const int n = g.order();
  BigCount total = 0;
  const std::uint64_t all = std::uint64_t{1} << n;
  for (std::uint64_t c1 = 0; c1 < all; ++c1) {
    if (std::popcount(c1) != s || !is_clique(g, c1)) continue;
    for (std::uint64_t c2 = 0; c2 < all; ++c2) {
      if (std::popcount(c2) != t || (c1 & c2)) continue;
      bool joined = true;
      for (int u = 1; u <= n && joined; ++u) {
        if (!(c1 >> (u - 1) & 1)) continue;
        for (int v = 1; v <= n; ++v) {
          if ((c2 >> (v - 1) & 1) && !g.has_edge(u, v)) {
            joined = false;
            break;
          }
        }
      }
      if (joined) ++total;
    }
  }
  return total;
}

inline BigCount count_bip_oriented(const BipartiteGraph& g, int s, int t) {
  BigCount total = 0;
  for (std::uint64_t xs = 0; xs < (std::uint64_t{1} << g.x_size()); ++xs) {
    if (std::popcount(xs) != s) continue;
    for (std::uint64_t ys = 0; ys < (std::uint64_t{1} << g.y_size()); ++ys) {
      if (std::popcount(ys) != t) continue;
      bool complete = true;
      for (int x = 1; x <= g.x_size() && complete; ++x) {
        if (!(xs >> (x - 1) & 1)) continue;
        for (int y = 1; y <= g.y_size(); ++y) {
          if ((ys >> (y - 1) & 1) && !g.has_edge(x, y)) complete = false;
        }
      }
      if (complete) ++total;
    }
  }
  return total;
}

inline BigCount count_bip(const BipartiteGraph& g, int s, int t) {
  return s == t ? naive::count_bip_oriented(g, s, t)
                : naive::count_bip_oriented(g, s, t) + naive::count_bip_oriented(g, t, s);
}

namespace detail {
inline int max_disjoint(const std::vector<Edge>& edges, std::size_t from, std::uint64_t used) {
  int best = 0;
  for (std::size_t i = from; i < edges.size(); ++i) {
    const std::uint64_t bits = (std::uint64_t{1} << (edges[i].u - 1)) |
                               (std::uint64_t{1} << (edges[i].v - 1));
    if (used & bits) continue;
    best = std::max(best, 1 + max_disjoint(edges, i + 1, used | bits));
  }
  return best;
}
}  // namespace detail

/// Largest set of pairwise disjoint edges, by trying edge subsets.
inline int matching_number(const Graph& g) { return detail::max_disjoint(g.edges(), 0, 0); }

/// Smallest vertex set meeting every edge, over all subsets of X ∪ Y.
inline int min_vertex_cover(const BipartiteGraph& g) {
  const int nx = g.x_size();
  const int ny = g.y_size();
  int best = nx + ny;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << (nx + ny)); ++set) {
    if (std::popcount(set) >= best) continue;
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!(set >> (e.u - 1) & 1) && !(set >> (nx + e.v - 1) & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::popcount(set);
  }
  return best;
}

/// Hereditary form of shiftedness: {x,y} ∈ E and x' < x, x' != y imply {x',y} ∈ E.
inline bool is_shifted(const Graph& g) {
  for (const Edge& e : g.edges()) {
    for (int side = 0; side < 2; ++side) {
      const int x = side == 0 ? e.u : e.v;
      const int y = side == 0 ? e.v : e.u;
      for (int xp = 1; xp < x; ++xp) {
        if (xp != y && !g.has_edge(xp, y)) return false;
      }
    }
  }
  return true;
}

/// Backtracking isomorphism test with degree filtering.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> taken(static_cast<std::size_t>(n) + 1, false);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v > n) return true;
    for (int w = 1; w <= n; ++w) {
      if (taken[w] || a.degree(v) != b.degree(w)) continue;
      bool consistent = true;
      for (int u = 1; u < v && consistent; ++u) {
        consistent = a.has_edge(u, v) == b.has_edge(image[u], w);
      }
      if (!consistent) continue;
      image[v] = w;
      taken[w] = true;
      if (self(self, v + 1)) return true;
      taken[w] = false;
    }
    return false;
  };
  return extend(extend, 1);
}

}  // namespace naive
