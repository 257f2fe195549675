#include "shiftturan/shifting.hpp"

#include <bit>
#include <string>

#include "shiftturan/errors.hpp"

namespace shiftturan {
namespace {

void check_pair(const Graph& g, int i, int j) {
  if (i < 1 || j > g.order() || i >= j) {
    throw ArgumentError("shift needs 1 <= i < j <= n; got i=" + std::to_string(i) +
                        " j=" + std::to_string(j) + " n=" + std::to_string(g.order()));
  }
}

}  // namespace

VertexMask shiftable_neighbors(const Graph& g, int i, int j) {
  return g.neighbors(j) & ~g.neighbors(i) & ~label_bit(i);
}

Edge shift_edge(const Graph& g, int i, int j, Edge e) {
  check_pair(g, i, j);
  if (e.u < 1 || e.v > g.order() || e.u >= e.v || !g.has_edge(e)) {
    throw ArgumentError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        "} is not in the graph");
  }
  const bool has_j = e.u == j || e.v == j;
  const bool has_i = e.u == i || e.v == i;
  if (!has_j || has_i) return e;
  const int other = e.u == j ? e.v : e.u;
  if (g.has_edge(i, other)) return e;
  return Edge::of(i, other);
}

Graph shift_graph(const Graph& g, int i, int j) {
  check_pair(g, i, j);
  Graph out = g;
  for (VertexMask moving = shiftable_neighbors(g, i, j); moving; moving &= moving - 1) {
    const int x = std::countr_zero(moving) + 1;
    out.remove_edge(j, x);
    out.add_edge(i, x);
  }
  return out;
}

Graph compress(const Graph& g) {
  Graph current = g;
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (shiftable_neighbors(current, i, j) != 0) {
          current = shift_graph(current, i, j);
          changed = true;
        }
      }
    }
  }
  return current;
}

bool is_shifted(const Graph& g) {
  const int n = g.order();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (shiftable_neighbors(g, i, j) != 0) return false;
    }
  }
  return true;
}

std::int64_t label_weight(const Graph& g) {
  std::int64_t w = 0;
  for (const Edge& e : g.edges()) w += e.u + e.v;
  return w;
}

}  // namespace shiftturan
