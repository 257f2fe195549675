#pragma once

#include "shiftturan/bigcount.hpp"
#include "shiftturan/graph.hpp"

namespace shiftturan {

// Copies are counted as subgraphs, not induced subgraphs.

/// Number of s-subsets of V(G) inducing a clique. Requires s >= 1.
BigCount count_cliques(const Graph& g, int s);

/// Number of ordered pairs (C1, C2) of disjoint vertex sets with |C1| = s,
/// |C2| = t, C1 a clique and every C1-C2 pair an edge. For t >= 2 this is
/// the number of copies of K*_{s,t}; for t = 1 it counts each K_{s+1}
/// s+1 times. Requires s, t >= 1.
BigCount count_star(const Graph& g, int s, int t);

/// Copies of K_{s,t} in a bipartite host. For s != t both orientations
/// (s-side in X, and s-side in Y) are summed; for s == t only one is.
/// Requires s, t >= 1.
BigCount count_bip(const BipartiteGraph& g, int s, int t);

/// Pairs (S, T), S ⊂ X with |S| = s, T ⊂ Y with |T| = t, complete between.
BigCount count_bip_oriented(const BipartiteGraph& g, int s, int t);

}  // namespace shiftturan
