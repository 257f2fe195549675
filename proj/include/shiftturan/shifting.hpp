#pragma once

#include <cstdint>

#include "shiftturan/graph.hpp"

namespace shiftturan {

/// S_ij applied to a single edge of g: replaces j by i when j ∈ e, i ∉ e and
/// the image is not already an edge of g; otherwise returns e.
/// Throws ArgumentError unless 1 <= i < j <= n and e ∈ E(g).
Edge shift_edge(const Graph& g, int i, int j, Edge e);

/// S_ij(G). Every edge is mapped against the original edge set, so the
/// result has the same edge count and differs only at i and j.
Graph shift_graph(const Graph& g, int i, int j);

/// Neighbors x of j that S_ij moves to i (x ≠ i, x ∉ N(i)).
VertexMask shiftable_neighbors(const Graph& g, int i, int j);

/// Applies S_ij for (i, j) in lexicographic order, repeating whole sweeps
/// until a sweep changes nothing. The result is shifted.
Graph compress(const Graph& g);

/// True iff S_ij(g) = g for every i < j.
bool is_shifted(const Graph& g);

/// Σ_{uv ∈ E} (u + v). Each effective shift lowers it by (j - i) per moved
/// edge, which bounds the number of effective shifts in compress.
std::int64_t label_weight(const Graph& g);

}  // namespace shiftturan
