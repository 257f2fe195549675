#pragma once

#include <vector>

#include "shiftturan/graph.hpp"

namespace shiftturan {

/// Largest order accepted by matching_number.
inline constexpr int kMaxExactMatchingOrder = 28;

/// ν(G), exact. Memoized branching on the mask of still-unmatched vertices:
/// the lowest live vertex is either left unmatched or matched to one of its
/// live neighbors. Throws CapacityError when n > 28.
int matching_number(const Graph& g);

/// Size of a greedy maximal matching; a lower bound on ν(G).
int greedy_matching_size(const Graph& g);

/// Maximum matching as (x, y) pairs. Among maximum matchings, returns the
/// lexicographically least sorted edge list.
std::vector<Edge> bip_max_matching(const BipartiteGraph& g);

/// Size of a maximum matching.
int bip_matching_number(const BipartiteGraph& g);

struct VertexCover {
  VertexMask x = 0;  ///< covered X labels
  VertexMask y = 0;  ///< covered Y labels

  int size() const;
  bool covers(const BipartiteGraph& g) const;
  bool operator==(const VertexCover&) const = default;
};

/// König cover: with Z the vertices reachable from unmatched X vertices by
/// alternating paths, returns (X \ Z) ∪ (Y ∩ Z). Its size equals ν.
VertexCover koenig_cover(const BipartiteGraph& g);

/// Checks one instance of the degree lemma: it is false exactly when
/// ν(G+uv) = k+1, d(u)+d(v) >= 2k+1 and ν(G) != k+1. Degrees are taken in G.
/// Throws ArgumentError if uv is already an edge.
bool bondy_chvatal_holds(const Graph& g, int u, int v, int k);

}  // namespace shiftturan
