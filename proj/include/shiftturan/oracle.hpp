#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "shiftturan/bigcount.hpp"
#include "shiftturan/extremal.hpp"
#include "shiftturan/graph.hpp"
#include "shiftturan/report.hpp"

namespace shiftturan {

/// Largest order for exhaustive labeled-graph enumeration (2^21 graphs).
inline constexpr int kMaxOracleOrder = 7;
/// Largest nx * ny for exhaustive bipartite enumeration.
inline constexpr int kMaxOracleBipartiteCells = 20;

/// Pattern counted by the general-graph oracle.
struct Pattern {
  enum class Kind { kClique, kStar };

  Kind kind = Kind::kClique;
  int s = 2;
  int t = 0;

  static Pattern clique(int s) { return {Kind::kClique, s, 0}; }
  static Pattern star(int s, int t) { return {Kind::kStar, s, t}; }

  BigCount count(const Graph& g) const;
  std::string name() const;
};

struct Witness {
  Graph graph;
  BigCount value = 0;
  ExtremalParams params;
};

struct BipartiteWitness {
  BipartiteGraph graph;
  BigCount value = 0;
  ExtremalParams params;
};

struct EnumerationOptions {
  int jobs = 1;
  /// Skip a graph as soon as a greedy matching already exceeds k.
  bool prune = true;
};

// Labeled graphs on [n] are indexed by masks over the C(n,2) edge slots,
// ordered (1,2), (1,3), ..., (1,n), (2,3), ...

int edge_slot_count(int n);
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask_of(const Graph& g);

/// Bipartite graphs are indexed by masks over nx*ny cells, cell
/// (x-1)*ny + (y-1) holding edge (x, y).
BipartiteGraph bipartite_from_mask(int nx, int ny, std::uint64_t mask);

/// Calls visit(mask, graph) for every labeled graph on [n] with ν <= k, in
/// increasing mask order. Throws CapacityError when n > 7.
void for_each_free_graph(int n, int k, bool prune,
                         const std::function<void(std::uint64_t, const Graph&)>& visit);

/// Maximum pattern count over all graphs on [n] with ν <= k. Ties go to the
/// smallest edge mask, so the witness does not depend on `jobs`.
/// Throws CapacityError when n > 7.
Witness max_over_free(int n, int k, const Pattern& pattern, const EnumerationOptions& options = {});

/// Maximum count_bip over bipartite graphs with parts nx, ny and ν <= k.
/// Throws CapacityError when nx * ny > 20.
BipartiteWitness max_over_free_bip(int nx, int ny, int k, int s, int t,
                                   const EnumerationOptions& options = {});

/// G(n, p) with edges drawn in slot order from the top 53 bits of
/// successive std::mt19937_64 outputs, so the stream is reproducible on any
/// platform.
Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);
BipartiteGraph random_bipartite(int nx, int ny, double edge_probability, std::mt19937_64& rng);

/// Either every labeled graph on [n], or `count` seeded random graphs.
struct GraphSample {
  bool exhaustive = true;
  int n = 0;
  std::uint64_t count = 0;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;

  static GraphSample all(int n) { return {true, n, 0, 0.5, 0}; }
  static GraphSample random(std::uint64_t count, int n, double p, std::uint64_t seed) {
    return {false, n, count, p, seed};
  }

  /// Calls visit for every graph in the sample, in a fixed order.
  void for_each(const std::function<void(const Graph&)>& visit) const;
};

struct BipartiteSample {
  bool exhaustive = true;
  int nx = 0;
  int ny = 0;
  std::uint64_t count = 0;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;

  static BipartiteSample all(int nx, int ny) { return {true, nx, ny, 0, 0.5, 0}; }
  static BipartiteSample random(std::uint64_t count, int nx, int ny, double p,
                                std::uint64_t seed) {
    return {false, nx, ny, count, p, seed};
  }

  void for_each(const std::function<void(const BipartiteGraph&)>& visit) const;
};

struct ShiftLemmaChecks {
  bool matching = true;  ///< ν(S_ij(G)) <= ν(G)
  bool counts = true;    ///< K_s and K*_{s,t} counts do not drop
  int max_s = 3;
  int max_t = 3;
};

/// For every sampled G and every i < j: edge count is preserved and the
/// selected monotonicity properties hold. Exhaustive samples need n <= 6.
Report verify_shift_lemmas(const GraphSample& sample, const ShiftLemmaChecks& checks = {});

/// Every shifted graph on [n] with ν = k is a subgraph of some H(n,k,l).
/// Needs 2k+1 <= n <= 7.
Report verify_shifted_structure(int n, int k);

/// Degree lemma over every graph on [n] and every non-edge uv, with
/// k = ν(G+uv) - 1. Needs n <= 7.
Report verify_bondy_chvatal(int n);

/// For every bipartite graph with parts nx, ny and ν = k: the König cover T
/// has size k and covers every edge, G ⊆ G*, and count_bip(G) <= count_bip(G*)
/// for each (s, t). When nx == ny, count_bip(G*) also matches bip_fst (s = t)
/// or bip_g (s != t) at x = |X ∩ T|. Needs nx * ny <= 20.
Report verify_koenig_gstar(int nx, int ny, int k,
                           const std::vector<std::pair<int, int>>& patterns);

/// |koenig_cover| = |bip_max_matching| and the cover meets every edge.
Report verify_koenig_duality(const BipartiteSample& sample);

/// The G* of the bipartite argument: cover X-vertices joined to all of Y and
/// cover Y-vertices joined to all of X.
BipartiteGraph cover_completion(int nx, int ny, VertexMask cover_x, VertexMask cover_y);

// Oracle maximum against the closed form.
Report verify_theorem_edges(int n, int k, const EnumerationOptions& options = {});
Report verify_theorem_clique(int n, int k, int s, const EnumerationOptions& options = {});
Report verify_theorem_star(int n, int k, int s, int t, const EnumerationOptions& options = {});
Report verify_theorem_bip(int n, int k, int s, int t, const EnumerationOptions& options = {});

}  // namespace shiftturan
