#include <doctest.h>

#include <algorithm>
#include <random>

#include "shiftturan/errors.hpp"
#include "shiftturan/matching.hpp"
#include "shiftturan/oracle.hpp"
#include "support/naive.hpp"

using namespace shiftturan;

namespace {

// Lexicographically least maximum matching, by listing every matching.
std::vector<Edge> least_maximum_matching(const BipartiteGraph& g) {
  const std::vector<Edge> edges = g.edges();
  std::vector<Edge> best;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << edges.size()); ++set) {
    std::vector<Edge> chosen;
    VertexMask xs = 0;
    VertexMask ys = 0;
    bool disjoint = true;
    for (std::size_t i = 0; i < edges.size() && disjoint; ++i) {
      if (!(set >> i & 1)) continue;
      if ((xs & label_bit(edges[i].u)) || (ys & label_bit(edges[i].v))) disjoint = false;
      xs |= label_bit(edges[i].u);
      ys |= label_bit(edges[i].v);
      chosen.push_back(edges[i]);
    }
    if (!disjoint) continue;
    if (chosen.size() > best.size() || (chosen.size() == best.size() && chosen < best)) {
      best = chosen;
    }
  }
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("matching");

TEST_CASE("matching number examples") {
  CHECK(matching_number(complete_graph(5)) == 2);
  CHECK(matching_number(construct_H(7, 2, 3)) == 2);
  for (int k = 0; k <= 14; ++k) CHECK(matching_number(matching_graph(k)) == k);
  CHECK(matching_number(empty_graph(0)) == 0);
  CHECK_THROWS_AS(matching_number(empty_graph(29)), CapacityError);
}

TEST_CASE("H(n,k,l) has matching number k") {
  for (int k = 0; k <= 5; ++k) {
    for (int l = k + 1; l <= 2 * k + 1; ++l) {
      for (int n = std::max(l, 2 * k + 1); n <= 16; ++n) {
        CHECK(matching_number(construct_H(n, k, l)) == k);
      }
    }
  }
}

TEST_CASE("matching number agrees with edge-subset search") {
  for (int n = 0; n <= 6; ++n) {
    GraphSample::all(n).for_each([](const Graph& g) {
      CHECK(matching_number(g) == naive::matching_number(g));
      CHECK(greedy_matching_size(g) <= matching_number(g));
    });
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(10, 0.2, rng);
    CHECK(matching_number(g) == naive::matching_number(g));
  }
}

TEST_CASE("adding an edge raises the matching number by at most one") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(9, 0.25, rng);
    const int nu = matching_number(g);
    for (int u = 1; u <= 9; ++u) {
      for (int v = u + 1; v <= 9; ++v) {
        if (g.has_edge(u, v)) continue;
        Graph plus = g;
        plus.add_edge(u, v);
        const int grown = matching_number(plus);
        CHECK(grown >= nu);
        CHECK(grown <= nu + 1);
      }
    }
  }
}

TEST_CASE("matching number at the order cap") {
  std::mt19937_64 rng(28);
  for (double p : {0.05, 0.1, 0.3, 0.8}) {
    const Graph g = random_graph(28, p, rng);
    const int nu = matching_number(g);
    CHECK(nu >= greedy_matching_size(g));
    CHECK(nu <= 14);
  }
  CHECK(matching_number(complete_graph(28)) == 14);
}

TEST_CASE("bipartite maximum matching") {
  CHECK(bip_max_matching(complete_bipartite(3, 3)).size() == 3);

  BipartiteGraph path(2, 1);
  path.add_edge(1, 1);
  path.add_edge(2, 1);
  CHECK(bip_max_matching(path) == std::vector<Edge>{{1, 1}});

  for (int k = 1; k <= 4; ++k) {
    for (int n = k; n <= 6; ++n) {
      BipartiteGraph g(n, n);
      for (int x = 1; x <= k; ++x) {
        for (int y = 1; y <= n; ++y) g.add_edge(x, y);
      }
      CHECK(bip_matching_number(g) == k);
    }
  }
  CHECK(bip_max_matching(complete_bipartite(2, 2)) == std::vector<Edge>{{1, 1}, {2, 2}});
}

TEST_CASE("bipartite matching is the lexicographically least maximum one") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const BipartiteGraph g = random_bipartite(3 + static_cast<int>(rng() % 2), 4, 0.45, rng);
    CHECK(bip_max_matching(g) == least_maximum_matching(g));
  }
}

TEST_CASE("koenig cover examples") {
  CHECK(koenig_cover(BipartiteGraph(3, 3)).size() == 0);

  BipartiteGraph path(2, 1);
  path.add_edge(1, 1);
  path.add_edge(2, 1);
  CHECK(koenig_cover(path) == VertexCover{0, label_bit(1)});

  CHECK(koenig_cover(complete_bipartite(3, 3)) == VertexCover{prefix_mask(3), 0});
}

TEST_CASE("koenig cover is a minimum cover on every small bipartite graph") {
  for (int nx = 1; nx <= 3; ++nx) {
    for (int ny = 1; ny <= 4; ++ny) {
      BipartiteSample::all(nx, ny).for_each([](const BipartiteGraph& g) {
        const VertexCover cover = koenig_cover(g);
        CHECK(cover.covers(g));
        CHECK(cover.size() == naive::min_vertex_cover(g));
        CHECK(cover.size() == bip_matching_number(g));
        CHECK(matching_number(g.as_graph()) == bip_matching_number(g));
      });
    }
  }
}

TEST_CASE("degree lemma instances") {
  // Antecedent false whenever d(u) + d(v) <= 2k.
  const Graph path = Graph::from_edges(4, std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(bondy_chvatal_holds(path, 1, 4, 1));

  // Triangle minus an edge, k = 1.
  const Graph cherry = Graph::from_edges(3, std::vector<Edge>{{1, 2}, {1, 3}});
  CHECK(matching_number(cherry) == 1);
  CHECK(bondy_chvatal_holds(cherry, 2, 3, 1));

  CHECK(bondy_chvatal_holds(empty_graph(4), 1, 2, 0));
  CHECK_THROWS_AS(bondy_chvatal_holds(cherry, 1, 2, 1), ArgumentError);
}

TEST_SUITE_END();
