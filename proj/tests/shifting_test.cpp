#include <doctest.h>

#include <random>

#include "shiftturan/counting.hpp"
#include "shiftturan/errors.hpp"
#include "shiftturan/matching.hpp"
#include "shiftturan/oracle.hpp"
#include "shiftturan/shifting.hpp"
#include "support/naive.hpp"

using namespace shiftturan;

namespace {

Graph graph_of(int n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::vector<Edge>(edges));
}

}  // namespace

TEST_SUITE_BEGIN("shifting");

TEST_CASE("shift_edge") {
  const Graph single = graph_of(3, {{2, 3}});
  CHECK(shift_edge(single, 1, 2, {2, 3}) == Edge{1, 3});

  const Graph k2 = graph_of(2, {{1, 2}});
  CHECK(shift_edge(k2, 1, 2, {1, 2}) == Edge{1, 2});

  const Graph blocked = graph_of(3, {{1, 3}, {2, 3}});
  CHECK(shift_edge(blocked, 1, 2, {2, 3}) == Edge{2, 3});
  // j not in e
  CHECK(shift_edge(blocked, 1, 2, {1, 3}) == Edge{1, 3});

  CHECK_THROWS_AS(shift_edge(single, 2, 1, {2, 3}), ArgumentError);
  CHECK_THROWS_AS(shift_edge(single, 2, 2, {2, 3}), ArgumentError);
  CHECK_THROWS_AS(shift_edge(single, 1, 2, {1, 2}), ArgumentError);
}

TEST_CASE("shift_graph") {
  for (int n = 2; n <= 8; ++n) {
    const Graph k = complete_graph(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) CHECK(shift_graph(k, i, j) == k);
    }
  }
  CHECK(shift_graph(graph_of(3, {{2, 3}}), 1, 2) == graph_of(3, {{1, 3}}));
  const Graph blocked = graph_of(3, {{1, 3}, {2, 3}});
  CHECK(shift_graph(blocked, 1, 2) == blocked);
  CHECK_THROWS_AS(shift_graph(blocked, 2, 1), ArgumentError);
  CHECK_THROWS_AS(shift_graph(blocked, 1, 4), ArgumentError);
}

TEST_CASE("shift_graph maps every edge against the original edge set") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(9, 0.4, rng);
    for (int i = 1; i <= 9; ++i) {
      for (int j = i + 1; j <= 9; ++j) {
        Graph expected(9);
        for (const Edge& e : g.edges()) {
          const Edge image = shift_edge(g, i, j, e);
          CHECK(expected.add_edge(image.u, image.v));
        }
        CHECK(shift_graph(g, i, j) == expected);
      }
    }
  }
}

TEST_CASE("compress examples") {
  CHECK(compress(empty_graph(6)) == empty_graph(6));
  CHECK(compress(graph_of(3, {{2, 3}})) == graph_of(3, {{1, 2}}));

  const Graph matching = graph_of(4, {{1, 2}, {3, 4}});
  const Graph shifted = compress(matching);
  CHECK(is_shifted(shifted));
  CHECK(shifted.edge_count() == 2);
  CHECK(matching_number(shifted) <= 2);
  // Lexicographic sweeps turn the matching into the star at vertex 1.
  CHECK(shifted == graph_of(4, {{1, 2}, {1, 3}}));
}

TEST_CASE("is_shifted agrees with the hereditary form on every graph up to n = 6") {
  for (int n = 0; n <= 6; ++n) {
    GraphSample::all(n).for_each([&](const Graph& g) { CHECK(is_shifted(g) == naive::is_shifted(g)); });
  }
  CHECK(is_shifted(complete_graph(7)));
  CHECK_FALSE(is_shifted(graph_of(3, {{2, 3}})));
}

TEST_CASE("there are 2^(n-1) shifted graphs on [n]") {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t shifted = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edge_slot_count(n)); ++mask) {
      if (is_shifted(graph_from_edge_mask(n, mask))) ++shifted;
    }
    CHECK(shifted == std::uint64_t{1} << (n - 1));
  }
}

TEST_CASE("every H(n,k,l) is shifted") {
  for (int k = 0; k <= 5; ++k) {
    for (int l = k + 1; l <= 2 * k + 1; ++l) {
      for (int n = l; n <= 16; ++n) CHECK(is_shifted(construct_H(n, k, l)));
    }
  }
}

TEST_CASE("shift properties on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const double p = 0.15 + 0.1 * static_cast<double>(rng() % 6);
    const Graph g = random_graph(n, p, rng);
    const int nu = matching_number(g);
    const BigCount triangles = count_cliques(g, 3);
    const BigCount stars = count_star(g, 2, 2);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const Graph s = shift_graph(g, i, j);
        s.check_invariants();
        CHECK(s.edge_count() == g.edge_count());
        for (int v = 1; v <= n; ++v) {
          if (v == i || v == j) continue;
          CHECK((s.neighbors(v) & ~(label_bit(i) | label_bit(j))) ==
                (g.neighbors(v) & ~(label_bit(i) | label_bit(j))));
        }
        if (!(s == g)) CHECK(label_weight(s) < label_weight(g));
        CHECK(matching_number(s) <= nu);
        CHECK(count_cliques(s, 3) >= triangles);
        CHECK(count_star(s, 2, 2) >= stars);
      }
    }

    const Graph c = compress(g);
    CHECK(is_shifted(c));
    CHECK(compress(c) == c);
    CHECK(c.edge_count() == g.edge_count());
    CHECK(matching_number(c) <= nu);
    for (int s = 1; s <= 4; ++s) CHECK(count_cliques(c, s) >= count_cliques(g, s));
  }
}

TEST_SUITE_END();
