#include "shiftturan/counting.hpp"

#include <array>
#include <bit>
#include <string>

#include "shiftturan/errors.hpp"

namespace shiftturan {

std::uint64_t choose_small(int n, int r) {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> c{};
    for (int i = 0; i <= 64; ++i) {
      c[i][0] = 1;
      for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j < i ? c[i - 1][j] : 0);
    }
    return c;
  }();
  if (n < 0 || n > 64 || r < 0 || r > n) return 0;
  return table[n][r];
}

namespace {

void require_positive(int value, const char* name) {
  if (value < 1) {
    throw ArgumentError(std::string(name) + " must be >= 1; got " + std::to_string(value));
  }
}

// Extends a clique whose common neighborhood is `common`; only vertices above
// `last` are candidates so each clique is produced once.
class CliqueWalker {
 public:
  CliqueWalker(const Graph& g, int s, int t) : g_(g), s_(s), t_(t) {}

  BigCount run() {
    walk(g_.vertices(), 0, s_);
    return acc_.total();
  }

 private:
  void walk(VertexMask common, int last, int need) {
    if (need == 0) {
      acc_.add(t_ == 0 ? 1 : choose_small(std::popcount(common), t_));
      return;
    }
    VertexMask cand = common & ~prefix_mask(last);
    if (t_ == 0 && need == 1) {
      acc_.add(static_cast<std::uint64_t>(std::popcount(cand)));
      return;
    }
    while (std::popcount(cand) >= need) {
      const int v = std::countr_zero(cand) + 1;
      cand &= cand - 1;
      walk(common & g_.neighbors(v), v, need - 1);
    }
  }

  const Graph& g_;
  int s_;
  int t_;
  CountAccumulator acc_;
};

void walk_bip(const BipartiteGraph& g, VertexMask common_y, int last_x, int need, int t,
              CountAccumulator& acc) {
  if (std::popcount(common_y) < t) return;
  if (need == 0) {
    acc.add(choose_small(std::popcount(common_y), t));
    return;
  }
  for (int x = last_x + 1; x <= g.x_size() - need + 1; ++x) {
    walk_bip(g, common_y & g.row(x), x, need - 1, t, acc);
  }
}

}  // namespace

BigCount count_cliques(const Graph& g, int s) {
  require_positive(s, "s");
  return CliqueWalker(g, s, 0).run();
}

BigCount count_star(const Graph& g, int s, int t) {
  require_positive(s, "s");
  require_positive(t, "t");
  return CliqueWalker(g, s, t).run();
}

BigCount count_bip_oriented(const BipartiteGraph& g, int s, int t) {
  require_positive(s, "s");
  require_positive(t, "t");
  CountAccumulator acc;
  walk_bip(g, prefix_mask(g.y_size()), 0, s, t, acc);
  return acc.total();
}

BigCount count_bip(const BipartiteGraph& g, int s, int t) {
  if (s == t) return count_bip_oriented(g, s, t);
  return count_bip_oriented(g, s, t) + count_bip_oriented(g, t, s);
}

}  // namespace shiftturan
