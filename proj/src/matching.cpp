#include "shiftturan/matching.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>

#include "shiftturan/errors.hpp"

namespace shiftturan {
namespace {

// Flat table for small orders, hash map above that.
class MatchingMemo {
 public:
  explicit MatchingMemo(int n) {
    if (n <= kFlatLimit) flat_.assign(std::size_t{1} << n, -1);
  }

  int get(VertexMask mask) const {
    if (!flat_.empty()) return flat_[mask];
    auto it = sparse_.find(mask);
    return it == sparse_.end() ? -1 : it->second;
  }

  void put(VertexMask mask, int value) {
    if (!flat_.empty()) {
      flat_[mask] = static_cast<std::int8_t>(value);
    } else {
      sparse_.emplace(mask, static_cast<std::int8_t>(value));
    }
  }

 private:
  static constexpr int kFlatLimit = 16;
  std::vector<std::int8_t> flat_;
  std::unordered_map<VertexMask, std::int8_t> sparse_;
};

class ExactMatcher {
 public:
  explicit ExactMatcher(const Graph& g) : g_(g), memo_(g.order()) {}

  int solve(VertexMask live) {
    live = prune_isolated(live);
    if (live == 0) return 0;
    if (int cached = memo_.get(live); cached >= 0) return cached;

    const int ceiling = std::popcount(live) / 2;
    const int v = std::countr_zero(live) + 1;
    const VertexMask rest = live & ~label_bit(v);
    int best = 0;
    for (VertexMask partners = g_.neighbors(v) & rest; partners && best < ceiling;
         partners &= partners - 1) {
      const VertexMask u = partners & -partners;
      best = std::max(best, 1 + solve(rest & ~u));
    }
    if (best < ceiling) best = std::max(best, solve(rest));
    memo_.put(live, best);
    return best;
  }

 private:
  VertexMask prune_isolated(VertexMask live) const {
    VertexMask kept = 0;
    for (VertexMask rest = live; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest) + 1;
      if (g_.neighbors(v) & live) kept |= label_bit(v);
    }
    return kept;
  }

  const Graph& g_;
  MatchingMemo memo_;
};

using Rows = std::array<VertexMask, kMaxVertices>;

bool try_augment(const Rows& rows, int x, VertexMask y_allowed, VertexMask& seen,
                 std::array<int, kMaxVertices>& x_of_y) {
  for (VertexMask cand = rows[x] & y_allowed & ~seen; cand; cand &= cand - 1) {
    const int y = std::countr_zero(cand);
    seen |= VertexMask{1} << y;
    if (x_of_y[y] < 0 || try_augment(rows, x_of_y[y], y_allowed, seen, x_of_y)) {
      x_of_y[y] = x;
      return true;
    }
  }
  return false;
}

// Kuhn's augmenting-path matching restricted to the given X and Y masks.
// Indices are 0-based internally.
int kuhn(const Rows& rows, int nx, VertexMask x_allowed, VertexMask y_allowed,
         std::array<int, kMaxVertices>& x_of_y) {
  x_of_y.fill(-1);
  int size = 0;
  for (int x = 0; x < nx; ++x) {
    if (!(x_allowed >> x & 1)) continue;
    VertexMask seen = 0;
    if (try_augment(rows, x, y_allowed, seen, x_of_y)) ++size;
  }
  return size;
}

Rows rows_of(const BipartiteGraph& g) {
  Rows rows{};
  for (int x = 1; x <= g.x_size(); ++x) rows[x - 1] = g.row(x);
  return rows;
}

}  // namespace

int matching_number(const Graph& g) {
  if (g.order() > kMaxExactMatchingOrder) {
    throw CapacityError("exact matching number supports n <= " +
                        std::to_string(kMaxExactMatchingOrder) + "; got " +
                        std::to_string(g.order()));
  }
  ExactMatcher matcher(g);
  return matcher.solve(g.vertices());
}

int greedy_matching_size(const Graph& g) {
  VertexMask used = 0;
  int size = 0;
  for (int u = 1; u <= g.order(); ++u) {
    if (used & label_bit(u)) continue;
    const VertexMask free = g.neighbors(u) & ~used;
    if (free) {
      used |= label_bit(u) | (free & -free);
      ++size;
    }
  }
  return size;
}

int bip_matching_number(const BipartiteGraph& g) {
  std::array<int, kMaxVertices> x_of_y{};
  return kuhn(rows_of(g), g.x_size(), prefix_mask(g.x_size()), prefix_mask(g.y_size()), x_of_y);
}

std::vector<Edge> bip_max_matching(const BipartiteGraph& g) {
  const Rows rows = rows_of(g);
  const int nx = g.x_size();
  std::array<int, kMaxVertices> scratch{};
  VertexMask x_free = prefix_mask(nx);
  VertexMask y_free = prefix_mask(g.y_size());
  int remaining = kuhn(rows, nx, x_free, y_free, scratch);

  // Greedy over edges in lexicographic order, keeping an edge whenever the
  // rest of the graph can still complete a maximum matching.
  std::vector<Edge> picked;
  for (int x = 0; x < nx && remaining > 0; ++x) {
    for (VertexMask cand = rows[x] & y_free; cand; cand &= cand - 1) {
      const int y = std::countr_zero(cand);
      const VertexMask xs = x_free & ~(VertexMask{1} << x);
      const VertexMask ys = y_free & ~(VertexMask{1} << y);
      if (kuhn(rows, nx, xs, ys, scratch) == remaining - 1) {
        picked.push_back({x + 1, y + 1});
        x_free = xs;
        y_free = ys;
        --remaining;
        break;
      }
    }
  }
  return picked;
}

int VertexCover::size() const { return std::popcount(x) + std::popcount(y); }

bool VertexCover::covers(const BipartiteGraph& g) const {
  for (int xv = 1; xv <= g.x_size(); ++xv) {
    if (x & label_bit(xv)) continue;
    if (g.row(xv) & ~y) return false;
  }
  return true;
}

VertexCover koenig_cover(const BipartiteGraph& g) {
  const int nx = g.x_size();
  const int ny = g.y_size();
  std::array<int, kMaxVertices> y_mate{};  // 1-based X label or 0
  std::array<int, kMaxVertices> x_mate{};
  y_mate.fill(0);
  x_mate.fill(0);
  for (const Edge& e : bip_max_matching(g)) {
    x_mate[e.u - 1] = e.v;
    y_mate[e.v - 1] = e.u;
  }

  VertexMask reach_x = 0;
  VertexMask reach_y = 0;
  std::vector<int> frontier;
  for (int x = 1; x <= nx; ++x) {
    if (x_mate[x - 1] == 0) {
      reach_x |= label_bit(x);
      frontier.push_back(x);
    }
  }
  // X -> Y along non-matching edges, Y -> X along matching edges.
  while (!frontier.empty()) {
    const int x = frontier.back();
    frontier.pop_back();
    for (VertexMask ys = g.row(x) & ~reach_y; ys; ys &= ys - 1) {
      const int y = std::countr_zero(ys) + 1;
      if (x_mate[x - 1] == y) continue;
      reach_y |= label_bit(y);
      const int mate = y_mate[y - 1];
      if (mate != 0 && !(reach_x & label_bit(mate))) {
        reach_x |= label_bit(mate);
        frontier.push_back(mate);
      }
    }
  }
  return {prefix_mask(nx) & ~reach_x, prefix_mask(ny) & reach_y};
}

bool bondy_chvatal_holds(const Graph& g, int u, int v, int k) {
  if (g.has_edge(u, v)) {
    throw ArgumentError("{" + std::to_string(u) + "," + std::to_string(v) +
                        "} is already an edge");
  }
  if (u == v) throw ArgumentError("u and v must differ");
  const int degree_sum = g.degree(u) + g.degree(v);
  if (degree_sum < 2 * k + 1) return true;
  Graph plus = g;
  plus.add_edge(u, v);
  if (matching_number(plus) != k + 1) return true;
  return matching_number(g) == k + 1;
}

}  // namespace shiftturan
