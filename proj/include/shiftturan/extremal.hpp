#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "shiftturan/bigcount.hpp"

namespace shiftturan {

/// Parameters of the extremal problems. The forbidden graph is M_{k+1};
/// l indexes the H(n,k,l) family and x = |X ∩ cover| in the bipartite case.
struct ExtremalParams {
  int n = 0;
  int k = 0;
  int s = 0;
  int t = 0;
  int l = 0;
  int x = 0;
};

/// C(n, r), or 0 whenever r < 0, r > n or n < 0.
BigCount binom(std::int64_t n, std::int64_t r);

// Closed forms for ex(n, ·, M_{k+1}). Parameters outside each theorem's
// hypotheses raise RangeError instead of extrapolating.

/// max{C(2k+1,2), C(k,2) + k(n-k)}; needs n >= 2k+1.
BigCount ex_edges(int n, int k);
/// max{C(2k+1,s), C(k,s) + (n-k)C(k,s-1)}; needs s >= 2, n >= 2k+1.
BigCount ex_clique(int n, int k, int s);
/// max{C(2k+1,s+t)C(s+t,t), C(k,s)C(n-s,t) + (n-k)C(k,s+t-1)C(s+t-1,t)};
/// needs s >= 1, t >= 2, n >= 2k+1. K*_{s,1} is K_{s+1}: use ex_clique.
BigCount ex_star(int n, int k, int s, int t);
/// Bipartite hosts with parts of size n: C(k,s)C(n,t) + C(k,t)C(n,s) for
/// s != t and C(k,s)C(n,s) for s == t; needs s, t >= 1, n >= k.
BigCount ex_bip(int n, int k, int s, int t);

/// Copies of K_s in H(n,k,l): C(l,s) + (n-l)C(2k+1-l,s-1).
BigCount h_count_clique(int n, int k, int l, int s);

/// Copies of K*_{s,t} in H(n,k,l), split by where the clique side sits:
/// inside [2k+1-l], through one vertex of [n] \ [l], or through [l] \ [2k+1-l].
struct StarCountParts {
  BigCount inside_core;
  BigCount through_outer;
  BigCount through_clique;

  BigCount total() const { return inside_core + through_outer + through_clique; }
};

StarCountParts h_count_star_parts(int n, int k, int l, int s, int t);
BigCount h_count_star(int n, int k, int l, int s, int t);

/// Copies of K_{s,t} (s-side in X) in the bipartite host where a cover with
/// x vertices in X and k-x in Y is completely joined to the other part:
/// C(x,s)C(n,t) + C(n,s)C(k-x,t) - C(x,s)C(k-x,t). Needs 0 <= x <= k <= n.
BigCount bip_fst(int n, int k, int x, int s, int t);
/// bip_fst(n,k,x,s,t) + bip_fst(n,k,x,t,s).
BigCount bip_g(int n, int k, int x, int s, int t);

struct EndpointMax {
  std::int64_t argmax = 0;                 ///< least maximizer
  BigCount max = 0;
  std::optional<std::int64_t> endpoint;    ///< lo or hi, if either attains max
  bool convex = true;                      ///< f(x-1) + f(x+1) >= 2 f(x) inside
};

/// Evaluates f at every integer in [lo, hi]. Throws ArgumentError if lo > hi.
EndpointMax endpoint_max(const std::function<BigCount(std::int64_t)>& f, std::int64_t lo,
                         std::int64_t hi);

}  // namespace shiftturan
