#include "shiftturan/extremal.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "shiftturan/errors.hpp"

namespace shiftturan {
namespace {

[[noreturn]] void out_of_range(const std::string& what) { throw RangeError(what); }

void require_matching_host(int n, int k) {
  if (k < 0) out_of_range("k must be >= 0");
  if (n < 2 * k + 1) {
    out_of_range("formula needs n >= 2k+1; got n=" + std::to_string(n) +
                 " k=" + std::to_string(k));
  }
}

void require_h_range(int n, int k, int l) {
  if (k < 0 || l < k + 1 || l > 2 * k + 1 || n < 2 * k + 1) {
    out_of_range("H(n,k,l) needs k+1 <= l <= 2k+1 <= n; got n=" + std::to_string(n) +
                 " k=" + std::to_string(k) + " l=" + std::to_string(l));
  }
}

void require_at_least(int value, int bound, const char* name) {
  if (value < bound) {
    out_of_range(std::string(name) + " must be >= " + std::to_string(bound) + "; got " +
                 std::to_string(value));
  }
}

}  // namespace

BigCount binom(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigCount value = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    value *= n - r + i;
    value /= i;
  }
  return value;
}

BigCount ex_edges(int n, int k) {
  require_matching_host(n, k);
  return std::max(binom(2 * k + 1, 2), binom(k, 2) + BigCount(k) * (n - k));
}

BigCount ex_clique(int n, int k, int s) {
  require_at_least(s, 2, "s");
  require_matching_host(n, k);
  return std::max(binom(2 * k + 1, s), binom(k, s) + BigCount(n - k) * binom(k, s - 1));
}

BigCount ex_star(int n, int k, int s, int t) {
  require_at_least(s, 1, "s");
  require_at_least(t, 2, "t");
  require_matching_host(n, k);
  BigCount whole_clique = binom(2 * k + 1, s + t) * binom(s + t, t);
  BigCount join = binom(k, s) * binom(n - s, t) +
                  BigCount(n - k) * binom(k, s + t - 1) * binom(s + t - 1, t);
  return std::max(whole_clique, join);
}

BigCount ex_bip(int n, int k, int s, int t) {
  require_at_least(s, 1, "s");
  require_at_least(t, 1, "t");
  require_at_least(k, 0, "k");
  if (n < k) out_of_range("bipartite formula needs n >= k");
  if (s == t) return binom(k, s) * binom(n, s);
  return binom(k, s) * binom(n, t) + binom(k, t) * binom(n, s);
}

BigCount h_count_clique(int n, int k, int l, int s) {
  require_h_range(n, k, l);
  require_at_least(s, 1, "s");
  return binom(l, s) + BigCount(n - l) * binom(2 * k + 1 - l, s - 1);
}

StarCountParts h_count_star_parts(int n, int k, int l, int s, int t) {
  require_h_range(n, k, l);
  require_at_least(s, 1, "s");
  require_at_least(t, 1, "t");
  const std::int64_t core = 2 * k + 1 - l;
  StarCountParts parts;
  parts.inside_core = binom(core, s) * binom(n - s, t);
  parts.through_outer = BigCount(n - l) * binom(core, s - 1) * binom(core - s + 1, t);
  parts.through_clique = (binom(l, s) - binom(core, s)) * binom(l - s, t);
  return parts;
}

BigCount h_count_star(int n, int k, int l, int s, int t) {
  return h_count_star_parts(n, k, l, s, t).total();
}

BigCount bip_fst(int n, int k, int x, int s, int t) {
  require_at_least(s, 1, "s");
  require_at_least(t, 1, "t");
  if (x < 0 || x > k || k > n) {
    out_of_range("bipartite split needs 0 <= x <= k <= n; got n=" + std::to_string(n) +
                 " k=" + std::to_string(k) + " x=" + std::to_string(x));
  }
  const BigCount x_side = binom(x, s);
  const BigCount y_side = binom(k - x, t);
  return x_side * binom(n, t) + binom(n, s) * y_side - x_side * y_side;
}

BigCount bip_g(int n, int k, int x, int s, int t) {
  return bip_fst(n, k, x, s, t) + bip_fst(n, k, x, t, s);
}

EndpointMax endpoint_max(const std::function<BigCount(std::int64_t)>& f, std::int64_t lo,
                         std::int64_t hi) {
  if (lo > hi) throw ArgumentError("endpoint_max needs lo <= hi");
  std::vector<BigCount> values;
  values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t x = lo; x <= hi; ++x) values.push_back(f(x));

  EndpointMax result;
  result.max = values.front();
  result.argmax = lo;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > result.max) {
      result.max = values[i];
      result.argmax = lo + static_cast<std::int64_t>(i);
    }
  }
  if (values.front() == result.max) {
    result.endpoint = lo;
  } else if (values.back() == result.max) {
    result.endpoint = hi;
  }
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (values[i - 1] + values[i + 1] < 2 * values[i]) {
      result.convex = false;
      break;
    }
  }
  return result;
}

}  // namespace shiftturan
