#include "shiftturan/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

#include "shiftturan/counting.hpp"
#include "shiftturan/errors.hpp"
#include "shiftturan/graph_io.hpp"
#include "shiftturan/matching.hpp"
#include "shiftturan/shifting.hpp"

namespace shiftturan {
namespace {

void require_oracle_order(int n) {
  if (n < 0 || n > kMaxOracleOrder) {
    throw CapacityError("exhaustive enumeration supports n <= " +
                        std::to_string(kMaxOracleOrder) + "; got " + std::to_string(n));
  }
}

void require_oracle_cells(int nx, int ny) {
  if (nx < 0 || ny < 0 || nx * ny > kMaxOracleBipartiteCells) {
    throw CapacityError("exhaustive bipartite enumeration supports nx*ny <= " +
                        std::to_string(kMaxOracleBipartiteCells));
  }
}

struct SlotTable {
  explicit SlotTable(int n) : n(n) {
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) slots.push_back({u, v});
    }
  }

  Graph build(std::uint64_t mask) const {
    std::array<VertexMask, kMaxVertices> rows{};
    for (; mask; mask &= mask - 1) {
      const Edge& e = slots[static_cast<std::size_t>(std::countr_zero(mask))];
      rows[e.u - 1] |= label_bit(e.v);
      rows[e.v - 1] |= label_bit(e.u);
    }
    return Graph::from_adjacency(n, rows);
  }

  int n;
  std::vector<Edge> slots;
};

struct Best {
  bool found = false;
  BigCount value = 0;
  std::uint64_t mask = 0;

  void offer(const BigCount& v, std::uint64_t m) {
    if (!found || v > value || (v == value && m < mask)) {
      found = true;
      value = v;
      mask = m;
    }
  }
};

// Splits [0, total) into `jobs` contiguous ranges, scores each mask with
// `score` (returning false to skip it) and merges by (value desc, mask asc).
template <typename Score>
Best parallel_best(std::uint64_t total, int jobs, const Score& score) {
  jobs = std::max(1, jobs);
  const auto workers = static_cast<std::uint64_t>(jobs);
  std::vector<Best> partial(workers);
  auto run = [&](std::uint64_t w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    BigCount value;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      if (score(mask, value)) partial[w].offer(value, mask);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (std::thread& t : threads) t.join();
  }
  Best merged;
  for (const Best& b : partial) {
    if (b.found) merged.offer(b.value, b.mask);
  }
  return merged;
}

std::string params_string(std::initializer_list<std::pair<const char*, long long>> fields) {
  std::string out;
  for (const auto& [name, value] : fields) {
    if (!out.empty()) out += ";";
    out += std::string(name) + "=" + std::to_string(value);
  }
  return out;
}

std::string probability_string(double p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

std::string edge_list_line(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += " ";
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out.empty() ? "(none)" : out;
}

}  // namespace

BigCount Pattern::count(const Graph& g) const {
  return kind == Kind::kClique ? count_cliques(g, s) : count_star(g, s, t);
}

std::string Pattern::name() const {
  return kind == Kind::kClique ? "clique:" + std::to_string(s)
                               : "star:" + std::to_string(s) + "," + std::to_string(t);
}

int edge_slot_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  if (edge_slot_count(n) > 63) throw CapacityError("edge mask needs C(n,2) <= 63");
  if (mask >> edge_slot_count(n)) throw ArgumentError("edge mask has bits beyond C(n,2)");
  return SlotTable(n).build(mask);
}

std::uint64_t edge_mask_of(const Graph& g) {
  if (edge_slot_count(g.order()) > 63) throw CapacityError("edge mask needs C(n,2) <= 63");
  const SlotTable table(g.order());
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < table.slots.size(); ++i) {
    if (g.has_edge(table.slots[i])) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

BipartiteGraph bipartite_from_mask(int nx, int ny, std::uint64_t mask) {
  if (nx * ny > 63) throw CapacityError("bipartite mask needs nx*ny <= 63");
  BipartiteGraph g(nx, ny);
  for (; mask; mask &= mask - 1) {
    const int cell = std::countr_zero(mask);
    if (cell >= nx * ny) throw ArgumentError("bipartite mask has bits beyond nx*ny");
    g.add_edge(cell / ny + 1, cell % ny + 1);
  }
  return g;
}

void for_each_free_graph(int n, int k, bool prune,
                         const std::function<void(std::uint64_t, const Graph&)>& visit) {
  require_oracle_order(n);
  const SlotTable table(n);
  const std::uint64_t total = std::uint64_t{1} << edge_slot_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Graph g = table.build(mask);
    if (prune && greedy_matching_size(g) > k) continue;
    if (matching_number(g) > k) continue;
    visit(mask, g);
  }
}

Witness max_over_free(int n, int k, const Pattern& pattern, const EnumerationOptions& options) {
  require_oracle_order(n);
  const SlotTable table(n);
  const std::uint64_t total = std::uint64_t{1} << edge_slot_count(n);
  const Best best = parallel_best(total, options.jobs, [&](std::uint64_t mask, BigCount& value) {
    const Graph g = table.build(mask);
    if (options.prune && greedy_matching_size(g) > k) return false;
    if (matching_number(g) > k) return false;
    value = pattern.count(g);
    return true;
  });
  Witness w;
  w.graph = table.build(best.mask);
  w.value = best.value;
  w.params.n = n;
  w.params.k = k;
  w.params.s = pattern.s;
  w.params.t = pattern.t;
  return w;
}

BipartiteWitness max_over_free_bip(int nx, int ny, int k, int s, int t,
                                   const EnumerationOptions& options) {
  require_oracle_cells(nx, ny);
  const std::uint64_t total = std::uint64_t{1} << (nx * ny);
  const Best best = parallel_best(total, options.jobs, [&](std::uint64_t mask, BigCount& value) {
    const BipartiteGraph g = bipartite_from_mask(nx, ny, mask);
    if (bip_matching_number(g) > k) return false;
    value = count_bip(g, s, t);
    return true;
  });
  BipartiteWitness w;
  w.graph = bipartite_from_mask(nx, ny, best.mask);
  w.value = best.value;
  w.params.n = nx;
  w.params.k = k;
  w.params.s = s;
  w.params.t = t;
  return w;
}

namespace {

bool draw(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
  Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (draw(rng, edge_probability)) g.add_edge(u, v);
    }
  }
  return g;
}

BipartiteGraph random_bipartite(int nx, int ny, double edge_probability, std::mt19937_64& rng) {
  BipartiteGraph g(nx, ny);
  for (int x = 1; x <= nx; ++x) {
    for (int y = 1; y <= ny; ++y) {
      if (draw(rng, edge_probability)) g.add_edge(x, y);
    }
  }
  return g;
}

void GraphSample::for_each(const std::function<void(const Graph&)>& visit) const {
  if (exhaustive) {
    require_oracle_order(n);
    const SlotTable table(n);
    const std::uint64_t total = std::uint64_t{1} << edge_slot_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) visit(table.build(mask));
    return;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) visit(random_graph(n, edge_probability, rng));
}

void BipartiteSample::for_each(const std::function<void(const BipartiteGraph&)>& visit) const {
  if (exhaustive) {
    require_oracle_cells(nx, ny);
    const std::uint64_t total = std::uint64_t{1} << (nx * ny);
    for (std::uint64_t mask = 0; mask < total; ++mask) visit(bipartite_from_mask(nx, ny, mask));
    return;
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) {
    visit(random_bipartite(nx, ny, edge_probability, rng));
  }
}

Report verify_shift_lemmas(const GraphSample& sample, const ShiftLemmaChecks& checks) {
  if (sample.exhaustive && sample.n > 6) {
    throw CapacityError("exhaustive shift-lemma sweep supports n <= 6");
  }
  Report report;
  report.title = "shift lemmas";
  report.params = sample.exhaustive
                      ? params_string({{"n", sample.n}})
                      : params_string({{"n", sample.n},
                                       {"count", static_cast<long long>(sample.count)}}) +
                            ";p=" + probability_string(sample.edge_probability);
  if (!sample.exhaustive) report.seed = sample.seed;

  std::uint64_t edge_violations = 0;
  std::uint64_t matching_violations = 0;
  std::vector<std::uint64_t> clique_violations(static_cast<std::size_t>(checks.max_s) + 1, 0);
  std::vector<std::vector<std::uint64_t>> star_violations(
      static_cast<std::size_t>(checks.max_s) + 1,
      std::vector<std::uint64_t>(static_cast<std::size_t>(checks.max_t) + 1, 0));

  auto record = [&](const std::string& check, const Graph& g, int i, int j, const Graph& shifted,
                    const std::string& values) {
    std::ostringstream detail;
    detail << "i=" << i << " j=" << j << " " << values << "\nG:\n"
           << serialize_graph(g) << "S_ij(G):\n"
           << serialize_graph(shifted);
    report.violations.push_back({check, detail.str()});
  };

  sample.for_each([&](const Graph& g) {
    const int n = g.order();
    const int nu = checks.matching ? matching_number(g) : 0;
    std::vector<BigCount> cliques;
    std::vector<std::vector<BigCount>> stars;
    if (checks.counts) {
      cliques.resize(static_cast<std::size_t>(checks.max_s) + 1);
      stars.assign(static_cast<std::size_t>(checks.max_s) + 1,
                   std::vector<BigCount>(static_cast<std::size_t>(checks.max_t) + 1));
      for (int s = 1; s <= checks.max_s; ++s) {
        cliques[s] = count_cliques(g, s);
        for (int t = 1; t <= checks.max_t; ++t) stars[s][t] = count_star(g, s, t);
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        ++report.instances;
        if (shiftable_neighbors(g, i, j) == 0) continue;
        const Graph shifted = shift_graph(g, i, j);
        if (shifted.edge_count() != g.edge_count()) {
          ++edge_violations;
          record("edge_count", g, i, j, shifted,
                 "e=" + std::to_string(g.edge_count()) + "->" +
                     std::to_string(shifted.edge_count()));
        }
        if (checks.matching) {
          const int nu_shifted = matching_number(shifted);
          if (nu_shifted > nu) {
            ++matching_violations;
            record("matching_monotone", g, i, j, shifted,
                   "nu=" + std::to_string(nu) + "->" + std::to_string(nu_shifted));
          }
        }
        if (checks.counts) {
          for (int s = 1; s <= checks.max_s; ++s) {
            const BigCount c = count_cliques(shifted, s);
            if (c < cliques[s]) {
              ++clique_violations[s];
              record("clique_monotone", g, i, j, shifted,
                     "s=" + std::to_string(s) + " " + to_decimal(cliques[s]) + "->" +
                         to_decimal(c));
            }
            for (int t = 1; t <= checks.max_t; ++t) {
              const BigCount st = count_star(shifted, s, t);
              if (st < stars[s][t]) {
                ++star_violations[s][t];
                record("star_monotone", g, i, j, shifted,
                       "s=" + std::to_string(s) + " t=" + std::to_string(t) + " " +
                           to_decimal(stars[s][t]) + "->" + to_decimal(st));
              }
            }
          }
        }
      }
    }
  });

  report.add_tally("edge_count", edge_violations);
  if (checks.matching) report.add_tally("matching_monotone", matching_violations);
  if (checks.counts) {
    for (int s = 1; s <= checks.max_s; ++s) {
      report.add_tally("clique_monotone:s=" + std::to_string(s), clique_violations[s]);
    }
    for (int s = 1; s <= checks.max_s; ++s) {
      for (int t = 1; t <= checks.max_t; ++t) {
        report.add_tally("star_monotone:s=" + std::to_string(s) + ":t=" + std::to_string(t),
                         star_violations[s][t]);
      }
    }
  }
  return report;
}

Report verify_shifted_structure(int n, int k) {
  require_oracle_order(n);
  if (k < 0 || n < 2 * k + 1) throw RangeError("shifted-structure check needs n >= 2k+1");
  Report report;
  report.title = "shifted graphs with matching number k";
  report.params = params_string({{"n", n}, {"k", k}});

  std::vector<Graph> hosts;
  std::uint64_t bad_hosts = 0;
  for (int l = k + 1; l <= 2 * k + 1; ++l) {
    hosts.push_back(construct_H(n, k, l));
    if (!is_shifted(hosts.back()) || matching_number(hosts.back()) != k) ++bad_hosts;
  }

  std::uint64_t shifted_total = 0;
  std::uint64_t uncovered = 0;
  const SlotTable table(n);
  const std::uint64_t total = std::uint64_t{1} << edge_slot_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Graph g = table.build(mask);
    if (!is_shifted(g)) continue;
    ++shifted_total;
    if (matching_number(g) != k) continue;
    ++report.instances;
    const bool inside = std::any_of(hosts.begin(), hosts.end(),
                                    [&](const Graph& h) { return g.is_subgraph_of(h); });
    if (!inside) {
      ++uncovered;
      report.violations.push_back({"subgraph_of_H", serialize_graph(g)});
    }
  }
  report.add_tally("H_shifted_with_matching_number_k", bad_hosts);
  report.add_tally("subgraph_of_H", uncovered);
  report.notes.push_back("shifted graphs on [n]: " + std::to_string(shifted_total) +
                         ", with matching number k: " + std::to_string(report.instances));
  return report;
}

Report verify_bondy_chvatal(int n) {
  require_oracle_order(n);
  Report report;
  report.title = "degree lemma";
  report.params = params_string({{"n", n}});
  std::uint64_t failures = 0;
  GraphSample::all(n).for_each([&](const Graph& g) {
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (g.has_edge(u, v)) continue;
        ++report.instances;
        Graph plus = g;
        plus.add_edge(u, v);
        const int k = matching_number(plus) - 1;
        if (!bondy_chvatal_holds(g, u, v, k)) {
          ++failures;
          report.violations.push_back(
              {"implication", "u=" + std::to_string(u) + " v=" + std::to_string(v) +
                                  " k=" + std::to_string(k) + "\n" + serialize_graph(g)});
        }
      }
    }
  });
  report.add_tally("implication", failures);
  return report;
}

BipartiteGraph cover_completion(int nx, int ny, VertexMask cover_x, VertexMask cover_y) {
  BipartiteGraph g(nx, ny);
  for (int x = 1; x <= nx; ++x) {
    for (int y = 1; y <= ny; ++y) {
      if ((cover_x & label_bit(x)) || (cover_y & label_bit(y))) g.add_edge(x, y);
    }
  }
  return g;
}

Report verify_koenig_gstar(int nx, int ny, int k,
                           const std::vector<std::pair<int, int>>& patterns) {
  require_oracle_cells(nx, ny);
  Report report;
  report.title = "cover completion";
  report.params = params_string({{"nx", nx}, {"ny", ny}, {"k", k}});
  std::uint64_t size_failures = 0;
  std::uint64_t cover_failures = 0;
  std::uint64_t subgraph_failures = 0;
  std::uint64_t dominance_failures = 0;
  std::uint64_t formula_failures = 0;
  const bool square = nx == ny;

  BipartiteSample::all(nx, ny).for_each([&](const BipartiteGraph& g) {
    if (bip_matching_number(g) != k) return;
    ++report.instances;
    const VertexCover cover = koenig_cover(g);
    const std::string shown = serialize_bipartite(g);
    if (cover.size() != k) {
      ++size_failures;
      report.violations.push_back({"cover_size", shown});
    }
    if (!cover.covers(g)) {
      ++cover_failures;
      report.violations.push_back({"cover_valid", shown});
    }
    const BipartiteGraph completed = cover_completion(nx, ny, cover.x, cover.y);
    if (!g.is_subgraph_of(completed)) {
      ++subgraph_failures;
      report.violations.push_back({"subgraph_of_completion", shown});
    }
    const int x = std::popcount(cover.x);
    for (const auto& [s, t] : patterns) {
      const BigCount completed_count = count_bip(completed, s, t);
      if (count_bip(g, s, t) > completed_count) {
        ++dominance_failures;
        report.violations.push_back(
            {"count_dominated", "s=" + std::to_string(s) + " t=" + std::to_string(t) + "\n" + shown});
      }
      if (square && cover.size() == k) {
        const BigCount formula = s == t ? bip_fst(nx, k, x, s, t) : bip_g(nx, k, x, s, t);
        if (formula != completed_count) {
          ++formula_failures;
          report.violations.push_back(
              {"completion_formula", "s=" + std::to_string(s) + " t=" + std::to_string(t) +
                                         " x=" + std::to_string(x) + " formula=" +
                                         to_decimal(formula) + " counted=" +
                                         to_decimal(completed_count) + "\n" + shown});
        }
      }
    }
  });
  report.add_tally("cover_size", size_failures);
  report.add_tally("cover_valid", cover_failures);
  report.add_tally("subgraph_of_completion", subgraph_failures);
  report.add_tally("count_dominated", dominance_failures);
  if (square) {
    report.add_tally("completion_formula", formula_failures);
  } else {
    report.notes.push_back("parts differ in size; completion formula not checked");
  }
  return report;
}

Report verify_koenig_duality(const BipartiteSample& sample) {
  Report report;
  report.title = "koenig duality";
  report.params = sample.exhaustive
                      ? params_string({{"nx", sample.nx}, {"ny", sample.ny}})
                      : params_string({{"nx", sample.nx},
                                       {"ny", sample.ny},
                                       {"count", static_cast<long long>(sample.count)}}) +
                            ";p=" + probability_string(sample.edge_probability);
  if (!sample.exhaustive) report.seed = sample.seed;
  std::uint64_t size_failures = 0;
  std::uint64_t cover_failures = 0;
  std::uint64_t matching_failures = 0;
  sample.for_each([&](const BipartiteGraph& g) {
    ++report.instances;
    const std::vector<Edge> matching = bip_max_matching(g);
    const VertexCover cover = koenig_cover(g);
    VertexMask xs = 0;
    VertexMask ys = 0;
    bool is_matching = true;
    for (const Edge& e : matching) {
      if (!g.has_edge(e.u, e.v) || (xs & label_bit(e.u)) || (ys & label_bit(e.v))) {
        is_matching = false;
      }
      xs |= label_bit(e.u);
      ys |= label_bit(e.v);
    }
    if (!is_matching) {
      ++matching_failures;
      report.violations.push_back({"matching_valid", serialize_bipartite(g)});
    }
    if (cover.size() != static_cast<int>(matching.size())) {
      ++size_failures;
      report.violations.push_back({"cover_equals_matching", serialize_bipartite(g)});
    }
    if (!cover.covers(g)) {
      ++cover_failures;
      report.violations.push_back({"cover_valid", serialize_bipartite(g)});
    }
  });
  report.add_tally("matching_valid", matching_failures);
  report.add_tally("cover_equals_matching", size_failures);
  report.add_tally("cover_valid", cover_failures);
  return report;
}

namespace {

Report theorem_report(const std::string& title, const std::string& params, const BigCount& formula,
                      const Witness& w, const Pattern& pattern, int k) {
  Report report;
  report.title = title;
  report.params = params;
  report.instances = std::uint64_t{1} << edge_slot_count(w.params.n);
  report.add_comparison("oracle_max", to_decimal(formula), to_decimal(w.value));
  const bool valid = matching_number(w.graph) <= k && pattern.count(w.graph) == w.value;
  report.add_tally("witness_valid", valid ? 0 : 1);
  report.notes.push_back("witness edges: " + edge_list_line(w.graph.edges()));
  return report;
}

}  // namespace

Report verify_theorem_edges(int n, int k, const EnumerationOptions& options) {
  const BigCount formula = ex_edges(n, k);
  const Pattern pattern = Pattern::clique(2);
  return theorem_report("edges", params_string({{"n", n}, {"k", k}}), formula,
                        max_over_free(n, k, pattern, options), pattern, k);
}

Report verify_theorem_clique(int n, int k, int s, const EnumerationOptions& options) {
  const BigCount formula = ex_clique(n, k, s);
  const Pattern pattern = Pattern::clique(s);
  return theorem_report("cliques", params_string({{"n", n}, {"k", k}, {"s", s}}), formula,
                        max_over_free(n, k, pattern, options), pattern, k);
}

Report verify_theorem_star(int n, int k, int s, int t, const EnumerationOptions& options) {
  const BigCount formula = ex_star(n, k, s, t);
  const Pattern pattern = Pattern::star(s, t);
  return theorem_report("stars", params_string({{"n", n}, {"k", k}, {"s", s}, {"t", t}}), formula,
                        max_over_free(n, k, pattern, options), pattern, k);
}

Report verify_theorem_bip(int n, int k, int s, int t, const EnumerationOptions& options) {
  const BigCount formula = ex_bip(n, k, s, t);
  const BipartiteWitness w = max_over_free_bip(n, n, k, s, t, options);
  Report report;
  report.title = "bipartite";
  report.params = params_string({{"n", n}, {"k", k}, {"s", s}, {"t", t}});
  report.instances = std::uint64_t{1} << (n * n);
  report.add_comparison("oracle_max", to_decimal(formula), to_decimal(w.value));
  const bool valid = bip_matching_number(w.graph) <= k && count_bip(w.graph, s, t) == w.value;
  report.add_tally("witness_valid", valid ? 0 : 1);
  report.notes.push_back("witness edges: " + edge_list_line(w.graph.edges()));
  return report;
}

}  // namespace shiftturan
