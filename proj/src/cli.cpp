#include "shiftturan/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "shiftturan/counting.hpp"
#include "shiftturan/errors.hpp"
#include "shiftturan/extremal.hpp"
#include "shiftturan/graph_io.hpp"
#include "shiftturan/matching.hpp"
#include "shiftturan/oracle.hpp"
#include "shiftturan/shifting.hpp"

namespace shiftturan {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PartSizes {
  int nx = 0;
  int ny = 0;
};

PartSizes parse_parts(const std::string& text) {
  PartSizes parts;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> parts.nx >> comma >> parts.ny) || comma != ',' || !in.eof() || parts.nx < 0 ||
      parts.ny < 0) {
    throw UsageError("--bipartite expects NX,NY; got '" + text + "'");
  }
  return parts;
}

/// Loads either format. A general graph needs `parts` to be read as
/// bipartite; its labels 1..nx form X and nx+1..nx+ny form Y.
BipartiteGraph load_bipartite(const std::string& text, const std::optional<PartSizes>& parts) {
  if (header_field_count(text) == 3) {
    BipartiteGraph g = parse_bipartite(text);
    if (parts && (parts->nx != g.x_size() || parts->ny != g.y_size())) {
      throw UsageError("--bipartite does not match the file's part sizes");
    }
    return g;
  }
  if (!parts) throw UsageError("general edge list needs --bipartite NX,NY");
  const Graph g = parse_graph(text);
  if (parts->nx + parts->ny != g.order()) {
    throw UsageError("--bipartite sizes do not add up to the vertex count");
  }
  BipartiteGraph b(parts->nx, parts->ny);
  for (const Edge& e : g.edges()) {
    if (e.u > parts->nx || e.v <= parts->nx) {
      throw UsageError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                       " lies inside one part");
    }
    b.add_edge(e.u, e.v - parts->nx);
  }
  return b;
}

Graph load_graph(const std::string& text) {
  if (header_field_count(text) == 3) return parse_bipartite(text).as_graph();
  return parse_graph(text);
}

struct PatternSpec {
  std::string family;
  int s = 0;
  int t = 0;
};

PatternSpec parse_pattern(const std::string& text) {
  PatternSpec p;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--pattern expects FAMILY:ARGS");
  p.family = text.substr(0, colon);
  std::istringstream in(text.substr(colon + 1));
  char comma = 0;
  if (p.family == "clique") {
    if (!(in >> p.s) || !in.eof()) throw UsageError("clique pattern expects clique:S");
  } else if (p.family == "star" || p.family == "bip") {
    if (!(in >> p.s >> comma >> p.t) || comma != ',' || !in.eof()) {
      throw UsageError(p.family + " pattern expects " + p.family + ":S,T");
    }
  } else {
    throw UsageError("unknown pattern family '" + p.family + "'");
  }
  return p;
}

std::vector<std::pair<int, int>> default_bip_patterns() {
  std::vector<std::pair<int, int>> pairs;
  for (int s = 1; s <= 3; ++s) {
    for (int t = s; t <= 3; ++t) pairs.emplace_back(s, t);
  }
  return pairs;
}

template <typename T>
T need(const std::optional<T>& value, const char* flag, const std::string& command) {
  if (!value) throw UsageError(command + " requires " + flag);
  return *value;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shifting-method toolkit for generalized Turán numbers of matchings",
               "shiftturan"};
  app.require_subcommand(1);

  std::string input;
  std::optional<int> shift_i;
  std::optional<int> shift_j;
  bool full = false;
  auto* shift = app.add_subcommand("shift", "Apply S_ij once, or compress to a shifted graph");
  shift->add_option("--input", input, "edge-list file")->required();
  shift->add_option("--i", shift_i, "target label");
  shift->add_option("--j", shift_j, "source label");
  shift->add_flag("--full", full, "repeat lexicographic sweeps until shifted");

  auto* nu = app.add_subcommand("nu", "Print the matching number");
  nu->add_option("--input", input, "edge-list file")->required();

  std::optional<std::string> parts_text;
  auto* cover = app.add_subcommand("cover", "Print a König minimum vertex cover");
  cover->add_option("--input", input, "edge-list or bipartite file")->required();
  cover->add_option("--bipartite", parts_text, "part sizes NX,NY for a general edge list");

  std::string pattern_text;
  auto* count = app.add_subcommand("count", "Count copies of a pattern");
  count->add_option("--input", input, "edge-list or bipartite file")->required();
  count->add_option("--pattern", pattern_text, "clique:S | star:S,T | bip:S,T")->required();
  count->add_option("--bipartite", parts_text, "part sizes NX,NY for a general edge list");

  std::string family;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> s;
  std::optional<int> t;
  auto* extremal = app.add_subcommand("extremal", "Evaluate a closed-form extremal number");
  extremal->add_option("family", family, "clique | star | bip | edges")
      ->required()
      ->check(CLI::IsMember({"clique", "star", "bip", "edges"}));
  for (auto* sub : {extremal}) {
    sub->add_option("--n", n)->required();
    sub->add_option("--k", k)->required();
    sub->add_option("--s", s);
    sub->add_option("--t", t);
  }

  auto* scan = app.add_subcommand("scan", "Tabulate a counting function over its parameter");
  scan->add_option("--family", family, "H-clique | H-star | bip-f | bip-g")
      ->required()
      ->check(CLI::IsMember({"H-clique", "H-star", "bip-f", "bip-g"}));
  scan->add_option("--n", n)->required();
  scan->add_option("--k", k)->required();
  scan->add_option("--s", s)->required();
  scan->add_option("--t", t);

  std::string which;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> samples;
  double edge_probability = 0.5;
  bool csv = false;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "Check a lemma or theorem by exhaustive search");
  verify->add_option("check", which)
      ->required()
      ->check(CLI::IsMember({"lemma21", "lemma22", "lemma31", "lemma32", "koenig", "thm11",
                             "thm12", "thm13", "thm14"}));
  verify->add_option("--n", n)->required();
  verify->add_option("--k", k);
  verify->add_option("--s", s);
  verify->add_option("--t", t);
  verify->add_option("--seed", seed, "seed for std::mt19937_64 sampling")->capture_default_str();
  verify->add_option("--samples", samples, "random instances instead of exhaustive search");
  verify->add_option("--p", edge_probability, "edge probability for random instances")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  verify->add_flag("--csv", csv, "one CSV row per check");
  verify->add_option("--jobs", jobs, "worker threads for enumeration")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*shift) {
      const Graph g = parse_graph(read_text_file(input));
      if (full) {
        if (shift_i || shift_j) throw UsageError("--full cannot be combined with --i/--j");
        out << serialize_graph(compress(g));
      } else {
        if (!shift_i || !shift_j) throw UsageError("shift needs --i and --j, or --full");
        out << serialize_graph(shift_graph(g, *shift_i, *shift_j));
      }
    } else if (*nu) {
      out << matching_number(parse_graph(read_text_file(input))) << "\n";
    } else if (*cover) {
      std::optional<PartSizes> parts;
      if (parts_text) parts = parse_parts(*parts_text);
      const BipartiteGraph g = load_bipartite(read_text_file(input), parts);
      const VertexCover c = koenig_cover(g);
      std::string line;
      for (int x = 1; x <= g.x_size(); ++x) {
        if (c.x & label_bit(x)) line += (line.empty() ? "" : " ") + std::to_string(x);
      }
      for (int y = 1; y <= g.y_size(); ++y) {
        if (c.y & label_bit(y)) line += (line.empty() ? "Y:" : " Y:") + std::to_string(y);
      }
      out << line << "\n";
    } else if (*count) {
      const PatternSpec p = parse_pattern(pattern_text);
      const std::string text = read_text_file(input);
      BigCount value;
      if (p.family == "bip") {
        std::optional<PartSizes> parts;
        if (parts_text) parts = parse_parts(*parts_text);
        value = count_bip(load_bipartite(text, parts), p.s, p.t);
      } else if (p.family == "clique") {
        value = count_cliques(load_graph(text), p.s);
      } else {
        value = count_star(load_graph(text), p.s, p.t);
      }
      out << to_decimal(value) << "\n";
    } else if (*extremal) {
      BigCount value;
      if (family == "edges") {
        value = ex_edges(*n, *k);
      } else if (family == "clique") {
        value = ex_clique(*n, *k, need(s, "--s", "extremal clique"));
      } else if (family == "star") {
        value = ex_star(*n, *k, need(s, "--s", "extremal star"), need(t, "--t", "extremal star"));
      } else {
        value = ex_bip(*n, *k, need(s, "--s", "extremal bip"), need(t, "--t", "extremal bip"));
      }
      out << to_decimal(value) << "\n";
    } else if (*scan) {
      std::string rows = "param,value\n";
      if (family == "H-clique" || family == "H-star") {
        if (family == "H-star") need(t, "--t", "scan H-star");
        for (int l = *k + 1; l <= 2 * *k + 1; ++l) {
          const BigCount v = family == "H-clique" ? h_count_clique(*n, *k, l, *s)
                                                  : h_count_star(*n, *k, l, *s, *t);
          rows += std::to_string(l) + "," + to_decimal(v) + "\n";
        }
      } else {
        const int tt = need(t, "--t", "scan " + family);
        for (int x = 0; x <= *k; ++x) {
          const BigCount v = family == "bip-f" ? bip_fst(*n, *k, x, *s, tt) : bip_g(*n, *k, x, *s, tt);
          rows += std::to_string(x) + "," + to_decimal(v) + "\n";
        }
      }
      out << rows;
    } else if (*verify) {
      const EnumerationOptions options{jobs, true};
      Report report;
      if (which == "lemma21" || which == "lemma22") {
        const GraphSample sample = samples ? GraphSample::random(*samples, *n, edge_probability, seed)
                                           : GraphSample::all(*n);
        ShiftLemmaChecks checks;
        checks.matching = which == "lemma21";
        checks.counts = which == "lemma22";
        checks.max_s = s.value_or(3);
        checks.max_t = t.value_or(3);
        report = verify_shift_lemmas(sample, checks);
      } else if (which == "lemma31") {
        report = verify_bondy_chvatal(*n);
      } else if (which == "lemma32") {
        report = verify_shifted_structure(*n, need(k, "--k", "verify lemma32"));
      } else if (which == "koenig") {
        if (samples) {
          report = verify_koenig_duality(
              BipartiteSample::random(*samples, *n, *n, edge_probability, seed));
        } else {
          std::vector<std::pair<int, int>> patterns = default_bip_patterns();
          if (s && t) patterns = {{*s, *t}};
          report = verify_koenig_gstar(*n, *n, need(k, "--k", "verify koenig"), patterns);
        }
      } else if (which == "thm11") {
        report = verify_theorem_edges(*n, need(k, "--k", "verify thm11"), options);
      } else if (which == "thm12") {
        report = verify_theorem_clique(*n, need(k, "--k", "verify thm12"),
                                       need(s, "--s", "verify thm12"), options);
      } else if (which == "thm13") {
        report = verify_theorem_star(*n, need(k, "--k", "verify thm13"),
                                     need(s, "--s", "verify thm13"), need(t, "--t", "verify thm13"),
                                     options);
      } else {
        report = verify_theorem_bip(*n, need(k, "--k", "verify thm14"),
                                    need(s, "--s", "verify thm14"), need(t, "--t", "verify thm14"),
                                    options);
      }
      out << (csv ? report.to_csv() : report.to_text());
      return report.ok() ? kExitOk : kExitVerificationFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace shiftturan
