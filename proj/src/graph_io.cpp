#include "shiftturan/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "shiftturan/errors.hpp"

namespace shiftturan {
namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back({number++, text.substr(start, end - start)});
    start = end + 1;
  }
  while (!lines.empty() && lines.back().text.empty()) lines.pop_back();
  return lines;
}

std::vector<long long> parse_fields(const Line& line, std::size_t expected) {
  std::vector<long long> fields;
  std::string_view rest = line.text;
  while (!rest.empty()) {
    std::size_t skip = rest.find_first_not_of(' ');
    if (skip == std::string_view::npos) break;
    rest.remove_prefix(skip);
    std::size_t len = rest.find(' ');
    std::string_view token = rest.substr(0, len);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw ParseError(ParseErrorKind::kMalformed, line.number,
                       "expected a non-negative decimal, got '" + std::string(token) + "'");
    }
    fields.push_back(value);
    rest.remove_prefix(token.size());
  }
  if (fields.size() != expected) {
    throw ParseError(ParseErrorKind::kMalformed, line.number,
                     "expected " + std::to_string(expected) + " fields, got " +
                         std::to_string(fields.size()));
  }
  return fields;
}

void check_edge_lines(const std::vector<Line>& lines, long long m) {
  const auto have = static_cast<long long>(lines.size()) - 1;
  if (have != m) {
    const int at = have < m ? (lines.empty() ? 1 : lines.back().number)
                            : lines[static_cast<std::size_t>(m) + 1].number;
    throw ParseError(ParseErrorKind::kMalformed, at,
                     "header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(have));
  }
}

}  // namespace

int header_field_count(std::string_view text) {
  for (const Line& line : split_lines(text)) {
    if (line.text.find_first_not_of(' ') == std::string_view::npos) continue;
    std::istringstream in{std::string(line.text)};
    int count = 0;
    for (std::string token; in >> token;) ++count;
    return count;
  }
  return 0;
}

Graph parse_graph(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::kMalformed, 1, "missing header");
  const auto header = parse_fields(lines[0], 2);
  if (header[0] > kMaxVertices) {
    throw ParseError(ParseErrorKind::kMalformed, 1, "vertex count above 64");
  }
  check_edge_lines(lines, header[1]);
  const int n = static_cast<int>(header[0]);
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = parse_fields(lines[i], 2);
    const int line = lines[i].number;
    if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n) {
      throw ParseError(ParseErrorKind::kLabelOutOfRange, line,
                       "edge label outside 1.." + std::to_string(n));
    }
    if (uv[0] == uv[1]) {
      throw ParseError(ParseErrorKind::kSelfLoop, line,
                       "self-loop at " + std::to_string(uv[0]));
    }
    if (!g.add_edge(static_cast<int>(uv[0]), static_cast<int>(uv[1]))) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, line,
                       "duplicate edge " + std::to_string(uv[0]) + " " + std::to_string(uv[1]));
    }
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

BipartiteGraph parse_bipartite(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::kMalformed, 1, "missing header");
  const auto header = parse_fields(lines[0], 3);
  if (header[0] > kMaxVertices || header[1] > kMaxVertices) {
    throw ParseError(ParseErrorKind::kMalformed, 1, "part size above 64");
  }
  check_edge_lines(lines, header[2]);
  const int nx = static_cast<int>(header[0]);
  const int ny = static_cast<int>(header[1]);
  BipartiteGraph g(nx, ny);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto xy = parse_fields(lines[i], 2);
    const int line = lines[i].number;
    if (xy[0] < 1 || xy[0] > nx || xy[1] < 1 || xy[1] > ny) {
      throw ParseError(ParseErrorKind::kLabelOutOfRange, line, "edge label outside its part");
    }
    if (!g.add_edge(static_cast<int>(xy[0]), static_cast<int>(xy[1]))) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, line,
                       "duplicate edge " + std::to_string(xy[0]) + " " + std::to_string(xy[1]));
    }
  }
  return g;
}

std::string serialize_bipartite(const BipartiteGraph& g) {
  std::string out = std::to_string(g.x_size()) + " " + std::to_string(g.y_size()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read " + path);
  return buffer.str();
}

}  // namespace shiftturan
