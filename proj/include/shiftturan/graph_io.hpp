#pragma once

#include <string>
#include <string_view>

#include "shiftturan/graph.hpp"

namespace shiftturan {

// Edge-list text format:
//
//   n m
//   u v        (m lines)
//
// Decimal fields, LF line endings, no comments. Serialization always writes
// u < v with edges in lexicographic order and a trailing LF. Parsing also
// accepts u > v and any edge order, and a missing final LF.
//
// The bipartite variant has header "nx ny m" and lines "x y" with x in
// 1..nx, y in 1..ny.

/// Throws ParseError (with a distinct ParseErrorKind per failure class).
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

BipartiteGraph parse_bipartite(std::string_view text);
std::string serialize_bipartite(const BipartiteGraph& g);

/// Number of fields on the first non-empty line: 2 for a general graph,
/// 3 for a bipartite one. Returns 0 if the text has no header.
int header_field_count(std::string_view text);

/// Reads a whole file; throws std::runtime_error on I/O failure.
std::string read_text_file(const std::string& path);

}  // namespace shiftturan
