#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "csep/graph.hpp"

namespace csep {

enum class GraphFormat { edgelist, dimacs };

GraphFormat parse_graph_format(std::string_view name);

/**
 * edgelist: a header line "n m", then m lines "u v" with 0-based vertices.
 * dimacs:   "c" comment lines, a "p edge n m" header, then "e u v" lines
 *           with 1-based vertices.
 * Duplicate edges collapse. Malformed lines and self-loops raise ParseError
 * carrying the line number.
 */
Graph read_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& path, GraphFormat format);

void write_graph(std::ostream& out, const Graph& g, GraphFormat format);

}  // namespace csep
