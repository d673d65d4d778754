#include "csep/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "csep/errors.hpp"

namespace csep {

namespace {

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

// Reads exactly `count` integers and nothing else.
std::vector<long long> integers(std::istringstream& in, int count, int line_no, const char* what) {
  std::vector<long long> out(static_cast<std::size_t>(count));
  for (auto& value : out)
    if (!(in >> value)) throw ParseError(line_no, std::string("expected ") + what);
  std::string extra;
  if (in >> extra) throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
  return out;
}

Edge checked_edge(long long u, long long v, long long n, int line_no) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw ParseError(line_no, "vertex out of range in edge " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
  return {static_cast<int>(u), static_cast<int>(v)};
}

Graph read_edgelist(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      const auto header = integers(fields, 2, line_no, "header 'n m'");
      n = header[0];
      m = header[1];
      if (n < 0 || m < 0) throw ParseError(line_no, "negative vertex or edge count");
      continue;
    }
    const auto uv = integers(fields, 2, line_no, "edge 'u v'");
    edges.push_back(checked_edge(uv[0], uv[1], n, line_no));
  }
  if (n < 0) throw ParseError(line_no + 1, "missing header 'n m'");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate problem line");
      std::string kind;
      fields >> kind;
      if (kind != "edge" && kind != "col") throw ParseError(line_no, "expected 'p edge n m'");
      const auto header = integers(fields, 2, line_no, "'p edge n m'");
      n = header[0];
      if (n < 0 || header[1] < 0) throw ParseError(line_no, "negative vertex or edge count");
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw ParseError(line_no, "edge before problem line");
      const auto uv = integers(fields, 2, line_no, "'e u v'");
      edges.push_back(checked_edge(uv[0] - 1, uv[1] - 1, n, line_no));
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + tag + "'");
  }
  if (n < 0) throw ParseError(line_no + 1, "missing problem line");
  return Graph(static_cast<int>(n), edges);
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

Graph read_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::dimacs ? read_dimacs(in) : read_edgelist(in);
}

Graph parse_graph(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graph(in, format);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  const auto edges = g.edges();
  if (format == GraphFormat::dimacs) {
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  }
}

}  // namespace csep
