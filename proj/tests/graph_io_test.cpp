#include <gtest/gtest.h>

#include <sstream>

#include "csep/errors.hpp"
#include "csep/graph_io.hpp"
#include "csep/testbed.hpp"
#include "fixtures.hpp"

using namespace csep;

namespace {

Graph read(const std::string& text, GraphFormat format = GraphFormat::edgelist) {
  std::istringstream in(text);
  return read_graph(in, format);
}

int error_line(const std::string& text, GraphFormat format = GraphFormat::edgelist) {
  try {
    read(text, format);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(GraphIo, EdgelistPath) { EXPECT_EQ(read("3 2\n0 1\n1 2"), fixtures::path(3)); }

TEST(GraphIo, SelfLoopReportsLine) {
  EXPECT_EQ(error_line("2 1\n0 0"), 2);
  try {
    read("2 1\n0 0");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(GraphIo, DimacsTriangle) {
  EXPECT_EQ(read("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::dimacs), fixtures::complete(3));
}

TEST(GraphIo, MalformedInputs) {
  EXPECT_EQ(error_line("3 2\n0 1\n1 x\n"), 3);
  EXPECT_EQ(error_line("3 1\n0 5\n"), 2);
  EXPECT_EQ(error_line("3 2\n0 1 7\n1 2\n"), 2);
  EXPECT_EQ(error_line("three 2\n"), 1);
  EXPECT_NE(error_line("3 2\n0 1\n"), -1);
  EXPECT_EQ(error_line("p edge 3 1\ne 0 1\n", GraphFormat::dimacs), 2);
  EXPECT_EQ(error_line("e 1 2\n", GraphFormat::dimacs), 1);
  EXPECT_THROW(parse_graph("/nonexistent/graph.txt", GraphFormat::edgelist), InputError);
  EXPECT_THROW(parse_graph_format("graphml"), InputError);
}

TEST(GraphIo, BlankLinesAndDuplicates) {
  const Graph g = read("\n3 3\n\n0 1\n1 0\n1 2\n");
  EXPECT_EQ(g, fixtures::path(3));
}

TEST(GraphIo, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_random(9, 0.4, seed);
    for (auto format : {GraphFormat::edgelist, GraphFormat::dimacs}) {
      std::ostringstream out;
      write_graph(out, g, format);
      EXPECT_EQ(read(out.str(), format), g);
    }
  }
}
