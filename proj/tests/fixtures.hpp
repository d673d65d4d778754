#pragma once

#include <vector>

#include "csep/graph.hpp"

namespace fixtures {

inline csep::Graph path(int n) {
  std::vector<csep::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return csep::Graph(n, edges);
}

inline csep::Graph cycle(int n) {
  std::vector<csep::Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return csep::Graph(n, edges);
}

inline csep::Graph complete(int n) {
  std::vector<csep::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return csep::Graph(n, edges);
}

inline csep::Graph petersen() {
  std::vector<csep::Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return csep::Graph(10, edges);
}

inline csep::VertexSet set(int n, std::initializer_list<int> members) { return csep::VertexSet(n, members); }

}  // namespace fixtures
