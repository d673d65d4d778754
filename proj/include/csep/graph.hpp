#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "csep/vertex_set.hpp"

namespace csep {

using Edge = std::pair<int, int>;

/**
 * Immutable finite simple graph on vertices 0..n-1 with one adjacency bitset
 * per vertex. Construction rejects self-loops and out-of-range endpoints and
 * collapses duplicate edges, so every Graph is symmetric and loop-free.
 */
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(rows_.size()); }
  std::size_t edge_count() const;

  bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return neighbors(v).size(); }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }
  /// All edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<VertexSet> rows_;
};

enum class Neighborhood { open, closed };

/// N(X) (open) or N[X] (closed). N(X) never meets X.
VertexSet neighbors(const Graph& g, const VertexSet& x, Neighborhood mode = Neighborhood::open);

bool is_clique(const Graph& g, const VertexSet& x);
bool is_stable(const Graph& g, const VertexSet& x);

struct SetRelation {
  bool complete = false;
  bool anticomplete = false;
  bool matched = false;
};

/// Complete / anticomplete / matched status of two disjoint sets.
SetRelation relation(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Vertices outside X adjacent to every vertex of X. For X empty this is V(G).
VertexSet complete_to(const Graph& g, const VertexSet& x);
/// Vertices outside X with no neighbor in X.
VertexSet anticomplete_to(const Graph& g, const VertexSet& x);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;    // new index -> old index
  std::vector<int> from_original;  // old index -> new index, or -1
};

/// G[X], relabelled in ascending order of the original indices.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/**
 * A partition (X, V \ X) of the vertex set, stored as its X side. X is the
 * side meant to contain cliques.
 */
class Partition {
 public:
  Partition() = default;
  explicit Partition(VertexSet x_side) : x_side_(std::move(x_side)) {}

  const VertexSet& x_side() const { return x_side_; }
  VertexSet y_side() const { return x_side_.complement(); }

  /// K within X and S within Y.
  bool separates(const VertexSet& clique, const VertexSet& stable) const;

  bool operator==(const Partition& other) const = default;
  auto operator<=>(const Partition& other) const = default;

 private:
  VertexSet x_side_;
};

/// Throws InputError unless X lives on G's vertex set.
void require_subset(const Graph& g, const VertexSet& x, const char* what);

}  // namespace csep
