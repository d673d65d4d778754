#include "csep/graph.hpp"

#include <string>

#include "csep/errors.hpp"

namespace csep {

Graph::Graph(int n) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    rows_[static_cast<std::size_t>(u)].insert(v);
    rows_[static_cast<std::size_t>(v)].insert(u);
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += static_cast<std::size_t>(row.size());
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v = neighbors(u).next(u); v != -1; v = neighbors(u).next(v)) out.emplace_back(u, v);
  }
  return out;
}

void require_subset(const Graph& g, const VertexSet& x, const char* what) {
  if (x.universe() != g.order()) {
    throw InputError(std::string(what) + " " + x.to_string() + " is not a vertex set of a graph on " +
                     std::to_string(g.order()) + " vertices");
  }
}

VertexSet neighbors(const Graph& g, const VertexSet& x, Neighborhood mode) {
  require_subset(g, x, "vertex set");
  VertexSet out = g.empty_set();
  for (int v : x) out |= g.neighbors(v);
  if (mode == Neighborhood::open) {
    out -= x;
  } else {
    out |= x;
  }
  return out;
}

bool is_clique(const Graph& g, const VertexSet& x) {
  require_subset(g, x, "vertex set");
  for (int v : x) {
    VertexSet others = x;
    others.erase(v);
    if (!others.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_stable(const Graph& g, const VertexSet& x) {
  require_subset(g, x, "vertex set");
  for (int v : x)
    if (g.neighbors(v).intersects(x)) return false;
  return true;
}

SetRelation relation(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_subset(g, x, "vertex set");
  require_subset(g, y, "vertex set");
  if (x.intersects(y)) throw InputError("relation needs disjoint sets, got " + x.to_string() + " and " + y.to_string());

  SetRelation r{true, true, true};
  auto scan = [&](const VertexSet& from, const VertexSet& to) {
    const int target = to.size();
    for (int v : from) {
      const int hits = (g.neighbors(v) & to).size();
      if (hits != target) r.complete = false;
      if (hits != 0) r.anticomplete = false;
      if (hits != 1) r.matched = false;
    }
  };
  scan(x, y);
  scan(y, x);
  return r;
}

VertexSet complete_to(const Graph& g, const VertexSet& x) {
  require_subset(g, x, "vertex set");
  VertexSet out = g.vertices() - x;
  for (int v : x) out &= g.neighbors(v);
  return out;
}

VertexSet anticomplete_to(const Graph& g, const VertexSet& x) {
  return g.vertices() - neighbors(g, x, Neighborhood::closed);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
  require_subset(g, x, "vertex set");
  InducedSubgraph out;
  out.to_original = x.members();
  out.from_original.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i)
    out.from_original[static_cast<std::size_t>(out.to_original[i])] = static_cast<int>(i);

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    const int nu = out.from_original[static_cast<std::size_t>(u)];
    const int nv = out.from_original[static_cast<std::size_t>(v)];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  out.graph = Graph(static_cast<int>(out.to_original.size()), edges);
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InputError("permutation size does not match graph order");
  VertexSet seen(g.order());
  for (int v : perm) {
    if (seen.contains(v)) throw InputError("relabelling is not a permutation");
    seen.insert(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph(g.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

bool Partition::separates(const VertexSet& clique, const VertexSet& stable) const {
  return clique.is_subset_of(x_side_) && !stable.intersects(x_side_);
}

}  // namespace csep
