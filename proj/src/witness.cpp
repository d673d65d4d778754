#include "csep/witness.hpp"

#include <string>

#include "csep/errors.hpp"
#include "csep/patterns.hpp"

namespace csep {

namespace {

VertexSet touching(const Graph& g, const VertexSet& x) {
  VertexSet out = g.empty_set();
  for (int v : x) out |= g.neighbors(v);
  return out;
}

// Greedy cover of `target` by members of `candidates`, then a single
// ascending pass dropping members whose removal keeps the target covered.
// One pass suffices: shrinking the cover never makes a kept member redundant.
VertexSet greedy_minimal_cover(const Graph& g, const VertexSet& candidates, const VertexSet& target) {
  VertexSet cover = g.empty_set();
  VertexSet uncovered = target;
  for (int s : candidates) {
    if (uncovered.empty()) break;
    if (g.neighbors(s).intersects(uncovered)) {
      cover.insert(s);
      uncovered -= g.neighbors(s);
    }
  }
  for (int s : cover.members()) {
    VertexSet without = cover;
    without.erase(s);
    if (target.is_subset_of(touching(g, without))) cover = std::move(without);
  }
  return cover;
}

// For each cover vertex, the smallest vertex of `pool` adjacent to it and to
// no other cover vertex.
MinimalCover attach_private_partners(const Graph& g, VertexSet cover, const VertexSet& pool) {
  MinimalCover out{std::move(cover), g.empty_set(), {}};
  for (int s : out.cover) {
    VertexSet others = out.cover;
    others.erase(s);
    const VertexSet privates = (pool & g.neighbors(s)) - touching(g, others);
    const int partner = privates.first();
    if (partner == -1)
      throw InvariantError("minimal cover " + out.cover.to_string() + " has no private partner for " + std::to_string(s));
    out.partners.insert(partner);
    out.matching.emplace_back(s, partner);
  }
  return out;
}

}  // namespace

VertexSet extend_to_maximal(const Graph& g, const VertexSet& x, SetKind kind) {
  require_subset(g, x, "vertex set");
  if (kind == SetKind::clique ? !is_clique(g, x) : !is_stable(g, x))
    throw InputError(x.to_string() + (kind == SetKind::clique ? " is not a clique" : " is not a stable set"));
  VertexSet out = x;
  for (int v = 0; v < g.order(); ++v) {
    if (out.contains(v)) continue;
    const bool fits = kind == SetKind::clique ? out.is_subset_of(g.neighbors(v)) : !g.neighbors(v).intersects(out);
    if (fits) out.insert(v);
  }
  return out;
}

MinimalCover minimal_neighbor_cover(const Graph& g, const VertexSet& k, const VertexSet& s) {
  require_subset(g, k, "K");
  require_subset(g, s, "S");
  const VertexSet reached = touching(g, s);
  if (!k.is_subset_of(reached)) {
    const int orphan = (k - reached).first();
    throw InputError("vertex " + std::to_string(orphan) + " of K has no neighbor in S");
  }
  return attach_private_partners(g, greedy_minimal_cover(g, s, k), k);
}

MinimalCover minimal_z_cover(const Graph& g, const VertexSet& sc, const VertexSet& z) {
  require_subset(g, sc, "SC");
  require_subset(g, z, "Z");
  if (sc.intersects(z)) throw InputError("SC and Z must be disjoint");
  const VertexSet target = touching(g, sc) & z;
  return attach_private_partners(g, greedy_minimal_cover(g, sc, target), z);
}

std::string_view to_string(SeparatorBranch branch) {
  switch (branch) {
    case SeparatorBranch::intersection_p1: return "intersection-P1";
    case SeparatorBranch::small_cover_p1: return "small-cover-P1";
    case SeparatorBranch::triple_p2: return "triple-P2";
  }
  return "unknown";
}

WitnessReport find_separator(const Graph& g, int p, int q, const VertexSet& k, const VertexSet& s,
                             const WitnessOptions& options) {
  if (p < 1 || q < 1) throw InputError("p and q must be >= 1");
  require_subset(g, k, "K");
  require_subset(g, s, "S");
  if (!is_clique(g, k)) throw InputError("K = " + k.to_string() + " is not a clique");
  if (!is_stable(g, s)) throw InputError("S = " + s.to_string() + " is not a stable set");
  if (k.intersects(s)) throw InputError("K and S must be disjoint");

  WitnessReport report;
  report.ramsey_value = ramsey_upper(q, options.ramsey).value;
  report.class_member = options.known_membership ? *options.known_membership : is_in_class(g, p, q);
  auto& trace = report.trace;
  trace.k_max = extend_to_maximal(g, k, SetKind::clique);
  trace.s_max = extend_to_maximal(g, s, SetKind::stable);
  for (auto* empty : {&trace.s1_cover, &trace.k1_cover, &trace.k1, &trace.s1, &trace.z, &trace.sc, &trace.s2, &trace.w})
    *empty = g.empty_set();

  auto finish = [&]() -> WitnessReport {
    if (report.class_member && !report.partition.separates(k, s))
      throw InvariantError("witness partition " + report.partition.x_side().to_string() + " does not separate K=" +
                           k.to_string() + ", S=" + s.to_string());
    return report;
  };

  // A maximal clique and a maximal stable set share at most one vertex.
  const VertexSet shared = trace.k_max & trace.s_max;
  if (!shared.empty()) {
    const int v = shared.first();
    trace.v = v;
    const VertexSet generator(g.order(), {v});
    const bool open = s.contains(v);
    report.branch = SeparatorBranch::intersection_p1;
    report.partition = Partition(neighbors(g, generator, open ? Neighborhood::open : Neighborhood::closed));
    const bool in_p1 = p >= 2;
    report.provenance.source = open ? (in_p1 ? PartitionSource::p1_open : PartitionSource::singleton_open)
                                    : (in_p1 ? PartitionSource::p1_closed : PartitionSource::singleton_closed);
    report.provenance.generator = generator;
    return finish();
  }

  const MinimalCover cover = minimal_neighbor_cover(g, trace.k_max, trace.s_max);
  trace.s1_cover = cover.cover;
  trace.k1_cover = cover.partners;
  if (cover.cover.size() < p) {
    report.branch = SeparatorBranch::small_cover_p1;
    report.partition = Partition(neighbors(g, cover.cover, Neighborhood::open));
    report.provenance.source = PartitionSource::p1_open;
    report.provenance.generator = cover.cover;
    return finish();
  }

  report.branch = SeparatorBranch::triple_p2;
  for (int i = 0; i < p; ++i) {
    const auto [s_vertex, k_vertex] = cover.matching[static_cast<std::size_t>(i)];
    trace.s1.insert(s_vertex);
    trace.k1.insert(k_vertex);
  }
  const TripleX partial{trace.k1, trace.s1, g.empty_set()};
  trace.z = z_set(g, partial);
  trace.sc = (trace.s_max - trace.s1) & complete_to(g, trace.k1);
  const MinimalCover z_cover = minimal_z_cover(g, trace.sc, trace.z);
  trace.s2 = z_cover.cover;
  trace.w = z_cover.partners;

  const TripleX triple{trace.k1, trace.s1, trace.s2};
  report.s2_within_bound = static_cast<std::uint64_t>(trace.s2.size()) < report.ramsey_value;
  if (!report.s2_within_bound && report.class_member) {
    throw InvariantError("|S2| = " + std::to_string(trace.s2.size()) + " reached R = " +
                         std::to_string(report.ramsey_value) + " on a class member; K1 u S1 u S2 u W = " +
                         (trace.k1 | trace.s1 | trace.s2 | trace.w).to_string() + " induces F_{p,|S2|}");
  }
  report.partition = a_x(g, triple);
  report.provenance.source = PartitionSource::p2;
  report.provenance.generator = g.empty_set();
  report.provenance.triple = triple;
  return finish();
}

}  // namespace csep
