#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "csep/graph.hpp"
#include "csep/ramsey.hpp"
#include "csep/separators.hpp"

namespace csep {

enum class SetKind { clique, stable };

/// Greedy extension by ascending vertex index to a maximal clique or stable set.
VertexSet extend_to_maximal(const Graph& g, const VertexSet& x, SetKind kind);

/// An inclusion-minimal cover together with a matched set of private partners.
struct MinimalCover {
  VertexSet cover;
  VertexSet partners;
  /// (cover vertex, its private partner), ascending by cover vertex.
  std::vector<std::pair<int, int>> matching;
};

/**
 * Minimal S1' within S such that every vertex of K has a neighbor in S1',
 * plus K1' within K matched to S1'. Candidates are taken in ascending order
 * until K is covered, then redundant picks are dropped in ascending order.
 */
MinimalCover minimal_neighbor_cover(const Graph& g, const VertexSet& k, const VertexSet& s);

/**
 * Minimal S2 within SC with N(S2) and N(SC) meeting Z in the same set, plus
 * W within Z matched to S2. Empty when no vertex of SC has a neighbor in Z.
 */
MinimalCover minimal_z_cover(const Graph& g, const VertexSet& sc, const VertexSet& z);

enum class SeparatorBranch { intersection_p1, small_cover_p1, triple_p2 };

std::string_view to_string(SeparatorBranch branch);

/// Intermediate sets of the separation argument. Unused fields stay empty.
struct WitnessTrace {
  VertexSet k_max;
  VertexSet s_max;
  std::optional<int> v;
  VertexSet s1_cover;
  VertexSet k1_cover;
  VertexSet k1;
  VertexSet s1;
  VertexSet z;
  VertexSet sc;
  VertexSet s2;
  VertexSet w;
};

struct WitnessReport {
  Partition partition;
  SeparatorBranch branch = SeparatorBranch::intersection_p1;
  Provenance provenance;
  WitnessTrace trace;
  std::uint64_t ramsey_value = 0;
  /// Whether G was known to lie in the class when the witness ran.
  bool class_member = true;
  /// |S2| < R. Always true on class members.
  bool s2_within_bound = true;
};

struct WitnessOptions {
  RamseyMode ramsey = RamseyMode::tight;
  /// Skip the membership test when the caller already knows the answer.
  std::optional<bool> known_membership;
};

/**
 * Runs the separation argument on a disjoint clique K and stable set S and
 * returns a partition with K on the X side and S on the Y side, drawn from
 * full_family(g, p, q) under pruned mode with empty S2 allowed.
 *
 * Throws InputError if K is not a clique, S is not stable, or they meet.
 * Throws InvariantError if G is in the class but |S2| reaches R.
 */
WitnessReport find_separator(const Graph& g, int p, int q, const VertexSet& k, const VertexSet& s,
                             const WitnessOptions& options = {});

}  // namespace csep
