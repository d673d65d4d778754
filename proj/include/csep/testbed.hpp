#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csep/graph.hpp"
#include "csep/patterns.hpp"
#include "csep/separators.hpp"

namespace csep {

inline constexpr int kDefaultEnumerationLimit = 14;

/// All cliques (including the empty set) or all maximal cliques, in canonical order.
std::vector<VertexSet> enumerate_cliques(const Graph& g, bool maximal_only,
                                         int max_vertices = kDefaultEnumerationLimit);
std::vector<VertexSet> enumerate_stable_sets(const Graph& g, bool maximal_only,
                                             int max_vertices = kDefaultEnumerationLimit);

bool check_separation(const Partition& partition, const VertexSet& clique, const VertexSet& stable);

enum class PairMode { all, maximal_seeded };

struct UncoveredPair {
  VertexSet clique;
  VertexSet stable;
};

struct CoverageOptions {
  PairMode mode = PairMode::all;
  /// Cross-check every pair with find_separator.
  bool run_witness = true;
  std::optional<bool> known_membership;
  int workers = 1;
  int max_vertices = kDefaultEnumerationLimit;
};

struct CoverageReport {
  int n = 0;
  int p = 0;
  int q = 0;
  std::uint64_t ramsey_value = 0;
  std::size_t family_size = 0;
  PairMode mode = PairMode::all;
  bool class_member = true;
  std::uint64_t pairs_checked = 0;
  std::vector<UncoveredPair> uncovered;
  std::uint64_t witness_runs = 0;
  std::uint64_t witness_agreements = 0;
  /// First few witness failures, for diagnosis.
  std::vector<std::string> witness_failures;

  double witness_agreement() const {
    return witness_runs == 0 ? 1.0 : static_cast<double>(witness_agreements) / static_cast<double>(witness_runs);
  }
};

/**
 * Checks every disjoint (clique, stable set) pair of G against the family.
 * In maximal-seeded mode only maximal cliques and maximal stable sets are
 * paired, which is a strictly weaker check.
 */
CoverageReport verify_family_covers(const Graph& g, const SeparatorFamily& family, const CoverageOptions& options = {});

/// Naive induced-subgraph test over all |V(H)|-subsets and all bijections.
bool brute_force_contains(const Graph& g, const Graph& h);

/// Brute force against a block pattern; unrestricted pairs range over all completions.
bool brute_force_contains(const Graph& g, const PatternSpec& spec);

Graph gen_random(int n, double edge_prob, std::uint64_t seed);
/// Rejection-samples gen_random until the graph lies in the class.
std::optional<Graph> gen_in_class(int n, double edge_prob, int p, int q, std::uint64_t seed, int max_tries);
/// Random triangle-free graph; its clique number is at most 2.
Graph gen_triangle_free(int n, double edge_prob, std::uint64_t seed);

std::vector<int> random_permutation(int n, std::uint64_t seed);

/// Deterministic seed derivation for sub-streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace csep
