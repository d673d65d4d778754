#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "csep/graph.hpp"
#include "csep/ramsey.hpp"

namespace csep {

/// (K1, S1, S2): the generator of one A_X partition.
struct TripleX {
  VertexSet k1;
  VertexSet s1;
  VertexSet s2;

  bool operator==(const TripleX&) const = default;
};

enum class FamilyMode { pruned, faithful };

struct FamilyOptions {
  RamseyMode ramsey = RamseyMode::tight;
  FamilyMode mode = FamilyMode::pruned;
  /// Also generate triples with S2 empty.
  bool allow_empty_s2 = true;
  /// For p = 1, add (N[{v}], .) and (N({v}), .) for every vertex v.
  bool singleton_neighborhoods = true;
  /// Upper limit on enumerated triples.
  std::uint64_t budget = 10'000'000;

  bool operator==(const FamilyOptions&) const = default;
};

enum class PartitionSource { p1_closed, p1_open, singleton_closed, singleton_open, p2 };

std::string_view to_string(PartitionSource source);

struct Provenance {
  PartitionSource source = PartitionSource::p1_closed;
  /// Neighborhood generator for the P1 and singleton sources.
  VertexSet generator;
  /// Triple for the P2 source.
  std::optional<TripleX> triple;
  /// Set by complement_family: the stored partition is the swap of the generated one.
  bool swapped = false;
};

struct FamilyEntry {
  Partition partition;
  Provenance provenance;
};

struct FamilyCounts {
  std::uint64_t p1_raw = 0;
  std::uint64_t p1_unique = 0;
  std::uint64_t singleton_raw = 0;
  std::uint64_t p2_raw = 0;
  std::uint64_t p2_unique = 0;
  std::uint64_t total_raw = 0;
};

/**
 * A deduplicated family of partitions of one graph's vertex set, kept sorted
 * by X side. Each X side keeps the first generator that produced it.
 */
class SeparatorFamily {
 public:
  SeparatorFamily() = default;
  SeparatorFamily(int n, int p, int q, std::uint64_t ramsey_value, FamilyOptions options)
      : n_(n), p_(p), q_(q), ramsey_value_(ramsey_value), options_(options) {}

  int order() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  std::uint64_t ramsey_value() const { return ramsey_value_; }
  const FamilyOptions& options() const { return options_; }

  const std::vector<FamilyEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const FamilyCounts& counts() const { return counts_; }
  FamilyCounts& counts() { return counts_; }

  /// Adds the partition unless its X side is already present. Returns true if added.
  bool add(Partition partition, Provenance provenance);
  /// Restores canonical order; call once after the last add().
  void finalize();

  bool contains(const VertexSet& x_side) const { return index_.count(x_side) != 0; }
  const FamilyEntry* find(const VertexSet& x_side) const;

 private:
  void reindex();

  int n_ = 0;
  int p_ = 0;
  int q_ = 0;
  std::uint64_t ramsey_value_ = 0;
  FamilyOptions options_;
  std::vector<FamilyEntry> entries_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_;
  FamilyCounts counts_;
};

/// Neighborhood partitions of every X with |X| < p.
SeparatorFamily p1_family(const Graph& g, int p);

/// The A_X side of the partition generated by a triple.
Partition a_x(const Graph& g, const TripleX& triple);

/// The Z set of a triple: vertices outside K1 u S1 with no neighbor there.
VertexSet z_set(const Graph& g, const TripleX& triple);

/// True iff the triple satisfies the structural conditions enumerated in pruned mode.
bool is_structured_triple(const Graph& g, const TripleX& triple);

SeparatorFamily p2_family(const Graph& g, int p, int q, const FamilyOptions& options = {});

SeparatorFamily full_family(const Graph& g, int p, int q, const FamilyOptions& options = {});

/// Swaps the sides of every partition.
SeparatorFamily complement_family(const SeparatorFamily& family);

/// Recomputes a provenance entry's partition from its generator.
Partition regenerate(const Graph& g, const Provenance& provenance);

/// Number of disjoint triples the faithful enumeration visits (saturating).
std::uint64_t faithful_triple_count(int n, int p, std::uint64_t ramsey_value, bool allow_empty_s2);

/// 2 * sum_{i<p} C(n, i), saturating.
std::uint64_t p1_raw_count(int n, int p);

/// |P1| <= 2 n^p
bool p1_bound_holds(int n, int p, std::uint64_t count);
/// |P2| < n^{2p + 2^{2q}}
bool p2_bound_holds(int n, int p, int q, std::uint64_t count);

}  // namespace csep
