#include "csep/separators.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "csep/errors.hpp"

namespace csep {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return (a > kSaturated - b) ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return (a > kSaturated / b) ? kSaturated : a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    out = sat_mul(out, base);
    if (out == kSaturated || out == 0) break;
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n-k+i) is divisible by i; split i across both factors to stay exact.
    const auto g = std::gcd(result, static_cast<std::uint64_t>(i));
    result = sat_mul(result / g, static_cast<std::uint64_t>(n - k + i) / (static_cast<std::uint64_t>(i) / g));
    if (result == kSaturated) return kSaturated;
  }
  return result;
}

// "v has a neighbor in X", with no exclusion of X itself.
VertexSet touching(const Graph& g, const VertexSet& x) {
  VertexSet out = g.empty_set();
  for (int v : x) out |= g.neighbors(v);
  return out;
}

// Calls visit(subset) for every k-subset of pool in lexicographic order.
// A false return from visit stops the walk.
bool for_each_subset(const std::vector<int>& pool, int k, int universe,
                     const std::function<bool(const VertexSet&)>& visit) {
  VertexSet current(universe);
  std::function<bool(std::size_t, int)> rec = [&](std::size_t start, int remaining) -> bool {
    if (remaining == 0) return visit(current);
    for (std::size_t i = start; i + static_cast<std::size_t>(remaining) <= pool.size(); ++i) {
      current.insert(pool[i]);
      if (!rec(i + 1, remaining - 1)) return false;
      current.erase(pool[i]);
    }
    return true;
  };
  return rec(0, k);
}

// Stable subsets of pool with size in [min_size, max_size], by size then lexicographically.
void for_each_stable_subset(const Graph& g, const std::vector<int>& pool, int min_size, int max_size,
                            const std::function<void(const VertexSet&)>& visit) {
  VertexSet current = g.empty_set();
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      visit(current);
      return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(remaining) <= pool.size(); ++i) {
      const int v = pool[i];
      if (g.neighbors(v).intersects(current)) continue;
      current.insert(v);
      rec(i + 1, remaining - 1);
      current.erase(v);
    }
  };
  for (int size = min_size; size <= max_size; ++size) rec(0, size);
}

void require_params(int p, int q) {
  if (p < 1) throw InputError("p must be >= 1 (got " + std::to_string(p) + ")");
  if (q < 1) throw InputError("q must be >= 1 (got " + std::to_string(q) + ")");
}

void emit_p1(const Graph& g, int p, std::uint64_t budget,
             const std::function<void(Partition, Provenance)>& emit) {
  const auto raw = p1_raw_count(g.order(), p);
  if (raw > budget)
    throw ResourceError("P1 would generate " + std::to_string(raw) + " partitions, budget is " + std::to_string(budget));
  const auto pool = g.vertices().members();
  for (int size = 0; size < p && size <= g.order(); ++size) {
    for_each_subset(pool, size, g.order(), [&](const VertexSet& x) {
      emit(Partition(neighbors(g, x, Neighborhood::closed)), Provenance{PartitionSource::p1_closed, x, std::nullopt});
      emit(Partition(neighbors(g, x, Neighborhood::open)), Provenance{PartitionSource::p1_open, x, std::nullopt});
      return true;
    });
  }
}

void emit_singletons(const Graph& g, const std::function<void(Partition, Provenance)>& emit) {
  for (int v = 0; v < g.order(); ++v) {
    VertexSet x(g.order(), {v});
    emit(Partition(neighbors(g, x, Neighborhood::closed)), Provenance{PartitionSource::singleton_closed, x, std::nullopt});
    emit(Partition(neighbors(g, x, Neighborhood::open)), Provenance{PartitionSource::singleton_open, x, std::nullopt});
  }
}

struct S2Range {
  int min_size;
  int max_size;
};

S2Range s2_range(int n, int p, std::uint64_t ramsey_value, bool allow_empty_s2) {
  const int room = std::max(0, n - 2 * p);
  const auto cap = ramsey_value == 0 ? std::uint64_t{0} : ramsey_value - 1;
  return {allow_empty_s2 ? 0 : 1, static_cast<int>(std::min<std::uint64_t>(cap, static_cast<std::uint64_t>(room)))};
}

void emit_faithful_triples(const Graph& g, int p, std::uint64_t ramsey_value, const FamilyOptions& options,
                           const std::function<void(const TripleX&)>& emit) {
  const int n = g.order();
  const auto count = faithful_triple_count(n, p, ramsey_value, options.allow_empty_s2);
  if (count > options.budget)
    throw ResourceError("faithful P2 enumeration needs " + std::to_string(count) + " triples, budget is " +
                        std::to_string(options.budget));
  const auto range = s2_range(n, p, ramsey_value, options.allow_empty_s2);
  const auto all = g.vertices().members();
  for_each_subset(all, p, n, [&](const VertexSet& k1) {
    const auto rest = (g.vertices() - k1).members();
    return for_each_subset(rest, p, n, [&](const VertexSet& s1) {
      const auto pool = (g.vertices() - k1 - s1).members();
      for (int size = range.min_size; size <= range.max_size; ++size) {
        for_each_subset(pool, size, n, [&](const VertexSet& s2) {
          emit(TripleX{k1, s1, s2});
          return true;
        });
      }
      return true;
    });
  });
}

void emit_structured_triples(const Graph& g, int p, std::uint64_t ramsey_value, const FamilyOptions& options,
                             const std::function<void(const TripleX&)>& emit) {
  const int n = g.order();
  const auto range = s2_range(n, p, ramsey_value, options.allow_empty_s2);
  std::uint64_t visited = 0;
  auto guarded_emit = [&](const TripleX& t) {
    if (++visited > options.budget)
      throw ResourceError("pruned P2 enumeration exceeded the budget of " + std::to_string(options.budget) + " triples");
    emit(t);
  };

  // K1: p-cliques in lexicographic order.
  VertexSet k1 = g.empty_set();
  std::vector<int> k1_list;
  std::function<void(int, const VertexSet&)> grow_clique;

  auto with_k1 = [&]() {
    // Private neighbors of each K1 vertex: adjacent to it and to no other K1 vertex.
    std::vector<VertexSet> privates;
    for (int k : k1_list) {
      VertexSet others = k1;
      others.erase(k);
      privates.push_back(g.neighbors(k) - k1 - touching(g, others));
    }
    VertexSet s1 = g.empty_set();
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
      if (i == privates.size()) {
        const VertexSet pool = complete_to(g, k1) - s1 - touching(g, s1);
        for_each_stable_subset(g, pool.members(), range.min_size, range.max_size,
                               [&](const VertexSet& s2) { guarded_emit(TripleX{k1, s1, s2}); });
        return;
      }
      const VertexSet options_here = privates[i] - touching(g, s1);
      for (int s : options_here) {
        s1.insert(s);
        pick(i + 1);
        s1.erase(s);
      }
    };
    pick(0);
  };

  grow_clique = [&](int start, const VertexSet& candidates) {
    if (static_cast<int>(k1_list.size()) == p) {
      with_k1();
      return;
    }
    for (int v = candidates.next(start - 1); v != -1; v = candidates.next(v)) {
      k1.insert(v);
      k1_list.push_back(v);
      grow_clique(v + 1, candidates & g.neighbors(v));
      k1_list.pop_back();
      k1.erase(v);
    }
  };
  grow_clique(0, g.vertices());
}

}  // namespace

std::string_view to_string(PartitionSource source) {
  switch (source) {
    case PartitionSource::p1_closed: return "P1-closed";
    case PartitionSource::p1_open: return "P1-open";
    case PartitionSource::singleton_closed: return "singleton-closed";
    case PartitionSource::singleton_open: return "singleton-open";
    case PartitionSource::p2: return "P2";
  }
  return "unknown";
}

bool SeparatorFamily::add(Partition partition, Provenance provenance) {
  if (partition.x_side().universe() != n_) throw InputError("partition does not live on this family's vertex set");
  if (index_.count(partition.x_side()) != 0) return false;
  index_.emplace(partition.x_side(), entries_.size());
  entries_.push_back(FamilyEntry{std::move(partition), std::move(provenance)});
  return true;
}

void SeparatorFamily::finalize() {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const FamilyEntry& a, const FamilyEntry& b) { return a.partition < b.partition; });
  reindex();
}

void SeparatorFamily::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].partition.x_side(), i);
}

const FamilyEntry* SeparatorFamily::find(const VertexSet& x_side) const {
  auto it = index_.find(x_side);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

VertexSet z_set(const Graph& g, const TripleX& triple) { return anticomplete_to(g, triple.k1 | triple.s1); }

Partition a_x(const Graph& g, const TripleX& t) {
  require_subset(g, t.k1, "K1");
  require_subset(g, t.s1, "S1");
  require_subset(g, t.s2, "S2");
  if (t.k1.empty() || t.k1.size() != t.s1.size())
    throw InputError("triple needs |K1| = |S1| >= 1 (got " + t.k1.to_string() + ", " + t.s1.to_string() + ")");
  if (t.k1.intersects(t.s1) || t.k1.intersects(t.s2) || t.s1.intersects(t.s2))
    throw InputError("triple sets are not pairwise disjoint");

  const VertexSet z = z_set(g, t);
  const VertexSet free_z = z - neighbors(g, t.s2, Neighborhood::open);
  const VertexSet first = t.k1 | complete_to(g, t.k1);
  const VertexSet second = touching(g, t.s1) | touching(g, free_z);
  return Partition(first & second);
}

bool is_structured_triple(const Graph& g, const TripleX& t) {
  if (t.k1.intersects(t.s1) || t.k1.intersects(t.s2) || t.s1.intersects(t.s2)) return false;
  return is_clique(g, t.k1) && is_stable(g, t.s1) && is_stable(g, t.s2) && relation(g, t.k1, t.s1).matched &&
         relation(g, t.k1, t.s2).complete && relation(g, t.s1, t.s2).anticomplete;
}

std::uint64_t p1_raw_count(int n, int p) {
  std::uint64_t total = 0;
  for (int i = 0; i < p; ++i) total = sat_add(total, binomial(n, i));
  return sat_mul(2, total);
}

std::uint64_t faithful_triple_count(int n, int p, std::uint64_t ramsey_value, bool allow_empty_s2) {
  if (n < 2 * p) return 0;
  const auto range = s2_range(n, p, ramsey_value, allow_empty_s2);
  std::uint64_t s2_choices = 0;
  for (int s = range.min_size; s <= range.max_size; ++s) s2_choices = sat_add(s2_choices, binomial(n - 2 * p, s));
  return sat_mul(sat_mul(binomial(n, p), binomial(n - p, p)), s2_choices);
}

bool p1_bound_holds(int n, int p, std::uint64_t count) {
  const auto bound = sat_mul(2, sat_pow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p)));
  return bound == kSaturated || count <= bound;
}

bool p2_bound_holds(int n, int p, int q, std::uint64_t count) {
  const auto exponent = sat_add(static_cast<std::uint64_t>(2 * p), sat_pow(4, static_cast<std::uint64_t>(q)));
  const auto bound = sat_pow(static_cast<std::uint64_t>(n), exponent);
  return bound == kSaturated ? count < kSaturated : count < bound;
}

SeparatorFamily p1_family(const Graph& g, int p) {
  if (p < 1) throw InputError("p must be >= 1 (got " + std::to_string(p) + ")");
  SeparatorFamily family(g.order(), p, 0, 0, FamilyOptions{});
  emit_p1(g, p, FamilyOptions{}.budget, [&](Partition part, Provenance prov) {
    ++family.counts().p1_raw;
    family.add(std::move(part), std::move(prov));
  });
  family.counts().p1_unique = family.size();
  family.counts().total_raw = family.counts().p1_raw;
  family.finalize();
  return family;
}

SeparatorFamily p2_family(const Graph& g, int p, int q, const FamilyOptions& options) {
  require_params(p, q);
  const auto ramsey_value = ramsey_upper(q, options.ramsey).value;
  SeparatorFamily family(g.order(), p, q, ramsey_value, options);
  auto emit = [&](const TripleX& t) {
    ++family.counts().p2_raw;
    family.add(a_x(g, t), Provenance{PartitionSource::p2, g.empty_set(), t});
  };
  if (options.mode == FamilyMode::faithful) {
    emit_faithful_triples(g, p, ramsey_value, options, emit);
  } else {
    emit_structured_triples(g, p, ramsey_value, options, emit);
  }
  family.counts().p2_unique = family.size();
  family.counts().total_raw = family.counts().p2_raw;
  family.finalize();
  return family;
}

SeparatorFamily full_family(const Graph& g, int p, int q, const FamilyOptions& options) {
  require_params(p, q);
  const auto ramsey_value = ramsey_upper(q, options.ramsey).value;
  SeparatorFamily family(g.order(), p, q, ramsey_value, options);
  auto& counts = family.counts();

  std::unordered_set<VertexSet, VertexSetHash> p1_sides;
  emit_p1(g, p, options.budget, [&](Partition part, Provenance prov) {
    ++counts.p1_raw;
    p1_sides.insert(part.x_side());
    family.add(std::move(part), std::move(prov));
  });
  counts.p1_unique = p1_sides.size();

  if (p == 1 && options.singleton_neighborhoods) {
    emit_singletons(g, [&](Partition part, Provenance prov) {
      ++counts.singleton_raw;
      family.add(std::move(part), std::move(prov));
    });
  }

  std::unordered_set<VertexSet, VertexSetHash> p2_sides;
  auto emit = [&](const TripleX& t) {
    ++counts.p2_raw;
    Partition part = a_x(g, t);
    p2_sides.insert(part.x_side());
    family.add(std::move(part), Provenance{PartitionSource::p2, g.empty_set(), t});
  };
  if (options.mode == FamilyMode::faithful) {
    emit_faithful_triples(g, p, ramsey_value, options, emit);
  } else {
    emit_structured_triples(g, p, ramsey_value, options, emit);
  }
  counts.p2_unique = p2_sides.size();
  counts.total_raw = sat_add(sat_add(counts.p1_raw, counts.singleton_raw), counts.p2_raw);
  family.finalize();
  return family;
}

SeparatorFamily complement_family(const SeparatorFamily& family) {
  SeparatorFamily out(family.order(), family.p(), family.q(), family.ramsey_value(), family.options());
  for (const auto& entry : family.entries()) {
    Provenance prov = entry.provenance;
    prov.swapped = !prov.swapped;
    out.add(Partition(entry.partition.y_side()), std::move(prov));
  }
  out.counts() = family.counts();
  out.finalize();
  return out;
}

Partition regenerate(const Graph& g, const Provenance& provenance) {
  Partition part;
  switch (provenance.source) {
    case PartitionSource::p1_closed:
    case PartitionSource::singleton_closed:
      part = Partition(neighbors(g, provenance.generator, Neighborhood::closed));
      break;
    case PartitionSource::p1_open:
    case PartitionSource::singleton_open:
      part = Partition(neighbors(g, provenance.generator, Neighborhood::open));
      break;
    case PartitionSource::p2:
      if (!provenance.triple) throw InputError("P2 provenance without a triple");
      part = a_x(g, *provenance.triple);
      break;
  }
  return provenance.swapped ? Partition(part.y_side()) : part;
}

}  // namespace csep
