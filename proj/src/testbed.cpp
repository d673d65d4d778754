#include "csep/testbed.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

#include "csep/errors.hpp"
#include "csep/witness.hpp"

namespace csep {

namespace {

void require_enumerable(const Graph& g, int max_vertices) {
  if (g.order() > max_vertices)
    throw ResourceError("enumeration limited to " + std::to_string(max_vertices) + " vertices, graph has " +
                        std::to_string(g.order()));
}

void all_cliques(const Graph& g, VertexSet& current, const VertexSet& candidates, int after,
                 std::vector<VertexSet>& out) {
  out.push_back(current);
  for (int v = candidates.next(after); v != -1; v = candidates.next(v)) {
    current.insert(v);
    all_cliques(g, current, candidates & g.neighbors(v), v, out);
    current.erase(v);
  }
}

// Bron-Kerbosch with Tomita pivoting.
void maximal_cliques(const Graph& g, VertexSet& r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty()) {
    if (x.empty()) out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (int u : p | x) {
    const int score = (p & g.neighbors(u)).size();
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  for (int v : p - g.neighbors(pivot)) {
    r.insert(v);
    maximal_cliques(g, r, p & g.neighbors(v), x & g.neighbors(v), out);
    r.erase(v);
    p.erase(v);
    x.insert(v);
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Comparing a raw 64-bit draw against a fixed threshold keeps edge sampling
// identical across standard library implementations.
struct EdgeCoin {
  explicit EdgeCoin(double prob) {
    if (!(prob >= 0.0 && prob <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
    always = prob >= 1.0;
    threshold = always ? 0 : static_cast<std::uint64_t>(std::ldexp(static_cast<long double>(prob), 64));
  }
  bool flip(std::mt19937_64& rng) const {
    const auto draw = rng();
    return always || draw < threshold;
  }
  bool always = false;
  std::uint64_t threshold = 0;
};

struct ChunkResult {
  std::uint64_t pairs = 0;
  std::vector<UncoveredPair> uncovered;
  std::uint64_t witness_runs = 0;
  std::uint64_t witness_agreements = 0;
  std::vector<std::string> failures;
};

constexpr std::size_t kMaxRecordedFailures = 16;

}  // namespace

std::vector<VertexSet> enumerate_cliques(const Graph& g, bool maximal_only, int max_vertices) {
  require_enumerable(g, max_vertices);
  std::vector<VertexSet> out;
  VertexSet current = g.empty_set();
  if (maximal_only) {
    maximal_cliques(g, current, g.vertices(), g.empty_set(), out);
    std::sort(out.begin(), out.end());
  } else {
    all_cliques(g, current, g.vertices(), -1, out);
  }
  return out;
}

std::vector<VertexSet> enumerate_stable_sets(const Graph& g, bool maximal_only, int max_vertices) {
  return enumerate_cliques(complement(g), maximal_only, max_vertices);
}

bool check_separation(const Partition& partition, const VertexSet& clique, const VertexSet& stable) {
  return partition.separates(clique, stable);
}

CoverageReport verify_family_covers(const Graph& g, const SeparatorFamily& family, const CoverageOptions& options) {
  if (family.order() != g.order()) throw InputError("family and graph have different vertex counts");
  const bool maximal = options.mode == PairMode::maximal_seeded;
  const auto cliques = enumerate_cliques(g, maximal, options.max_vertices);
  const auto stables = enumerate_stable_sets(g, maximal, options.max_vertices);

  CoverageReport report;
  report.n = g.order();
  report.p = family.p();
  report.q = family.q();
  report.ramsey_value = family.ramsey_value();
  report.family_size = family.size();
  report.mode = options.mode;

  const bool witness = options.run_witness && family.p() >= 1 && family.q() >= 1;
  if (witness) {
    report.class_member = options.known_membership ? *options.known_membership : is_in_class(g, family.p(), family.q());
  } else if (options.known_membership) {
    report.class_member = *options.known_membership;
  }
  WitnessOptions witness_options{family.options().ramsey, report.class_member};

  const auto& entries = family.entries();
  auto check_chunk = [&](std::size_t begin, std::size_t end, ChunkResult& out) {
    std::vector<std::size_t> containing;
    for (std::size_t c = begin; c < end; ++c) {
      const VertexSet& clique = cliques[c];
      containing.clear();
      for (std::size_t i = 0; i < entries.size(); ++i)
        if (clique.is_subset_of(entries[i].partition.x_side())) containing.push_back(i);

      for (const VertexSet& stable : stables) {
        if (clique.intersects(stable)) continue;
        ++out.pairs;
        const bool covered = std::any_of(containing.begin(), containing.end(), [&](std::size_t i) {
          return !stable.intersects(entries[i].partition.x_side());
        });
        if (!covered) {
          const bool rescued = std::any_of(entries.begin(), entries.end(), [&](const FamilyEntry& e) {
            return check_separation(e.partition, clique, stable);
          });
          if (!rescued) out.uncovered.push_back({clique, stable});
        }
        if (!witness) continue;
        ++out.witness_runs;
        try {
          const auto w = find_separator(g, family.p(), family.q(), clique, stable, witness_options);
          if (w.partition.separates(clique, stable) && family.contains(w.partition.x_side())) {
            ++out.witness_agreements;
          } else if (out.failures.size() < kMaxRecordedFailures) {
            out.failures.push_back("K=" + clique.to_string() + " S=" + stable.to_string() + " branch " +
                                   std::string(to_string(w.branch)) + " gave " + w.partition.x_side().to_string() +
                                   (family.contains(w.partition.x_side()) ? "" : " (not in family)"));
          }
        } catch (const std::exception& e) {
          if (out.failures.size() < kMaxRecordedFailures)
            out.failures.push_back("K=" + clique.to_string() + " S=" + stable.to_string() + ": " + e.what());
        }
      }
    }
  };

  const auto workers = static_cast<std::size_t>(std::max(1, options.workers));
  const std::size_t chunk = (cliques.size() + workers - 1) / std::max<std::size_t>(workers, 1);
  std::vector<ChunkResult> results(workers);
  if (workers == 1) {
    check_chunk(0, cliques.size(), results[0]);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(cliques.size(), w * chunk);
      const std::size_t end = std::min(cliques.size(), begin + chunk);
      threads.emplace_back([&, begin, end, w] { check_chunk(begin, end, results[w]); });
    }
  }

  for (auto& r : results) {
    report.pairs_checked += r.pairs;
    report.witness_runs += r.witness_runs;
    report.witness_agreements += r.witness_agreements;
    for (auto& u : r.uncovered) report.uncovered.push_back(std::move(u));
    for (auto& f : r.failures)
      if (report.witness_failures.size() < kMaxRecordedFailures) report.witness_failures.push_back(std::move(f));
  }
  return report;
}

bool brute_force_contains(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int k = h.order();
  if (k > 12) throw ResourceError("brute-force oracle limited to patterns with at most 12 vertices");
  if (n > kDefaultEnumerationLimit) throw ResourceError("brute-force oracle limited to hosts with at most 14 vertices");
  if (k > n) return false;

  // Every k-subset (as a bitmask), then every ordering of it.
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> image;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1U) image.push_back(v);
    do {
      bool same = true;
      for (int a = 0; a < k && same; ++a)
        for (int b = a + 1; b < k && same; ++b)
          same = h.adjacent(a, b) == g.adjacent(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]);
      if (same) return true;
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return false;
}

bool brute_force_contains(const Graph& g, const PatternSpec& spec) {
  const auto base = spec.realize().graph;
  const auto free = spec.free_pairs();
  if (free.size() > 20) throw ResourceError("too many unrestricted pattern pairs to enumerate completions");
  const auto fixed = base.edges();
  for (std::uint64_t completion = 0; completion < (std::uint64_t{1} << free.size()); ++completion) {
    auto edges = fixed;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((completion >> i) & 1U) edges.push_back(free[i]);
    if (brute_force_contains(g, Graph(base.order(), edges))) return true;
  }
  return false;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

Graph gen_random(int n, double edge_prob, std::uint64_t seed) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  const EdgeCoin coin(edge_prob);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin.flip(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::optional<Graph> gen_in_class(int n, double edge_prob, int p, int q, std::uint64_t seed, int max_tries) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Graph g = gen_random(n, edge_prob, derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    if (is_in_class(g, p, q)) return g;
  }
  return std::nullopt;
}

Graph gen_triangle_free(int n, double edge_prob, std::uint64_t seed) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  const EdgeCoin coin(edge_prob);
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);

  std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) {
    if (!coin.flip(rng)) continue;
    auto& ru = rows[static_cast<std::size_t>(u)];
    auto& rv = rows[static_cast<std::size_t>(v)];
    if (ru.intersects(rv)) continue;
    ru.insert(v);
    rv.insert(u);
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::vector<int> perm(static_cast<std::size_t>(std::max(0, n)));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  return perm;
}

}  // namespace csep
