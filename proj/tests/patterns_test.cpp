#include <gtest/gtest.h>

#include "csep/errors.hpp"
#include "csep/patterns.hpp"
#include "csep/testbed.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace csep;

namespace {

oracle::SmallGraph small(const Graph& g) { return oracle::from_graph(g); }

bool oracle_contains(const Graph& g, const PatternSpec& spec) {
  return oracle::induced_embedding_exists(small(g), small(spec.realize().graph), spec.free_pairs());
}

bool embedding_is_induced(const Graph& g, const PatternSpec& spec, const Embedding& e) {
  const auto image = e.assignment();
  if (static_cast<int>(image.size()) != spec.vertex_count()) return false;
  for (int a = 0; a < spec.vertex_count(); ++a)
    for (int b = a + 1; b < spec.vertex_count(); ++b) {
      const auto c = spec.constraint(a, b);
      const bool adj = g.adjacent(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]);
      if (c == PairConstraint::edge && !adj) return false;
      if (c == PairConstraint::non_edge && adj) return false;
    }
  return e.image(g.order()).size() == spec.vertex_count();
}

}  // namespace

TEST(BuildPatterns, Fs33Counts) {
  const auto fs = build_fs(3, 3);
  EXPECT_EQ(fs.graph.order(), 12);
  EXPECT_EQ(fs.graph.edge_count(), 18u);
  const auto fk = build_fk(3, 3);
  EXPECT_EQ(fk.graph.order(), 12);
  EXPECT_EQ(fk.graph.edge_count(), 21u);
}

TEST(BuildPatterns, Fs11IsP4) {
  const auto fs = build_fs(1, 1);
  ASSERT_EQ(fs.graph.order(), 4);
  EXPECT_EQ(fs.graph.edge_count(), 3u);
  const int k = fs.block("K").first();
  const int s1 = fs.block("S1").first();
  const int s2 = fs.block("S2").first();
  const int s3 = fs.block("S3").first();
  EXPECT_TRUE(fs.graph.adjacent(s1, k));
  EXPECT_TRUE(fs.graph.adjacent(k, s2));
  EXPECT_TRUE(fs.graph.adjacent(s2, s3));
  EXPECT_TRUE(oracle::induced_embedding_exists(small(fixtures::path(4)), small(fs.graph)));
  EXPECT_EQ(build_fk(1, 1).graph, fs.graph);
}

TEST(BuildPatterns, SmallEdgeCounts) {
  EXPECT_EQ(build_fs(2, 1).graph.order(), 6);
  EXPECT_EQ(build_fs(2, 1).graph.edge_count(), 6u);
  EXPECT_EQ(build_fk(2, 2).graph.order(), 8);
  EXPECT_EQ(build_fk(2, 2).graph.edge_count(), build_fs(2, 2).graph.edge_count() + 1);
}

TEST(BuildPatterns, BlockRelations) {
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) {
      const auto fs = build_fs(p, q);
      const auto fk = build_fk(p, q);
      for (const auto* pg : {&fs, &fk}) {
        const Graph& g = pg->graph;
        EXPECT_TRUE(is_clique(g, pg->block("K")));
        EXPECT_TRUE(is_stable(g, pg->block("S1")));
        EXPECT_TRUE(is_stable(g, pg->block("S2")));
        EXPECT_TRUE(relation(g, pg->block("K"), pg->block("S1")).matched);
        EXPECT_TRUE(relation(g, pg->block("K"), pg->block("S2")).complete);
        EXPECT_TRUE(relation(g, pg->block("K"), pg->block("S3")).anticomplete);
        EXPECT_TRUE(relation(g, pg->block("S1"), pg->block("S2")).anticomplete);
        EXPECT_TRUE(relation(g, pg->block("S1"), pg->block("S3")).anticomplete);
        EXPECT_TRUE(relation(g, pg->block("S2"), pg->block("S3")).matched);
      }
      EXPECT_TRUE(is_stable(fs.graph, fs.block("S3")));
      EXPECT_TRUE(is_clique(fk.graph, fk.block("S3")));
    }
}

TEST(BuildPatterns, RejectsNonPositiveParameters) {
  EXPECT_THROW(build_fs(0, 1), InputError);
  EXPECT_THROW(build_fs(1, 0), InputError);
  EXPECT_THROW(build_fk(0, 2), InputError);
  EXPECT_THROW(fab_spec(0, 1), InputError);
  EXPECT_THROW(fab_spec(1, -1), InputError);
}

TEST(PatternSpec, ValidatesRules) {
  EXPECT_THROW(PatternSpec({{"A", 1, IntraRule::stable}, {"A", 1, IntraRule::stable}}, {}), InputError);
  EXPECT_THROW(PatternSpec({{"A", 1, IntraRule::stable}, {"B", 2, IntraRule::stable}},
                           {{"A", "B", InterRule::matched}}),
               InputError);
  EXPECT_THROW(PatternSpec({{"A", 1, IntraRule::stable}, {"B", 1, IntraRule::stable}}, {}), InputError);
}

TEST(ContainsInduced, Examples) {
  const auto fs = build_fs(3, 3);
  EXPECT_TRUE(contains_induced(fs.graph, fs_spec(3, 3)).has_value());
  const auto hit = contains_induced(fixtures::cycle(5), fs_spec(1, 1));
  ASSERT_TRUE(hit.has_value());
  EXPECT_TRUE(embedding_is_induced(fixtures::cycle(5), fs_spec(1, 1), *hit));
  EXPECT_FALSE(contains_induced(fixtures::complete(4), fs_spec(1, 1)).has_value());
}

TEST(IsInClass, Examples) {
  EXPECT_FALSE(is_in_class(fixtures::path(4), 1, 1));
  EXPECT_TRUE(is_in_class(fixtures::cycle(5), 2, 2));
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_TRUE(is_in_class(gen_random(11, 0.5, seed), 3, 3));
  const auto check = check_class(fixtures::path(4), 1, 1);
  EXPECT_FALSE(check.member);
  EXPECT_TRUE(check.fs_hit.has_value());
}

TEST(ContainsFab, Examples) {
  EXPECT_TRUE(contains_fab(fixtures::path(4), 1, 1).has_value());
  EXPECT_FALSE(contains_fab(fixtures::cycle(4), 1, 1).has_value());
  EXPECT_FALSE(contains_fab(fixtures::complete(4), 1, 1).has_value());
}

TEST(ContainsInduced, AgreesWithOracleOnRandomGraphs) {
  const std::vector<PatternSpec> specs = {fs_spec(1, 1), fk_spec(2, 1), fs_spec(2, 1), fab_spec(1, 1), fab_spec(2, 1)};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const Graph g = gen_random(n, 0.2 + 0.6 * static_cast<double>(seed % 4) / 3.0, seed);
    for (const auto& spec : specs) {
      const auto hit = contains_induced(g, spec);
      EXPECT_EQ(hit.has_value(), oracle_contains(g, spec)) << "seed " << seed;
      if (hit) EXPECT_TRUE(embedding_is_induced(g, spec, *hit));
    }
  }
}

TEST(ContainsInduced, PlantedPatternIsFound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int p = 1 + static_cast<int>(seed % 2);
    const int q = 1 + static_cast<int>((seed / 2) % 2);
    const auto pattern = (seed % 3 == 0) ? build_fk(p, q) : build_fs(p, q);
    const Graph host = disjoint_union(pattern.graph, gen_random(4, 0.5, seed));
    const Graph shuffled = relabel(host, random_permutation(host.order(), seed));
    EXPECT_FALSE(is_in_class(shuffled, p, q)) << "seed " << seed;
  }
}

TEST(ContainsInduced, InvariantUnderRelabeling) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = gen_random(8, 0.5, seed);
    const Graph h = relabel(g, random_permutation(8, seed + 1000));
    for (const auto& spec : {fs_spec(1, 1), fs_spec(2, 1), fk_spec(2, 1)})
      EXPECT_EQ(contains_induced(g, spec).has_value(), contains_induced(h, spec).has_value());
  }
}
