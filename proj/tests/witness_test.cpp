#include <gtest/gtest.h>

#include "csep/errors.hpp"
#include "csep/patterns.hpp"
#include "csep/testbed.hpp"
#include "csep/witness.hpp"
#include "fixtures.hpp"

using namespace csep;
using fixtures::set;

TEST(ExtendToMaximal, Examples) {
  EXPECT_EQ(extend_to_maximal(fixtures::complete(3), set(3, {0}), SetKind::clique), set(3, {0, 1, 2}));
  EXPECT_EQ(extend_to_maximal(Graph(3), set(3, {1}), SetKind::stable), set(3, {0, 1, 2}));
  EXPECT_EQ(extend_to_maximal(fixtures::cycle(5), set(5, {0}), SetKind::clique), set(5, {0, 1}));
}

TEST(ExtendToMaximal, RejectsWrongKind) {
  EXPECT_THROW(extend_to_maximal(fixtures::path(3), set(3, {0, 2}), SetKind::clique), InputError);
  EXPECT_THROW(extend_to_maximal(fixtures::path(3), set(3, {0, 1}), SetKind::stable), InputError);
}

TEST(ExtendToMaximal, ResultIsMaximal) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gen_random(9, 0.5, seed);
    const int v = static_cast<int>(seed % 9);
    const auto clique = extend_to_maximal(g, set(9, {v}), SetKind::clique);
    const auto stable = extend_to_maximal(g, set(9, {v}), SetKind::stable);
    EXPECT_TRUE(is_clique(g, clique));
    EXPECT_TRUE(is_stable(g, stable));
    EXPECT_TRUE(complete_to(g, clique).empty());
    EXPECT_TRUE(anticomplete_to(g, stable).empty());
  }
}

TEST(MinimalNeighborCover, Examples) {
  const Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 4}});
  const auto cover = minimal_neighbor_cover(g, set(5, {0, 1, 2}), set(5, {3, 4}));
  EXPECT_EQ(cover.cover, set(5, {3, 4}));
  EXPECT_EQ(cover.partners, set(5, {0, 2}));
  EXPECT_EQ(cover.matching, (std::vector<std::pair<int, int>>{{3, 0}, {4, 2}}));
  EXPECT_TRUE(relation(g, cover.partners, cover.cover).matched);

  const Graph edge(2, {{0, 1}});
  const auto single = minimal_neighbor_cover(edge, set(2, {0}), set(2, {1}));
  EXPECT_EQ(single.cover, set(2, {1}));
  EXPECT_EQ(single.partners, set(2, {0}));

  const Graph tri = fixtures::complete(3);
  const auto shared = minimal_neighbor_cover(tri, set(3, {0, 1}), set(3, {2}));
  EXPECT_EQ(shared.cover, set(3, {2}));
  EXPECT_EQ(shared.partners, set(3, {0}));
}

TEST(MinimalNeighborCover, UncoverableVertexIsRejected) {
  const Graph g(3, {{0, 1}});
  EXPECT_THROW(minimal_neighbor_cover(g, set(3, {0, 1}), set(3, {2})), InputError);
}

TEST(MinimalZCover, Examples) {
  const Graph none(4, {{0, 1}});
  const auto empty = minimal_z_cover(none, set(4, {0}), set(4, {2, 3}));
  EXPECT_TRUE(empty.cover.empty());
  EXPECT_TRUE(empty.partners.empty());

  const Graph two(4, {{0, 2}, {1, 3}});
  const auto both = minimal_z_cover(two, set(4, {0, 1}), set(4, {2, 3}));
  EXPECT_EQ(both.cover, set(4, {0, 1}));
  EXPECT_EQ(both.partners, set(4, {2, 3}));

  const Graph shared(3, {{0, 2}, {1, 2}});
  const auto one = minimal_z_cover(shared, set(3, {0, 1}), set(3, {2}));
  EXPECT_EQ(one.cover, set(3, {0}));
  EXPECT_EQ(one.partners, set(3, {2}));
}

TEST(MinimalZCover, RejectsOverlap) {
  EXPECT_THROW(minimal_z_cover(fixtures::path(3), set(3, {0, 1}), set(3, {1, 2})), InputError);
}

// Minimality: dropping any cover vertex loses coverage; partners are private.
TEST(MinimalCovers, AreMinimalOnRandomInputs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = gen_random(10, 0.4, seed);
    const auto perm = random_permutation(10, seed);
    VertexSet sc(10), z(10);
    for (int i = 0; i < 10; ++i) (i < 5 ? sc : z).insert(perm[static_cast<std::size_t>(i)]);
    const auto cover = minimal_z_cover(g, sc, z);
    const VertexSet target = neighbors(g, sc, Neighborhood::open) & z;
    EXPECT_EQ(neighbors(g, cover.cover, Neighborhood::open) & z, target);
    for (int s : cover.cover) {
      VertexSet smaller = cover.cover;
      smaller.erase(s);
      EXPECT_NE(neighbors(g, smaller, Neighborhood::open) & z, target);
    }
    for (auto [s, w] : cover.matching) {
      EXPECT_TRUE(g.adjacent(s, w));
      VertexSet others = cover.cover;
      others.erase(s);
      EXPECT_FALSE(neighbors(g, others, Neighborhood::open).contains(w));
    }
  }
}

TEST(FindSeparator, SingleEdge) {
  const Graph g(2, {{0, 1}});
  const auto w = find_separator(g, 1, 1, set(2, {0}), set(2, {1}));
  EXPECT_EQ(w.branch, SeparatorBranch::intersection_p1);
  EXPECT_EQ(w.trace.k_max, set(2, {0, 1}));
  EXPECT_EQ(w.trace.s_max, set(2, {1}));
  EXPECT_EQ(w.trace.v, 1);
  EXPECT_EQ(w.partition.x_side(), set(2, {0}));
  EXPECT_EQ(w.partition.y_side(), set(2, {1}));
}

TEST(FindSeparator, TriangleAndEdge) {
  const Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  const auto k = set(5, {0, 1, 2});
  const auto s = set(5, {4});
  const auto w = find_separator(g, 2, 2, k, s);
  EXPECT_EQ(w.branch, SeparatorBranch::intersection_p1);
  ASSERT_TRUE(w.trace.v.has_value());
  EXPECT_TRUE(k.contains(*w.trace.v));
  EXPECT_TRUE(w.partition.separates(k, s));
  EXPECT_EQ(w.provenance.source, PartitionSource::p1_closed);
}

TEST(FindSeparator, C5TripleBranch) {
  const Graph c5 = fixtures::cycle(5);
  const auto w = find_separator(c5, 2, 2, set(5, {0, 1}), set(5, {2, 4}));
  EXPECT_EQ(w.branch, SeparatorBranch::triple_p2);
  EXPECT_EQ(w.trace.s1, set(5, {2, 4}));
  EXPECT_EQ(w.trace.k1, set(5, {0, 1}));
  EXPECT_TRUE(w.trace.z.empty());
  EXPECT_TRUE(w.trace.sc.empty());
  EXPECT_TRUE(w.trace.s2.empty());
  EXPECT_EQ(w.partition.x_side(), set(5, {0, 1}));
  EXPECT_EQ(w.partition.y_side(), set(5, {2, 3, 4}));
  EXPECT_TRUE(full_family(c5, 2, 2).contains(w.partition.x_side()));
}

TEST(FindSeparator, InputErrors) {
  const Graph p3 = fixtures::path(3);
  EXPECT_THROW(find_separator(p3, 1, 1, set(3, {0, 2}), set(3, {1})), InputError);
  EXPECT_THROW(find_separator(p3, 1, 1, set(3, {0}), set(3, {0, 1})), InputError);
  EXPECT_THROW(find_separator(p3, 1, 1, set(3, {0, 1}), set(3, {1})), InputError);
  EXPECT_THROW(find_separator(p3, 0, 1, set(3, {0}), set(3, {2})), InputError);
}

TEST(FindSeparator, OutsideClassReportsMembership) {
  const auto w = find_separator(fixtures::path(4), 1, 1, set(4, {1, 2}), set(4, {0, 3}));
  EXPECT_FALSE(w.class_member);
}

TEST(FindSeparator, Deterministic) {
  const Graph g = gen_random(10, 0.5, 3);
  const auto k = extend_to_maximal(g, set(10, {0}), SetKind::clique);
  const auto s = extend_to_maximal(g, set(10, {0}), SetKind::stable) - set(10, {0});
  const auto a = find_separator(g, 2, 2, k, s);
  const auto b = find_separator(g, 2, 2, k, s);
  EXPECT_EQ(a.partition, b.partition);
  EXPECT_EQ(a.branch, b.branch);
  EXPECT_EQ(a.trace.s2, b.trace.s2);
}

// Every disjoint pair in a class member: separated, drawn from the family,
// triple branch structurally sound and |S2| below R.
TEST(FindSeparator, SoundOnClassMembers) {
  int graphs = 0;
  for (std::uint64_t seed = 0; graphs < 25 && seed < 400; ++seed) {
    const int p = 1 + static_cast<int>(seed % 2);
    const int n = 6 + static_cast<int>(seed % 4);
    const auto g = gen_in_class(n, 0.5, p, p, seed, 20);
    if (!g) continue;
    ++graphs;
    const auto fam = full_family(*g, p, p);
    const auto cliques = enumerate_cliques(*g, false);
    const auto stables = enumerate_stable_sets(*g, false);
    for (const auto& k : cliques)
      for (const auto& s : stables) {
        if (k.intersects(s)) continue;
        const auto w = find_separator(*g, p, p, k, s, WitnessOptions{RamseyMode::tight, true});
        ASSERT_TRUE(w.partition.separates(k, s)) << k.to_string() << " " << s.to_string();
        ASSERT_TRUE(fam.contains(w.partition.x_side()));
        EXPECT_TRUE(w.s2_within_bound);
        if (w.branch == SeparatorBranch::triple_p2) {
          const TripleX t{w.trace.k1, w.trace.s1, w.trace.s2};
          EXPECT_TRUE(is_structured_triple(*g, t));
          EXPECT_EQ(w.trace.k1.size(), p);
          EXPECT_LT(static_cast<std::uint64_t>(w.trace.s2.size()), w.ramsey_value);
          EXPECT_TRUE(relation(*g, w.trace.s2, w.trace.w).matched);
          EXPECT_EQ(a_x(*g, t), w.partition);
        }
      }
  }
  EXPECT_EQ(graphs, 25);
}
