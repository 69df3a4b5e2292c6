#include "sfdt/cover.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"

namespace sfdt {
namespace {

int max_cover_degree(const Cover& c) {
  int d = 0;
  for (int id = 0; id < c.order(); ++id) d = std::max<int>(d, c.neighbors(id).size());
  return d;
}

bool is_two_regular(const Cover& c) {
  for (int id = 0; id < c.order(); ++id) {
    if (c.neighbors(id).size() != 2) return false;
  }
  return true;
}

TEST(Matching, FromPairsValidates) {
  std::vector<std::pair<int, int>> ok{{0, 1}, {1, 0}};
  Matching m = Matching::from_pairs(2, ok);
  EXPECT_TRUE(m.is_perfect());
  EXPECT_EQ(m.forward(0), 1);
  EXPECT_EQ(m.backward(0), 1);
  std::vector<std::pair<int, int>> repeat{{0, 1}, {1, 1}};
  EXPECT_THROW(Matching::from_pairs(2, repeat), CoverError);
  std::vector<std::pair<int, int>> range{{0, 2}};
  EXPECT_THROW(Matching::from_pairs(2, range), CoverError);
  EXPECT_EQ(m.inverse().inverse(), m);
}

TEST(MakeCover, IdentityOnTriangleIsLadder) {
  MatchingSpec spec;
  for (auto e : cycle_graph(3).edge_pairs()) spec[e] = {{0, 0}, {1, 1}};
  Cover c = make_cover(cycle_graph(3), 2, spec);
  EXPECT_EQ(c, circular_ladder_cover(3));
  EXPECT_EQ(oracle::cover_component_count(c), 2);
}

TEST(MakeCover, KappaOneReproducesBase) {
  Graph g = petersen_graph();
  MatchingSpec spec;
  for (auto e : g.edge_pairs()) spec[e] = {{0, 0}};
  Cover c = make_cover(g, 1, spec);
  CoverSubgraph h = full_subgraph(c);
  EXPECT_EQ(h.to_graph(), g);
}

TEST(MakeCover, EmptyMatchingGivesIsolatedVertices) {
  Cover c = make_cover(path_graph(2), 2, {});
  EXPECT_EQ(c.order(), 4);
  EXPECT_EQ(c.edge_count(), 0);
  EXPECT_EQ(components(full_subgraph(c)).size(), 4u);
}

TEST(MakeCover, RejectsNonEdgesAndNonMatchings) {
  EXPECT_THROW(make_cover(path_graph(3), 2, {{{0, 2}, {{0, 0}}}}), CoverError);
  EXPECT_THROW(make_cover(path_graph(2), 2, {{{0, 1}, {{0, 0}, {1, 0}}}}), CoverError);
  // Reversed key orientation is accepted and pairs follow the key.
  Cover c = make_cover(path_graph(2), 2, {{{1, 0}, {{0, 1}}}});
  EXPECT_EQ(c.partner(0, 1, 1), 0);
}

TEST(IdCover, K4TwoCopies) {
  Cover c = id_cover(complete_graph(4), 2);
  auto comps = components(full_subgraph(c));
  ASSERT_EQ(comps.size(), 2u);
  for (const auto& comp : comps) EXPECT_EQ(comp.size(), 4u);
}

TEST(IdCover, KappaOneIsBase) {
  Graph g = bowtie_graph();
  EXPECT_EQ(full_subgraph(id_cover(g, 1)).to_graph(), g);
}

TEST(Ladders, CircularLadder) {
  Cover c = circular_ladder_cover(5);
  EXPECT_EQ(c.order(), 10);
  EXPECT_EQ(oracle::cover_component_count(c), 2);
  EXPECT_TRUE(is_two_regular(c));
  EXPECT_EQ(circular_ladder_cover(5), id_cover(cycle_graph(5), 2));
}

TEST(Ladders, MobiusIsOneLongCycle) {
  for (int n : {3, 4, 5}) {
    Cover c = mobius_ladder_cover(n);
    EXPECT_EQ(oracle::cover_component_count(c), 1) << n;
    EXPECT_TRUE(is_two_regular(c)) << n;
    EXPECT_EQ(max_cover_degree(c), 2);
    EXPECT_TRUE(is_cycle(full_subgraph(c).to_graph())) << n;
  }
  EXPECT_THROW(mobius_ladder_cover(2), std::invalid_argument);
}

TEST(Ladders, P2KappaThree) {
  EXPECT_EQ(components(full_subgraph(id_cover(path_graph(2), 3))).size(), 3u);
}

TEST(TildeComplete, Copies) {
  EXPECT_EQ(components(full_subgraph(tilde_complete_cover(4, 2))).size(), 2u);
  EXPECT_EQ(full_subgraph(tilde_complete_cover(2, 1)).to_graph(), path_graph(2));
  auto comps = components(full_subgraph(tilde_complete_cover(3, 3)));
  ASSERT_EQ(comps.size(), 3u);
  for (const auto& comp : comps) EXPECT_EQ(comp.size(), 3u);
}

TEST(Kernel, Examples) {
  Cover c = id_cover(path_graph(2), 2);
  EXPECT_TRUE(kernel(c, ValueMap(2, 2, 0)).vertices.empty());
  EXPECT_EQ(kernel(c, ValueMap(2, 2, 3)).vertices.size(), 4u);
  ValueMap f(2, 2);
  f.set(0, 0, 1);
  f.set(1, 0, 1);
  CoverSubgraph k = kernel(c, f);
  EXPECT_EQ(k.vertices, (std::vector<int>{0, 2}));
  EXPECT_EQ(k.edges, (std::vector<std::pair<int, int>>{{0, 2}}));
}

TEST(InducedOnTransversal, Examples) {
  Cover g5 = circular_ladder_cover(5);
  EXPECT_EQ(induced_on_transversal(g5, {{0, 0, 0, 0, 0}}).to_graph(), cycle_graph(5));
  EXPECT_TRUE(induced_on_transversal(circular_ladder_cover(4), {{0, 1, 0, 1}}).edges.empty());
  EXPECT_EQ(induced_on_transversal(mobius_ladder_cover(4), {{0, 1, 0, 1}}).edges.size(), 1u);
}

TEST(Components, Examples) {
  EXPECT_EQ(components(full_subgraph(tilde_complete_cover(4, 2))).size(), 2u);
  EXPECT_TRUE(components(CoverSubgraph{}).empty());
  EXPECT_EQ(components(full_subgraph(mobius_ladder_cover(3))).size(), 1u);
}

TEST(ValueMap, RejectsNegative) {
  EXPECT_THROW(ValueMap(2, 2, -1), CoverError);
  ValueMap f(2, 2);
  EXPECT_THROW(f.set(0, 0, -3), CoverError);
}

TEST(SemiConstant, TildeComplete) {
  Cover c = tilde_complete_cover(3, 2);
  ValueMap f(3, 2);
  for (Vertex v = 0; v < 3; ++v) {
    f.set(v, 0, 1);
    f.set(v, 1, 2);
  }
  EXPECT_TRUE(is_semi_constant(c, f));
  f.set(2, 1, 0);
  EXPECT_FALSE(is_semi_constant(c, f));
}

TEST(SubCover, RestrictKeepsOrientation) {
  // Reversed local orientation: parent edge (1, 3) becomes local (1, 0)
  // after relabeling keep = {3, 1}.
  Graph g = path_graph(4);
  Cover c = make_cover(g, 2, {{{1, 2}, {{0, 1}}}, {{2, 3}, {{1, 0}}}});
  ValueMap f(4, 2, 1);
  std::vector<Vertex> keep{2, 3};
  SubCover s = restrict_to(c, f, keep);
  EXPECT_EQ(s.cover.partner(0, 1, 1), 0);
  EXPECT_EQ(s.to_parent, keep);
  SubCover d = delete_fiber(c, f, 1);
  EXPECT_EQ(d.cover.base().order(), 3);
  EXPECT_EQ(d.cover.base().size(), 1);
}

// Transversal graphs: n vertices, at most one edge per base edge.
TEST(CoverProperties, TransversalGraphProjects) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(2 + trial % 6, 0.5, rng);
    const int kappa = 1 + trial % 3;
    std::vector<Matching> ms;
    for (int e = 0; e < g.size(); ++e) {
      std::vector<std::pair<int, int>> pairs;
      std::vector<int> perm(kappa);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int p = 0; p < kappa; ++p) {
        if (rng() % 3) pairs.emplace_back(p, perm[p]);
      }
      ms.push_back(Matching::from_pairs(kappa, pairs));
    }
    Cover c(g, kappa, ms);
    Transversal r;
    for (int v = 0; v < g.order(); ++v) r.picks.push_back(static_cast<int>(rng() % kappa));
    CoverSubgraph h = induced_on_transversal(c, r);
    ASSERT_EQ(h.vertices.size(), static_cast<std::size_t>(g.order()));
    std::set<std::pair<int, int>> base_edges;
    for (auto [a, b] : h.edges) {
      ASSERT_TRUE(g.adjacent(c.fiber_of(a), c.fiber_of(b)));
      ASSERT_TRUE(base_edges.insert({c.fiber_of(a), c.fiber_of(b)}).second);
    }
    ASSERT_EQ(oracle::cover_component_count(c), static_cast<int>(components(full_subgraph(c)).size()));
  }
}

TEST(CoverProperties, ConstantPicksOnIdCoverGiveBase) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(1 + trial % 7, 0.5, rng);
    const int kappa = 3;
    Cover c = id_cover(g, kappa);
    for (int q = 0; q < kappa; ++q) {
      Transversal r{std::vector<int>(g.order(), q)};
      ASSERT_EQ(induced_on_transversal(c, r).to_graph(), g);
    }
    ValueMap f(g.order(), kappa);
    int positive = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      for (int q = 0; q < kappa; ++q) {
        int x = static_cast<int>(rng() % 3);
        f.set(v, q, x);
        positive += x > 0;
      }
    }
    ASSERT_EQ(static_cast<int>(kernel(c, f).vertices.size()), positive);
  }
}

}  // namespace
}  // namespace sfdt
