#include "sfdt/solver.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sfdt/degeneracy.hpp"
#include "sfdt/harness.hpp"

namespace sfdt {
namespace {

ValueMap layered(int n, std::vector<int> per_layer) {
  ValueMap f(n, static_cast<int>(per_layer.size()));
  for (Vertex v = 0; v < n; ++v) {
    for (int q = 0; q < static_cast<int>(per_layer.size()); ++q) f.set(v, q, per_layer[q]);
  }
  return f;
}

TEST(FindSfdt, OddLadderExhausts) {
  auto r = find_sfdt(circular_ladder_cover(5), ValueMap(5, 2, 1));
  EXPECT_EQ(r.status, SolveStatus::exhausted);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(FindSfdt, EvenMobiusExhausts) {
  EXPECT_EQ(find_sfdt(mobius_ladder_cover(4), ValueMap(4, 2, 1)).status, SolveStatus::exhausted);
}

TEST(FindSfdt, EvenLadderFound) {
  Cover c = circular_ladder_cover(4);
  ValueMap f(4, 2, 1);
  auto r = find_sfdt(c, f);
  ASSERT_EQ(r.status, SolveStatus::found);
  EXPECT_TRUE(oracle::is_sfdt(c, f, r.witness->picks));
  EXPECT_EQ(oracle::count_sfdts(c, f), 2);
}

TEST(FindSfdt, TildeK4Exhausts) {
  Cover c = id_cover(complete_graph(4), 2);
  ValueMap f = layered(4, {1, 2});
  EXPECT_EQ(find_sfdt(c, f).status, SolveStatus::exhausted);
  EXPECT_FALSE(oracle::has_sfdt(c, f));
}

TEST(FindSfdt, SingleVertex) {
  auto r = find_sfdt(id_cover(make_graph(1, {}), 1), ValueMap(1, 1, 1));
  ASSERT_EQ(r.status, SolveStatus::found);
  EXPECT_EQ(r.witness->picks, std::vector<int>{0});
}

TEST(FindSfdt, NodeLimitAborts) {
  auto r = find_sfdt(circular_ladder_cover(7), ValueMap(7, 2, 1), {2, 0});
  EXPECT_EQ(r.status, SolveStatus::aborted);
  EXPECT_LE(r.nodes_expanded, 2u);
}

TEST(FindSfdt, ZeroValuesNeverPicked) {
  Cover c = id_cover(path_graph(3), 3);
  ValueMap f(3, 3);
  f.set(0, 2, 1);
  f.set(1, 1, 1);
  f.set(2, 2, 1);
  auto r = find_sfdt(c, f);
  ASSERT_EQ(r.status, SolveStatus::found);
  EXPECT_EQ(r.witness->picks, (std::vector<int>{2, 1, 2}));
}

TEST(Bounded, PetersenThreeColoring) {
  Graph g = petersen_graph();
  Cover c = id_cover(g, 3);
  ValueMap f(g.order(), 3, 1);
  auto r = find_sfdt_bounded(c, f);
  ASSERT_EQ(r.status, SolveStatus::found);
  EXPECT_TRUE(r.bounded);
  for (const Edge& e : g.edges()) EXPECT_NE(r.witness->picks[e.u], r.witness->picks[e.v]);
}

TEST(Bounded, K2) {
  auto r = find_sfdt_bounded(id_cover(path_graph(2), 2), ValueMap(2, 2, 1));
  ASSERT_EQ(r.status, SolveStatus::found);
  EXPECT_TRUE(r.bounded);
  EXPECT_NE(r.witness->picks[0], r.witness->picks[1]);
}

TEST(StrictlyBounded, TriangleAndStar) {
  for (Graph g : {cycle_graph(3), star_graph(3)}) {
    Cover c = id_cover(g, 2);
    ValueMap f(g.order(), 2, 2);
    auto r = find_sfdt_strictly_bounded(c, f);
    ASSERT_EQ(r.status, SolveStatus::found);
    EXPECT_TRUE(r.strictly_bounded);
    auto deg = pick_degrees(c, *r.witness);
    EXPECT_LE(*std::max_element(deg.begin(), deg.end()), 1);
  }
  auto r = find_sfdt_strictly_bounded(id_cover(make_graph(1, {}), 1), ValueMap(1, 1, 1));
  EXPECT_EQ(r.status, SolveStatus::found);
  EXPECT_TRUE(r.strictly_bounded);
}

TEST(StrictlyBounded, RejectsWeakSums) {
  EXPECT_THROW(find_sfdt_strictly_bounded(circular_ladder_cover(4), ValueMap(4, 2, 1)), PreconditionError);
}

TEST(Deficiency, Examples) {
  EXPECT_EQ(deficiency(circular_ladder_cover(4), ValueMap(4, 2, 1), {{0, 1, 0, 1}}), -4);
  EXPECT_EQ(deficiency(circular_ladder_cover(5), ValueMap(5, 2, 1), {{0, 0, 0, 0, 0}}), 0);
  EXPECT_EQ(deficiency(id_cover(complete_graph(4), 2), layered(4, {1, 2}), {{0, 0, 0, 0}}), 2);
}

TEST(Descent, StrictlyDecreasesToBounded) {
  // P3 on one layer: the center has two picked neighbors but f = 1 there.
  Cover c = id_cover(path_graph(3), 2);
  ValueMap f(3, 2);
  f.set(0, 0, 2);
  f.set(2, 0, 2);
  f.set(1, 0, 1);
  f.set(1, 1, 1);
  Transversal start{{0, 0, 0}};
  ASSERT_TRUE(is_sfdt(c, f, start));
  Descent d = descend(c, f, start, DegreeCap::at_most);
  EXPECT_FALSE(d.stuck);
  EXPECT_EQ(d.trace, (std::vector<long>{-3, -5}));
  EXPECT_EQ(d.result.picks, (std::vector<int>{0, 1, 0}));
  EXPECT_TRUE(is_sfdt(c, f, d.result));
}

TEST(MinimalNonSfdt, Examples) {
  EXPECT_TRUE(is_minimal_non_sfdt(circular_ladder_cover(5), ValueMap(5, 2, 1)));
  EXPECT_TRUE(is_minimal_non_sfdt(id_cover(complete_graph(4), 2), layered(4, {1, 2})));
  EXPECT_FALSE(is_minimal_non_sfdt(circular_ladder_cover(4), ValueMap(4, 2, 1)));
}

TEST(AllSfdts, MatchesOracleCount) {
  Cover c = mobius_ladder_cover(5);
  ValueMap f(5, 2, 1);
  EXPECT_EQ(static_cast<int>(all_sfdts(c, f).size()), oracle::count_sfdts(c, f));
}

// Solver against full enumeration, and witness soundness, on random covers.
TEST(SolverProperties, AgreesWithEnumeration) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int kappa = 1 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 0.5, rng);
    Cover c = random_cover(g, kappa, trial % 2 == 0, rng);
    ValueMap f(n, kappa);
    for (Vertex v = 0; v < n; ++v) {
      for (int q = 0; q < kappa; ++q) f.set(v, q, static_cast<int>(rng() % 3));
    }
    auto r = find_sfdt(c, f);
    ASSERT_NE(r.status, SolveStatus::aborted);
    ASSERT_EQ(r.status == SolveStatus::found, oracle::has_sfdt(c, f)) << "trial " << trial;
    if (r.witness) {
      ASSERT_TRUE(is_valid_transversal(c, *r.witness));
      ASSERT_TRUE(oracle::is_sfdt(c, f, r.witness->picks));
    }
  }
}

TEST(SolverProperties, BoundedWitnessesRecount) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int kappa = 2 + static_cast<int>(rng() % 2);
    Graph g = random_connected_graph(n, 0.5, rng);
    Cover c = random_cover(g, kappa, false, rng);
    ValueMap f = random_values(g, kappa, trial % 2 ? ValuePolicy::degree_gt : ValuePolicy::degree_ge, 3, 0, rng);
    auto r = find_sfdt_bounded(c, f);
    if (r.status != SolveStatus::found) continue;
    auto deg = pick_degrees(c, *r.witness);
    ASSERT_TRUE(r.bounded);
    for (Vertex v = 0; v < n; ++v) ASSERT_LE(deg[v], f(v, r.witness->picks[v]));
    if (trial % 2) {
      auto s = find_sfdt_strictly_bounded(c, f);
      ASSERT_EQ(s.status, SolveStatus::found);
      auto sd = pick_degrees(c, *s.witness);
      for (Vertex v = 0; v < n; ++v) ASSERT_LT(sd[v], f(v, s.witness->picks[v]));
    }
  }
}

}  // namespace
}  // namespace sfdt
