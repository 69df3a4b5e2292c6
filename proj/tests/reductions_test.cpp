#include "sfdt/reductions.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sfdt/degeneracy.hpp"
#include "sfdt/harness.hpp"
#include "sfdt/solver.hpp"

namespace sfdt {
namespace {

ListAssignment uniform_lists(int n, int palette, std::vector<int> colors) {
  return {palette, std::vector<std::vector<int>>(n, colors)};
}

SignedGraph all_positive(Graph g) {
  std::vector<int> sign(g.size(), 1);
  return {std::move(g), std::move(sign)};
}

TEST(Partition, K4OneTwoHasNoSplit) {
  Graph g = complete_graph(4);
  std::vector<int> t{1, 2};
  auto vc = encode_partition(g, PartitionSpec::constant(4, t));
  EXPECT_EQ(find_sfdt(vc.cover, vc.values).status, SolveStatus::exhausted);
  EXPECT_FALSE(oracle::has_sfdt(vc.cover, vc.values));
}

TEST(Partition, C4TwoTwoSplits) {
  Graph g = cycle_graph(4);
  std::vector<int> t{2, 2};
  auto spec = PartitionSpec::constant(4, t);
  auto vc = encode_partition(g, spec);
  auto r = find_sfdt(vc.cover, vc.values);
  ASSERT_EQ(r.status, SolveStatus::found);
  auto parts = decode_partition(*r.witness, 2);
  EXPECT_TRUE(is_valid_partition(g, spec, parts));
  for (const auto& p : parts) EXPECT_TRUE(is_strictly_k_degenerate(g.induced(p), 2));
}

TEST(Partition, SinglePartWithColoringNumber) {
  Graph g = petersen_graph();
  std::vector<int> t{coloring_number(g)};
  auto spec = PartitionSpec::constant(g.order(), t);
  auto vc = encode_partition(g, spec);
  auto r = find_sfdt(vc.cover, vc.values);
  ASSERT_EQ(r.status, SolveStatus::found);
  auto parts = decode_partition(*r.witness, 1);
  EXPECT_EQ(parts[0].size(), 10u);
  EXPECT_TRUE(is_valid_partition(g, spec, parts));
}

TEST(Partition, EmptyGraph) {
  auto parts = decode_partition(Transversal{}, 3);
  ASSERT_EQ(parts.size(), 3u);
  for (const auto& p : parts) EXPECT_TRUE(p.empty());
}

TEST(ListColoring, Triangle) {
  Graph g = complete_graph(3);
  auto three = encode_list_coloring(g, uniform_lists(3, 3, {0, 1, 2}));
  auto r = find_sfdt(three.cover, three.values);
  ASSERT_EQ(r.status, SolveStatus::found);
  for (const Edge& e : g.edges()) EXPECT_NE(r.witness->picks[e.u], r.witness->picks[e.v]);
  auto two = encode_list_coloring(g, uniform_lists(3, 3, {0, 1}));
  EXPECT_EQ(find_sfdt(two.cover, two.values).status, SolveStatus::exhausted);
}

TEST(ListColoring, EvenCycleTwoLists) {
  auto vc = encode_list_coloring(cycle_graph(6), uniform_lists(6, 3, {1, 2}));
  EXPECT_EQ(find_sfdt(vc.cover, vc.values).status, SolveStatus::found);
}

TEST(ListColoring, Validation) {
  EXPECT_THROW(encode_list_coloring(path_graph(2), uniform_lists(2, 2, {2})), std::invalid_argument);
  EXPECT_THROW(encode_list_coloring(path_graph(2), uniform_lists(3, 2, {0})), std::invalid_argument);
}

TEST(Dp, LaddersCertifyDpChromaticAboveTwo) {
  ValueMap f5(5, 2, 1);
  ASSERT_TRUE(encode_dp(circular_ladder_cover(5), f5, 2));
  EXPECT_EQ(find_sfdt(circular_ladder_cover(5), f5).status, SolveStatus::exhausted);
  ValueMap f4(4, 2, 1);
  ASSERT_TRUE(encode_dp(mobius_ladder_cover(4), f4, 2));
  EXPECT_EQ(find_sfdt(mobius_ladder_cover(4), f4).status, SolveStatus::exhausted);
}

TEST(Dp, TreesAlwaysColorable) {
  std::mt19937_64 rng(41);
  Graph tree = make_graph(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  for (int trial = 0; trial < 100; ++trial) {
    Cover c = random_cover(tree, 3, false, rng);
    ValueMap f(7, 3);
    for (Vertex v = 0; v < 7; ++v) {
      int skip = static_cast<int>(rng() % 3);
      for (int q = 0; q < 3; ++q) f.set(v, q, q == skip ? 0 : 1);
    }
    ASSERT_TRUE(encode_dp(c, f, 2));
    auto r = find_sfdt(c, f);
    ASSERT_EQ(r.status, SolveStatus::found);
    EXPECT_TRUE(induced_on_transversal(c, *r.witness).edges.empty());
  }
}

TEST(Dp, RejectsNonBinaryValues) {
  EXPECT_THROW(encode_dp(circular_ladder_cover(5), ValueMap(5, 2, 2), 2), std::invalid_argument);
  EXPECT_FALSE(encode_dp(circular_ladder_cover(5), ValueMap(5, 2, 0), 1));
}

TEST(Signed, PaletteOrder) {
  EXPECT_EQ(signed_palette(1), std::vector<int>{0});
  EXPECT_EQ(signed_palette(4), (std::vector<int>{1, -1, 2, -2}));
  EXPECT_EQ(signed_palette(5), (std::vector<int>{0, 1, -1, 2, -2}));
  EXPECT_THROW(signed_palette(0), std::invalid_argument);
}

TEST(Signed, PositiveTriangle) {
  auto sg = all_positive(complete_graph(3));
  auto two = encode_signed(sg, 2);
  EXPECT_EQ(find_sfdt(two.cover, two.values).status, SolveStatus::exhausted);
  EXPECT_EQ(oracle::count_sfdts(two.cover, two.values), 0);
  auto three = encode_signed(sg, 3);
  auto r = find_sfdt(three.cover, three.values);
  ASSERT_EQ(r.status, SolveStatus::found);
  EXPECT_TRUE(is_signed_coloring(sg, decode_signed(*r.witness, 3)));
}

TEST(Signed, NegativeEdgeOneColor) {
  SignedGraph sg{path_graph(2), {-1}};
  auto vc = encode_signed(sg, 1);
  EXPECT_EQ(find_sfdt(vc.cover, vc.values).status, SolveStatus::exhausted);
}

TEST(Signed, NegativeTriangleTwoColors) {
  // sigma = -1 everywhere: phi(u) != -phi(v), so equal colors are fine.
  SignedGraph sg{complete_graph(3), {-1, -1, -1}};
  auto vc = encode_signed(sg, 2);
  auto r = find_sfdt(vc.cover, vc.values);
  ASSERT_EQ(r.status, SolveStatus::found);
  EXPECT_TRUE(is_signed_coloring(sg, decode_signed(*r.witness, 2)));
}

TEST(Signed, MatchingsArePerfect) {
  std::mt19937_64 rng(43);
  for (int k = 1; k <= 6; ++k) {
    Graph g = random_connected_graph(5, 0.5, rng);
    std::vector<int> sign;
    for (int e = 0; e < g.size(); ++e) sign.push_back(rng() % 2 ? 1 : -1);
    auto vc = encode_signed({g, sign}, k);
    for (const auto& m : vc.cover.matchings()) EXPECT_TRUE(m.is_perfect());
  }
}

// Signed encoding against direct search over colorings.
TEST(Signed, AgreesWithDirectSearch) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    const int k = 1 + trial % 3;
    Graph g = random_graph(n, 0.6, rng);
    std::vector<int> sign;
    for (int e = 0; e < g.size(); ++e) sign.push_back(rng() % 2 ? 1 : -1);
    SignedGraph sg{g, sign};
    const auto palette = signed_palette(k);
    bool colorable = false;
    oracle::for_each_transversal(n, k, [&](const std::vector<int>& idx) {
      std::vector<int> colors;
      for (int i : idx) colors.push_back(palette[i]);
      colorable = is_signed_coloring(sg, colors);
      return !colorable;
    });
    auto vc = encode_signed(sg, k);
    ASSERT_EQ(find_sfdt(vc.cover, vc.values).status == SolveStatus::found, colorable);
  }
}

TEST(Forested, Examples) {
  auto k4 = encode_forested(complete_graph(4), uniform_lists(4, 2, {0, 1}));
  auto r = find_sfdt(k4.cover, k4.values);
  ASSERT_EQ(r.status, SolveStatus::found);
  for (const auto& part : decode_partition(*r.witness, 2)) {
    EXPECT_TRUE(is_strictly_k_degenerate(complete_graph(4).induced(part), 2));
  }
  auto c3 = encode_forested(cycle_graph(3), uniform_lists(3, 1, {0}));
  EXPECT_EQ(find_sfdt(c3.cover, c3.values).status, SolveStatus::exhausted);
}

TEST(Forested, ThreeListsOnDenseGraph) {
  // K6 minus a perfect matching (octahedron) with 3-lists from a palette of 4.
  Graph g = make_graph(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4},
                           {3, 5}});
  ListAssignment la{4, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}, {1, 2, 3}}};
  auto vc = encode_forested(g, la);
  auto r = find_sfdt_strictly_bounded(vc.cover, vc.values);
  ASSERT_EQ(r.status, SolveStatus::found);
  auto deg = pick_degrees(vc.cover, *r.witness);
  EXPECT_LE(*std::max_element(deg.begin(), deg.end()), 1);
}

// List coloring through the cover agrees with direct search.
TEST(ListColoring, AgreesWithBruteForce) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int palette = 1 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 0.5, rng);
    ListAssignment la{palette, std::vector<std::vector<int>>(n)};
    for (auto& l : la.lists) {
      for (int c = 0; c < palette; ++c) {
        if (rng() % 3) l.push_back(c);
      }
    }
    auto vc = encode_list_coloring(g, la);
    ASSERT_EQ(find_sfdt(vc.cover, vc.values).status == SolveStatus::found,
              oracle::list_colorable(n, g.edge_pairs(), la.lists));
  }
}

}  // namespace
}  // namespace sfdt
