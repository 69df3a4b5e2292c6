// Randomized cross-checks of the main equivalences against the brute-force
// oracles in tests/support.
#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sfdt/constructibility.hpp"
#include "sfdt/degeneracy.hpp"
#include "sfdt/harness.hpp"
#include "sfdt/reductions.hpp"
#include "sfdt/solver.hpp"

namespace sfdt {
namespace {

struct Sample {
  Cover cover;
  ValueMap values;
};

// Connected base with n <= 6 and kappa <= 3, any matchings.
Sample draw(std::mt19937_64& rng, ValuePolicy policy, int max_entry = 3) {
  const int n = 2 + static_cast<int>(rng() % 5);
  const int kappa = 1 + static_cast<int>(rng() % 3);
  Graph g = random_connected_graph(n, 0.3 + 0.1 * static_cast<double>(rng() % 5), rng);
  Cover c = random_cover(g, kappa, rng() % 2 == 0, rng);
  ValueMap f = random_values(g, kappa, policy, max_entry, 0, rng);
  return {std::move(c), std::move(f)};
}

TEST(MrProperty, NoSfdtIffConstructible) {
  std::mt19937_64 rng(71);
  int constructible = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto [c, f] = draw(rng, trial % 4 == 0 ? ValuePolicy::degree_ge : ValuePolicy::degree_equal);
    const bool has = oracle::has_sfdt(c, f);
    auto tree = is_constructible(c, f);
    ASSERT_EQ(has, !tree.has_value()) << cover_to_json(c, f).dump();
    ASSERT_EQ(find_sfdt(c, f).status == SolveStatus::found, has);
    if (tree) {
      ++constructible;
      ASSERT_TRUE(verify_construction_tree(*tree, c, f));
      for (const auto& leaf : tree->leaves) {
        for (Vertex v = 0; v < leaf.cover.base().order(); ++v) {
          ASSERT_EQ(leaf.values.sum(v), leaf.cover.base().degree(v));
        }
      }
    }
  }
  EXPECT_GT(constructible, 50);
}

TEST(MrProperty, AcceptedBuildingsHaveNoSfdt) {
  std::mt19937_64 rng(73);
  int accepted = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto [c, f] = draw(rng, ValuePolicy::degree_equal);
    if (auto w = check_building(c, f)) {
      ++accepted;
      ASSERT_TRUE(building_witness_holds(*w, c, f));
      ASSERT_FALSE(oracle::has_sfdt(c, f)) << cover_to_json(c, f).dump();
    }
  }
  EXPECT_GT(accepted, 20);
}

TEST(GeProperty, StrictSomewhereAlwaysFound) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 2000; ++trial) {
    auto [c, f] = draw(rng, ValuePolicy::degree_ge_one_gt);
    auto r = find_sfdt(c, f);
    ASSERT_EQ(r.status, SolveStatus::found);
    ASSERT_TRUE(oracle::is_sfdt(c, f, r.witness->picks));
  }
}

TEST(LProperty, MinimalPairsAreConnectedWithSmallSums) {
  std::mt19937_64 rng(83);
  int minimal = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int kappa = 1 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 0.6, rng);
    Cover c = random_cover(g, kappa, rng() % 2 == 0, rng);
    ValueMap f = trial % 2 ? random_values(g, kappa, ValuePolicy::degree_equal, 3, 0, rng)
                           : random_values(g, kappa, ValuePolicy::bounded_entries, 2, 0, rng);
    if (!is_minimal_non_sfdt(c, f)) continue;
    ++minimal;
    ASSERT_FALSE(oracle::has_sfdt(c, f));
    ASSERT_TRUE(is_connected(g));
    for (Vertex v = 0; v < n; ++v) ASSERT_LE(f.sum(v), g.degree(v)) << cover_to_json(c, f).dump();
  }
  EXPECT_GT(minimal, 20);
}

TEST(MsmrProperty, SmallValuesGiveMatchingTransversals) {
  std::mt19937_64 rng(89);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    Graph g = random_connected_graph(n, 0.5, rng);
    Cover c = random_cover(g, 3, rng() % 2 == 0, rng);
    ValueMap f = random_values(g, 3, ValuePolicy::degree_gt, 2, 0, rng);
    bool small = true;
    for (int x : f.values()) small = small && x <= 2;
    if (!small) continue;
    auto r = find_sfdt_strictly_bounded(c, f);
    ASSERT_EQ(r.status, SolveStatus::found);
    ASSERT_TRUE(r.strictly_bounded);
    auto deg = pick_degrees(c, *r.witness);
    for (Vertex v = 0; v < n; ++v) {
      ASSERT_LT(deg[v], f(v, r.witness->picks[v]));
      ASSERT_LE(deg[v], 1);
    }
    ++checked;
  }
  EXPECT_GT(checked, 500);
}

TEST(PartitionProperty, RoundTripBothWays) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int kappa = 1 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 0.5, rng);
    PartitionSpec spec;
    spec.f.assign(kappa, std::vector<int>(n));
    for (auto& fi : spec.f) {
      for (int& x : fi) x = static_cast<int>(rng() % 4);
    }
    auto vc = encode_partition(g, spec);
    auto r = find_sfdt(vc.cover, vc.values);
    if (r.status == SolveStatus::found) {
      auto parts = decode_partition(*r.witness, kappa);
      ASSERT_TRUE(is_valid_partition(g, spec, parts));
    }
    // Any assignment whose parts are valid encodes to an SFDT.
    Transversal t{std::vector<int>(n)};
    for (int& p : t.picks) p = static_cast<int>(rng() % kappa);
    auto parts = decode_partition(t, kappa);
    ASSERT_EQ(is_valid_partition(g, spec, parts), is_sfdt(vc.cover, vc.values, t));
  }
}

TEST(CoverProperty, MobiusFibersHaveDegreeTwo) {
  for (int n = 3; n <= 9; ++n) {
    Cover c = mobius_ladder_cover(n);
    for (int id = 0; id < c.order(); ++id) EXPECT_EQ(c.neighbors(id).size(), 2u);
    EXPECT_EQ(oracle::cover_component_count(c), 1);
    EXPECT_EQ(oracle::cover_component_count(circular_ladder_cover(n)), 2);
  }
}

TEST(CoverProperty, KernelCountsPositiveEntries) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    auto [c, f] = draw(rng, ValuePolicy::bounded_entries);
    int positive = 0;
    for (int x : f.values()) positive += x > 0;
    ASSERT_EQ(static_cast<int>(kernel(c, f).vertices.size()), positive);
  }
}

}  // namespace
}  // namespace sfdt
