#include "sfdt/graph.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"

namespace sfdt {
namespace {

TEST(MakeGraph, TriangleIsCompleteAndCycle) {
  Graph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(is_complete(g));
  EXPECT_TRUE(is_cycle(g));
}

TEST(MakeGraph, SingleVertex) {
  Graph g = make_graph(1, {});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.degree(0), 0);
  EXPECT_TRUE(is_connected(g));
}

TEST(MakeGraph, K4AllDegreesThree) {
  Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
  EXPECT_TRUE(is_regular(g, 3));
  EXPECT_TRUE(is_complete(g));
  EXPECT_EQ(g, complete_graph(4));
}

TEST(MakeGraph, RejectsBadInput) {
  EXPECT_THROW(make_graph(2, {{0, 2}}), GraphError);
  EXPECT_THROW(make_graph(2, {{1, 1}}), GraphError);
  EXPECT_THROW(make_graph(2, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(make_graph(-1, {}), GraphError);
}

TEST(MakeGraph, EdgeIdsIgnoreInputOrder) {
  Graph a = make_graph(4, {{2, 3}, {0, 1}, {1, 2}});
  Graph b = make_graph(4, {{1, 0}, {3, 2}, {2, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.edge_id(2, 1), b.edge_id(1, 2));
  EXPECT_EQ(a.edge_id(0, 3), -1);
}

TEST(Graph, NeighborsSortedAndAlignedWithEdgeIds) {
  Graph g = petersen_graph();
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    auto ids = g.incident_edges(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Edge& e = g.edge(ids[i]);
      EXPECT_TRUE((e.u == v && e.v == nb[i]) || (e.v == v && e.u == nb[i]));
    }
  }
}

TEST(Graph, InducedRelabels) {
  Graph g = cycle_graph(5);
  std::vector<Vertex> keep{0, 1, 2};
  Graph h = g.induced(keep);
  EXPECT_EQ(h, path_graph(3));
}

TEST(Blocks, Bowtie) {
  auto bd = blocks(bowtie_graph());
  EXPECT_EQ(bd.blocks.size(), 2u);
  EXPECT_EQ(bd.cut_vertices, std::vector<Vertex>{2});
  EXPECT_FALSE(is_2connected(bowtie_graph()));
}

TEST(Blocks, CycleIsOneBlock) {
  auto bd = blocks(cycle_graph(5));
  EXPECT_EQ(bd.blocks.size(), 1u);
  EXPECT_TRUE(bd.cut_vertices.empty());
  EXPECT_TRUE(is_2connected(cycle_graph(5)));
}

TEST(Blocks, PathHasBridgeBlocks) {
  auto bd = blocks(path_graph(4));
  EXPECT_EQ(bd.blocks.size(), 3u);
  EXPECT_EQ(bd.cut_vertices, (std::vector<Vertex>{1, 2}));
  for (const auto& b : bd.blocks) EXPECT_EQ(b.size(), 2u);
}

TEST(Blocks, IsolatedVertexIsItsOwnBlock) {
  auto bd = blocks(make_graph(3, {{0, 1}}));
  EXPECT_EQ(bd.blocks.size(), 2u);
}

TEST(Predicates, CycleAndComplete) {
  EXPECT_TRUE(is_cycle(cycle_graph(5)));
  EXPECT_FALSE(is_cycle(complete_graph(4)));
  EXPECT_FALSE(is_cycle(make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  EXPECT_TRUE(is_complete(complete_graph(4)));
  EXPECT_FALSE(is_complete(cycle_graph(4)));
  EXPECT_TRUE(is_complete(complete_graph(1)));
}

TEST(Families, Sizes) {
  EXPECT_EQ(petersen_graph().size(), 15);
  EXPECT_TRUE(is_regular(petersen_graph(), 3));
  EXPECT_EQ(star_graph(3).order(), 4);
  EXPECT_EQ(star_graph(3).max_degree(), 3);
  EXPECT_THROW(cycle_graph(2), GraphError);
}

// Random graphs: degree sum, block edge partition, cut vertices and
// 2-connectivity against direct recomputation.
TEST(GraphProperties, RandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    Graph g = random_graph(n, 0.4, rng);
    int degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) degree_sum += g.degree(v);
    ASSERT_EQ(degree_sum, 2 * g.size());
    ASSERT_EQ(is_connected(g), oracle::connected(n, g.edge_pairs()));

    auto bd = blocks(g);
    std::multiset<int> seen;
    for (const auto& be : bd.block_edges) seen.insert(be.begin(), be.end());
    std::multiset<int> all;
    for (int e = 0; e < g.size(); ++e) all.insert(e);
    ASSERT_EQ(seen, all);

    // A cut vertex disconnects its component.
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Vertex> rest;
      for (Vertex u = 0; u < n; ++u) {
        if (u != v) rest.push_back(u);
      }
      const auto before = connected_components(g).size();
      const auto after = connected_components(g.induced(rest)).size();
      const bool cut = g.degree(v) > 0 && after > before;
      ASSERT_EQ(bd.is_cut_vertex(v), cut) << "vertex " << v << " trial " << trial;
    }
    ASSERT_EQ(is_2connected(g), bd.blocks.size() == 1 && n >= 3);
  }
}

TEST(GraphProperties, RandomConnectedGraphsAreConnected) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_connected_graph(1 + trial % 8, 0.2, rng);
    EXPECT_TRUE(is_connected(g));
  }
}

}  // namespace
}  // namespace sfdt
