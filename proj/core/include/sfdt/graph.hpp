#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sfdt {

using Vertex = int;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u;
  Vertex v;  // u < v

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on dense indices 0..n-1.
///
/// Edges are stored sorted lexicographically, so edge ids are canonical for a
/// given edge set regardless of input order. Adjacency is kept in CSR form with
/// each neighbor entry carrying the id of the edge it came from.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on out-of-range endpoints, self-loops or duplicates.
  Graph(int n, std::span<const std::pair<int, int>> edge_list);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[id]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbr_.data() + offsets_[v], nbr_.data() + offsets_[v + 1]};
  }
  /// Edge ids aligned with neighbors(v).
  std::span<const int> incident_edges(Vertex v) const {
    return {nbr_edge_.data() + offsets_[v], nbr_edge_.data() + offsets_[v + 1]};
  }
  /// Position of v's first entry in the flat adjacency arrays.
  int adjacency_offset(Vertex v) const { return offsets_[v]; }

  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;
  int min_degree() const;

  /// Edge id of uv, or -1 when u and v are not adjacent.
  int edge_id(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v) >= 0; }

  /// Subgraph induced on `keep`, relabeled so keep[i] becomes vertex i.
  Graph induced(std::span<const Vertex> keep) const;

  std::vector<std::pair<int, int>> edge_pairs() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> nbr_;
  std::vector<int> nbr_edge_;
};

Graph make_graph(int n, std::span<const std::pair<int, int>> edge_list);
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edge_list);

struct BlockDecomposition {
  /// Vertex sets of blocks, each sorted. Bridges are two-vertex blocks and an
  /// isolated vertex is a one-vertex block.
  std::vector<std::vector<Vertex>> blocks;
  /// Edge ids per block, aligned with `blocks`.
  std::vector<std::vector<int>> block_edges;
  std::vector<Vertex> cut_vertices;
  /// blocks_of[v] lists the indices of blocks containing v.
  std::vector<std::vector<int>> blocks_of;
  /// Block-cut tree incidences as (block index, cut vertex).
  std::vector<std::pair<int, Vertex>> tree_edges;

  bool is_cut_vertex(Vertex v) const { return blocks_of[v].size() >= 2; }
};

BlockDecomposition blocks(const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_2connected(const Graph& g);
bool is_cycle(const Graph& g);
bool is_complete(const Graph& g);
bool is_regular(const Graph& g, int d);

// Named families.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph bowtie_graph();
Graph petersen_graph();
/// G(n, p) with a seeded engine.
Graph random_graph(int n, double p, std::mt19937_64& rng);
/// Random spanning tree (each vertex after the first attaches to an earlier
/// one in a shuffled order) plus every remaining pair with probability p.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

}  // namespace sfdt
