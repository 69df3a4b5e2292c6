#include "sfdt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "sfdt/random.hpp"

namespace sfdt {

Graph::Graph(int n, std::span<const std::pair<int, int>> edge_list) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }

  std::vector<int> deg(n, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  nbr_.resize(offsets_[n]);
  nbr_edge_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Two passes over the sorted edges: first every vertex receives its smaller
  // neighbors in ascending order, then its larger ones. Lists end up sorted.
  for (int id = 0; id < size(); ++id) {
    const auto& e = edges_[id];
    nbr_[fill[e.v]] = e.u;
    nbr_edge_[fill[e.v]++] = id;
  }
  for (int id = 0; id < size(); ++id) {
    const auto& e = edges_[id];
    nbr_[fill[e.u]] = e.v;
    nbr_edge_[fill[e.u]++] = id;
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::edge_id(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return nbr_edge_[offsets_[u] + static_cast<int>(it - nb.begin())];
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> local(n_, -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) local[keep[i]] = i;
  std::vector<std::pair<int, int>> sub;
  for (const auto& e : edges_) {
    if (local[e.u] >= 0 && local[e.v] >= 0) sub.emplace_back(local[e.u], local[e.v]);
  }
  return Graph(static_cast<int>(keep.size()), sub);
}

std::vector<std::pair<int, int>> Graph::edge_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

Graph make_graph(int n, std::span<const std::pair<int, int>> edge_list) { return Graph(n, edge_list); }

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edge_list) {
  return Graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

BlockDecomposition blocks(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out;
  out.blocks_of.assign(n, {});

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  int timer = 0;

  struct Frame {
    Vertex v;
    int parent_edge;
    int next;  // index into neighbors(v)
  };

  auto emit_block = [&](int until_edge) {
    std::vector<int> ids;
    std::vector<Vertex> verts;
    while (!edge_stack.empty()) {
      int id = edge_stack.back();
      edge_stack.pop_back();
      ids.push_back(id);
      verts.push_back(g.edge(id).u);
      verts.push_back(g.edge(id).v);
      if (id == until_edge) break;
    }
    std::sort(ids.begin(), ids.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.blocks.push_back(std::move(verts));
    out.block_edges.push_back(std::move(ids));
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      out.blocks.push_back({root});
      out.block_edges.push_back({});
      continue;
    }
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      auto nb = g.neighbors(fr.v);
      auto ie = g.incident_edges(fr.v);
      if (fr.next < static_cast<int>(nb.size())) {
        Vertex w = nb[fr.next];
        int id = ie[fr.next];
        ++fr.next;
        if (id == fr.parent_edge) continue;
        if (disc[w] < 0) {
          edge_stack.push_back(id);
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else if (disc[w] < disc[fr.v]) {
          edge_stack.push_back(id);
          low[fr.v] = std::min(low[fr.v], disc[w]);
        }
      } else {
        Frame done = fr;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] >= disc[parent]) emit_block(done.parent_edge);
        }
      }
    }
  }

  // Canonical block order: by smallest vertex, then by vertex list.
  std::vector<int> perm(out.blocks.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return out.blocks[a] < out.blocks[b]; });
  std::vector<std::vector<Vertex>> sorted_blocks;
  std::vector<std::vector<int>> sorted_edges;
  for (int i : perm) {
    sorted_blocks.push_back(std::move(out.blocks[i]));
    sorted_edges.push_back(std::move(out.block_edges[i]));
  }
  out.blocks = std::move(sorted_blocks);
  out.block_edges = std::move(sorted_edges);

  for (int b = 0; b < static_cast<int>(out.blocks.size()); ++b) {
    for (Vertex v : out.blocks[b]) out.blocks_of[v].push_back(b);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (out.blocks_of[v].size() >= 2) {
      out.cut_vertices.push_back(v);
      for (int b : out.blocks_of[v]) out.tree_edges.emplace_back(b, v);
    }
  }
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_2connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && blocks(g).blocks.size() == 1;
}

bool is_cycle(const Graph& g) { return g.order() >= 3 && is_regular(g, 2) && is_connected(g); }

bool is_complete(const Graph& g) {
  const long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_regular(const Graph& g, int d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph bowtie_graph() { return make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

Graph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, e);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (bernoulli(rng, p)) e.emplace_back(i, j);
    }
  }
  return Graph(n, e);
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_int(rng, 0, i)]);
  std::set<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) {
    int a = order[i], b = order[uniform_int(rng, 0, i - 1)];
    e.emplace(std::min(a, b), std::max(a, b));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!e.contains({i, j}) && bernoulli(rng, p)) e.emplace(i, j);
    }
  }
  std::vector<std::pair<int, int>> list(e.begin(), e.end());
  return Graph(n, list);
}

}  // namespace sfdt
