#include "sfdt/constructibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sfdt {

std::string_view to_string(BuildingKind k) {
  switch (k) {
    case BuildingKind::monoblock:
      return "monoblock";
    case BuildingKind::tilde_complete:
      return "tilde_complete";
    case BuildingKind::odd_cycle_ladder:
      return "odd_cycle_ladder";
    case BuildingKind::even_cycle_mobius:
      return "even_cycle_mobius";
  }
  return "unknown";
}

std::optional<BuildingKind> parse_building_kind(std::string_view s) {
  for (auto k : {BuildingKind::monoblock, BuildingKind::tilde_complete, BuildingKind::odd_cycle_ladder,
                 BuildingKind::even_cycle_mobius}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

namespace {

bool degree_equality(const Cover& c, const ValueMap& f) {
  const Graph& g = c.base();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.sum(v) != g.degree(v)) return false;
  }
  return true;
}

std::vector<std::vector<int>> positive_indices(const Cover& c, const ValueMap& f) {
  std::vector<std::vector<int>> pos(c.base().order());
  for (Vertex v = 0; v < c.base().order(); ++v) {
    for (int q = 0; q < c.kappa(); ++q) {
      if (f(v, q) > 0) pos[v].push_back(q);
    }
  }
  return pos;
}

// Vertices of a cycle graph in walking order starting at 0 toward its
// smaller neighbor.
std::vector<Vertex> cycle_walk(const Graph& g) {
  std::vector<Vertex> walk{0};
  Vertex prev = -1, cur = 0;
  while (static_cast<int>(walk.size()) < g.order()) {
    auto nb = g.neighbors(cur);
    Vertex next = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = next;
    walk.push_back(cur);
  }
  return walk;
}

// Layers are transversals; checks they partition the positive vertices.
bool layers_partition_kernel(const std::vector<std::vector<int>>& layers, const Cover& c, const ValueMap& f) {
  const int n = c.base().order();
  std::vector<int> hits(c.order(), 0);
  for (const auto& layer : layers) {
    if (static_cast<int>(layer.size()) != n) return false;
    for (Vertex v = 0; v < n; ++v) {
      if (layer[v] < 0 || layer[v] >= c.kappa()) return false;
      ++hits[c.id(v, layer[v])];
    }
  }
  for (int id = 0; id < c.order(); ++id) {
    if (hits[id] != (f.at(id) > 0 ? 1 : 0)) return false;
  }
  return true;
}

bool layer_is_clique(const std::vector<int>& layer, const Cover& c) {
  const Graph& g = c.base();
  for (int e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (c.matching(e).forward(layer[ed.u]) != layer[ed.v]) return false;
  }
  return true;
}

std::optional<BuildingWitness> monoblock(const Cover& c, const ValueMap& f,
                                         const std::vector<std::vector<int>>& pos) {
  const Graph& g = c.base();
  std::vector<int> picks(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (pos[v].size() != 1) return std::nullopt;
    picks[v] = pos[v][0];
  }
  // One positive vertex per fiber and every base edge realized between them:
  // the kernel is a copy of the base.
  if (!layer_is_clique(picks, c)) return std::nullopt;
  (void)f;
  return BuildingWitness{BuildingKind::monoblock, {picks}, {}};
}

std::optional<BuildingWitness> tilde_complete(const Cover& c, const ValueMap& f) {
  const Graph& g = c.base();
  const int p = g.order();
  if (p < 2 || !is_complete(g)) return std::nullopt;
  BuildingWitness w{BuildingKind::tilde_complete, {}, {}};
  for (const auto& comp : components(kernel(c, f))) {
    if (static_cast<int>(comp.size()) != p) return std::nullopt;
    std::vector<int> layer(p, -1);
    for (int id : comp) {
      if (layer[c.fiber_of(id)] >= 0) return std::nullopt;
      layer[c.fiber_of(id)] = c.index_of(id);
    }
    if (!layer_is_clique(layer, c)) return std::nullopt;
    const int value = f.at(comp.front());
    for (int id : comp) {
      if (f.at(id) != value) return std::nullopt;
    }
    w.layers.push_back(std::move(layer));
    w.layer_values.push_back(value);
  }
  if (w.layers.empty()) return std::nullopt;
  return w;
}

std::optional<BuildingWitness> ladder(const Cover& c, const ValueMap& f, const std::vector<std::vector<int>>& pos) {
  const Graph& g = c.base();
  if (!is_cycle(g)) return std::nullopt;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (pos[v].size() != 2) return std::nullopt;
    if (f(v, pos[v][0]) != 1 || f(v, pos[v][1]) != 1) return std::nullopt;
  }
  // The matching restricted to positive vertices must be perfect on each edge.
  for (int e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    for (int q : pos[ed.u]) {
      int to = c.matching(e).forward(q);
      if (to < 0 || f(ed.v, to) == 0) return std::nullopt;
    }
  }
  const auto walk = cycle_walk(g);
  const int n = g.order();
  std::vector<int> layer0(n), layer1(n);
  layer0[walk[0]] = pos[walk[0]][0];
  for (int i = 1; i < n; ++i) layer0[walk[i]] = c.partner(walk[i - 1], layer0[walk[i - 1]], walk[i]);
  for (Vertex v = 0; v < n; ++v) layer1[v] = layer0[v] == pos[v][0] ? pos[v][1] : pos[v][0];
  // Holonomy: where the walk lands after closing the cycle.
  const bool identity = c.partner(walk[n - 1], layer0[walk[n - 1]], walk[0]) == layer0[walk[0]];
  BuildingKind kind;
  if (identity && n % 2 == 1) {
    kind = BuildingKind::odd_cycle_ladder;
  } else if (!identity && n % 2 == 0) {
    kind = BuildingKind::even_cycle_mobius;
  } else {
    return std::nullopt;
  }
  return BuildingWitness{kind, {layer0, layer1}, {}};
}

}  // namespace

std::optional<BuildingWitness> check_building(const Cover& c, const ValueMap& f) {
  if (c.base().order() == 0 || !degree_equality(c, f)) return std::nullopt;
  const auto pos = positive_indices(c, f);
  if (auto w = monoblock(c, f, pos)) return w;
  if (auto w = tilde_complete(c, f)) return w;
  if (auto w = ladder(c, f, pos)) return w;
  return std::nullopt;
}

bool building_witness_holds(const BuildingWitness& w, const Cover& c, const ValueMap& f) {
  const Graph& g = c.base();
  if (g.order() == 0 || !degree_equality(c, f)) return false;
  if (!layers_partition_kernel(w.layers, c, f)) return false;
  switch (w.kind) {
    case BuildingKind::monoblock:
      return w.layers.size() == 1 && layer_is_clique(w.layers[0], c);
    case BuildingKind::tilde_complete: {
      if (g.order() < 2 || !is_complete(g) || w.layers.empty() || w.layer_values.size() != w.layers.size()) {
        return false;
      }
      for (std::size_t i = 0; i < w.layers.size(); ++i) {
        if (!layer_is_clique(w.layers[i], c)) return false;
        for (Vertex v = 0; v < g.order(); ++v) {
          if (f(v, w.layers[i][v]) != w.layer_values[i]) return false;
        }
      }
      return true;
    }
    case BuildingKind::odd_cycle_ladder:
    case BuildingKind::even_cycle_mobius: {
      if (!is_cycle(g) || w.layers.size() != 2) return false;
      int swaps = 0;
      for (int e = 0; e < g.size(); ++e) {
        const Edge& ed = g.edge(e);
        const Matching& m = c.matching(e);
        const bool keeps = m.forward(w.layers[0][ed.u]) == w.layers[0][ed.v] &&
                           m.forward(w.layers[1][ed.u]) == w.layers[1][ed.v];
        const bool crosses = m.forward(w.layers[0][ed.u]) == w.layers[1][ed.v] &&
                             m.forward(w.layers[1][ed.u]) == w.layers[0][ed.v];
        if (!keeps && !crosses) return false;
        swaps += crosses;
      }
      for (Vertex v = 0; v < g.order(); ++v) {
        if (f(v, w.layers[0][v]) != 1 || f(v, w.layers[1][v]) != 1) return false;
      }
      if (w.kind == BuildingKind::odd_cycle_ladder) return g.order() % 2 == 1 && swaps % 2 == 0;
      return g.order() % 2 == 0 && swaps % 2 == 1;
    }
  }
  return false;
}

namespace {

class SplitSearch {
 public:
  SplitSearch(const Cover& c, const ValueMap& f) : c_(c), f_(f), bd_(blocks(c.base())) {
    order_blocks();
    for (int b : order_) {
      block_covers_.push_back(restrict_to(c_, f_, bd_.blocks[b]));
    }
    remaining_.resize(c.base().order());
    for (Vertex v = 0; v < c.base().order(); ++v) {
      auto fb = f.fiber(v);
      remaining_[v].assign(fb.begin(), fb.end());
    }
    for (std::size_t i = 0; i < order_.size(); ++i) {
      for (Vertex w : bd_.blocks[order_[i]]) {
        if (bd_.is_cut_vertex(w)) last_block_[w] = static_cast<int>(i);
      }
    }
    chosen_.resize(order_.size());
  }

  std::optional<ConstructionTree> run() {
    if (!place(0)) return std::nullopt;
    return assemble();
  }

 private:
  // Breadth-first over the block-cut tree from block 0, remembering the cut
  // vertex through which each block was reached.
  void order_blocks() {
    const int nb = static_cast<int>(bd_.blocks.size());
    std::vector<char> seen(nb, 0);
    std::set<Vertex> seen_cut;
    order_.push_back(0);
    via_.push_back(-1);
    seen[0] = 1;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      for (Vertex w : bd_.blocks[order_[head]]) {
        if (!bd_.is_cut_vertex(w) || seen_cut.contains(w)) continue;
        seen_cut.insert(w);
        for (int b : bd_.blocks_of[w]) {
          if (!seen[b]) {
            seen[b] = 1;
            order_.push_back(b);
            via_.push_back(w);
          }
        }
      }
    }
  }

  bool place(std::size_t i) {
    if (i == order_.size()) return true;
    std::vector<Vertex> cuts;
    const auto& verts = bd_.blocks[order_[i]];
    for (Vertex w : verts) {
      if (bd_.is_cut_vertex(w)) cuts.push_back(w);
    }
    chosen_[i].clear();
    return choose_shares(i, cuts, 0);
  }

  bool choose_shares(std::size_t i, const std::vector<Vertex>& cuts, std::size_t j) {
    SubCover& block = block_covers_[i];
    if (j == cuts.size()) {
      auto w = check_building(block.cover, block.values);
      if (!w) return false;
      for (auto& [cut, share] : chosen_[i]) {
        for (int q = 0; q < c_.kappa(); ++q) remaining_[cut][q] -= share[q];
      }
      witness_.resize(order_.size());
      witness_[i] = *w;
      if (place(i + 1)) return true;
      for (auto& [cut, share] : chosen_[i]) {
        for (int q = 0; q < c_.kappa(); ++q) remaining_[cut][q] += share[q];
      }
      return false;
    }
    const Vertex w = cuts[j];
    const int local = static_cast<int>(std::lower_bound(block.to_parent.begin(), block.to_parent.end(), w) -
                                       block.to_parent.begin());
    const int need = block.cover.base().degree(local);
    std::vector<int> share(c_.kappa(), 0);

    auto try_share = [&]() {
      for (int q = 0; q < c_.kappa(); ++q) block.values.set(local, q, share[q]);
      chosen_[i].emplace_back(w, share);
      bool ok = choose_shares(i, cuts, j + 1);
      if (!ok) chosen_[i].pop_back();
      return ok;
    };

    if (last_block_.at(w) == static_cast<int>(i)) {
      share = remaining_[w];
      if (std::accumulate(share.begin(), share.end(), 0) != need) return false;
      return try_share();
    }
    // All vectors 0 <= share <= remaining with sum `need`, in lexicographic
    // order of the share.
    return enumerate(share, 0, need, [&]() { return try_share(); }, w);
  }

  template <class Fn>
  bool enumerate(std::vector<int>& share, int q, int left, Fn&& fn, Vertex w) {
    if (q == c_.kappa() - 1) {
      if (left > remaining_[w][q]) return false;
      share[q] = left;
      return fn();
    }
    for (int x = 0; x <= std::min(left, remaining_[w][q]); ++x) {
      share[q] = x;
      if (enumerate(share, q + 1, left - x, fn, w)) return true;
    }
    return false;
  }

  ConstructionTree assemble() {
    ConstructionTree tree;
    std::map<Vertex, std::vector<int>> accumulated;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      SubCover& block = block_covers_[i];
      tree.leaves.push_back({block.to_parent, block.cover, block.values, witness_[i]});
      if (i > 0) {
        const Vertex w = via_[i];
        GluingStep step;
        step.cut_vertex = w;
        step.leaf = static_cast<int>(i);
        step.accumulated_share = accumulated.at(w);
        const int local = static_cast<int>(std::lower_bound(block.to_parent.begin(), block.to_parent.end(), w) -
                                           block.to_parent.begin());
        auto fb = block.values.fiber(local);
        step.leaf_share.assign(fb.begin(), fb.end());
        tree.gluings.push_back(std::move(step));
      }
      for (int local = 0; local < block.cover.base().order(); ++local) {
        auto& acc = accumulated[block.to_parent[local]];
        acc.resize(c_.kappa(), 0);
        for (int q = 0; q < c_.kappa(); ++q) acc[q] += block.values(local, q);
      }
    }
    return tree;
  }

  const Cover& c_;
  const ValueMap& f_;
  BlockDecomposition bd_;
  std::vector<int> order_;
  std::vector<Vertex> via_;
  std::vector<SubCover> block_covers_;  // aligned with order_
  std::vector<std::vector<int>> remaining_;
  std::map<Vertex, int> last_block_;
  std::vector<std::vector<std::pair<Vertex, std::vector<int>>>> chosen_;
  std::vector<BuildingWitness> witness_;
};

}  // namespace

std::optional<ConstructionTree> is_constructible(const Cover& c, const ValueMap& f) {
  if (!is_connected(c.base())) throw PreconditionError("constructibility needs a connected base graph");
  if (c.base().order() == 0 || !degree_equality(c, f)) return std::nullopt;
  return SplitSearch(c, f).run();
}

bool verify_construction_tree(const ConstructionTree& tree, const Cover& c, const ValueMap& f) {
  const Graph& g = c.base();
  const int kappa = c.kappa();
  if (tree.leaves.empty() || tree.gluings.size() + 1 != tree.leaves.size()) return false;

  for (const auto& leaf : tree.leaves) {
    if (leaf.cover.kappa() != kappa || leaf.values.kappa() != kappa) return false;
    if (static_cast<int>(leaf.vertices.size()) != leaf.cover.base().order()) return false;
    if (leaf.values.order() != leaf.cover.base().order()) return false;
    std::set<Vertex> distinct(leaf.vertices.begin(), leaf.vertices.end());
    if (distinct.size() != leaf.vertices.size()) return false;
    for (Vertex v : leaf.vertices) {
      if (v < 0 || v >= g.order()) return false;
    }
    if (!check_building(leaf.cover, leaf.values)) return false;
    if (!building_witness_holds(leaf.building, leaf.cover, leaf.values)) return false;
  }

  std::set<Vertex> present;
  std::map<Vertex, std::vector<int>> values;
  std::map<std::pair<Vertex, Vertex>, Matching> edges;

  auto absorb = [&](const ConstructionLeaf& leaf, std::optional<Vertex> shared) {
    const Graph& lg = leaf.cover.base();
    for (int local = 0; local < lg.order(); ++local) {
      const Vertex v = leaf.vertices[local];
      auto& acc = values[v];
      acc.resize(kappa, 0);
      if (!shared || v != *shared) {
        if (present.contains(v)) return false;
      }
      present.insert(v);
      for (int q = 0; q < kappa; ++q) acc[q] += leaf.values(local, q);
    }
    for (int e = 0; e < lg.size(); ++e) {
      const Vertex a = leaf.vertices[lg.edge(e).u], b = leaf.vertices[lg.edge(e).v];
      const Matching& m = leaf.cover.matching(e);
      auto key = std::minmax(a, b);
      if (!edges.emplace(std::pair{key.first, key.second}, a < b ? m : m.inverse()).second) return false;
    }
    return true;
  };

  if (!absorb(tree.leaves[0], std::nullopt)) return false;
  std::vector<char> used(tree.leaves.size(), 0);
  used[0] = 1;
  for (const auto& step : tree.gluings) {
    if (step.leaf <= 0 || step.leaf >= static_cast<int>(tree.leaves.size()) || used[step.leaf]) return false;
    used[step.leaf] = 1;
    const auto& leaf = tree.leaves[step.leaf];
    int overlap = 0;
    int local_w = -1;
    for (int local = 0; local < static_cast<int>(leaf.vertices.size()); ++local) {
      if (present.contains(leaf.vertices[local])) {
        ++overlap;
        if (leaf.vertices[local] == step.cut_vertex) local_w = local;
      }
    }
    if (overlap != 1 || local_w < 0) return false;
    if (values.at(step.cut_vertex) != step.accumulated_share) return false;
    auto fb = leaf.values.fiber(local_w);
    if (!std::equal(fb.begin(), fb.end(), step.leaf_share.begin(), step.leaf_share.end())) return false;
    if (!absorb(leaf, step.cut_vertex)) return false;
  }

  if (static_cast<int>(present.size()) != g.order()) return false;
  if (static_cast<int>(edges.size()) != g.size()) return false;
  for (int e = 0; e < g.size(); ++e) {
    auto it = edges.find({g.edge(e).u, g.edge(e).v});
    if (it == edges.end() || !(it->second == c.matching(e))) return false;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    auto fb = f.fiber(v);
    if (!std::equal(fb.begin(), fb.end(), values[v].begin(), values[v].end())) return false;
  }
  return true;
}

}  // namespace sfdt
