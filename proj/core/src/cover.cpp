#include "sfdt/cover.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sfdt {

Matching Matching::from_pairs(int kappa, std::span<const std::pair<int, int>> pairs) {
  Matching m(kappa);
  for (auto [p, q] : pairs) {
    if (p < 0 || p >= kappa || q < 0 || q >= kappa) {
      throw CoverError("matching pair (" + std::to_string(p + 1) + "," + std::to_string(q + 1) +
                       ") outside fiber range 1.." + std::to_string(kappa));
    }
    if (m.forward_[p] >= 0 || m.backward_[q] >= 0) {
      throw CoverError("matching pair (" + std::to_string(p + 1) + "," + std::to_string(q + 1) +
                       ") reuses a fiber vertex");
    }
    m.forward_[p] = q;
    m.backward_[q] = p;
  }
  return m;
}

Matching Matching::identity(int kappa) {
  Matching m(kappa);
  std::iota(m.forward_.begin(), m.forward_.end(), 0);
  std::iota(m.backward_.begin(), m.backward_.end(), 0);
  return m;
}

int Matching::size() const {
  return static_cast<int>(std::count_if(forward_.begin(), forward_.end(), [](int q) { return q >= 0; }));
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < kappa(); ++p) {
    if (forward_[p] >= 0) out.emplace_back(p, forward_[p]);
  }
  return out;
}

Matching Matching::inverse() const {
  Matching m;
  m.forward_ = backward_;
  m.backward_ = forward_;
  return m;
}

Cover::Cover(Graph base, int kappa, std::vector<Matching> matchings)
    : base_(std::move(base)), kappa_(kappa), matchings_(std::move(matchings)) {
  if (kappa_ < 1) throw CoverError("kappa must be at least 1");
  if (static_cast<int>(matchings_.size()) != base_.size()) {
    throw CoverError("expected one matching per base edge");
  }
  for (const auto& m : matchings_) {
    if (m.kappa() != kappa_) throw CoverError("matching fiber size differs from kappa");
  }
  link_.assign(static_cast<std::size_t>(2 * base_.size()) * kappa_, -1);
  for (Vertex v = 0; v < base_.order(); ++v) {
    auto ie = base_.incident_edges(v);
    for (int slot = 0; slot < static_cast<int>(ie.size()); ++slot) {
      const Matching& m = matchings_[ie[slot]];
      const bool lower = base_.edge(ie[slot]).u == v;
      for (int q = 0; q < kappa_; ++q) {
        link_[(base_.adjacency_offset(v) + slot) * kappa_ + q] = lower ? m.forward(q) : m.backward(q);
      }
    }
  }
}

int Cover::edge_count() const {
  int total = 0;
  for (const auto& m : matchings_) total += m.size();
  return total;
}

int Cover::partner(Vertex v, int q, Vertex u) const {
  int e = base_.edge_id(v, u);
  if (e < 0) return -1;
  return base_.edge(e).u == v ? matchings_[e].forward(q) : matchings_[e].backward(q);
}

std::vector<int> Cover::neighbors(int cover_id) const {
  const Vertex v = fiber_of(cover_id);
  const int q = index_of(cover_id);
  std::vector<int> out;
  auto nb = base_.neighbors(v);
  for (int slot = 0; slot < static_cast<int>(nb.size()); ++slot) {
    int p = partner_at(v, slot, q);
    if (p >= 0) out.push_back(id(nb[slot], p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Cover make_cover(const Graph& g, int kappa, const MatchingSpec& matchings) {
  if (kappa < 1) throw CoverError("kappa must be at least 1");
  std::vector<Matching> per_edge(g.size(), Matching(kappa));
  std::vector<char> given(g.size(), 0);
  for (const auto& [key, pairs] : matchings) {
    auto [a, b] = key;
    int e = g.edge_id(a, b);
    if (e < 0) {
      throw CoverError("matching given on non-edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    if (given[e]) throw CoverError("matching given twice for edge " + std::to_string(a) + "-" + std::to_string(b));
    given[e] = 1;
    std::vector<std::pair<int, int>> oriented;
    for (auto [p, q] : pairs) oriented.emplace_back(a < b ? std::pair{p, q} : std::pair{q, p});
    per_edge[e] = Matching::from_pairs(kappa, oriented);
  }
  return Cover(g, kappa, std::move(per_edge));
}

ValueMap::ValueMap(int n, int kappa, int fill) : n_(n), kappa_(kappa), values_(static_cast<std::size_t>(n) * kappa, fill) {
  if (fill < 0) throw CoverError("values must be nonnegative");
}

ValueMap::ValueMap(int n, int kappa, std::vector<int> values) : n_(n), kappa_(kappa), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != n * kappa) throw CoverError("value map size mismatch");
  for (int x : values_) {
    if (x < 0) throw CoverError("values must be nonnegative");
  }
}

void ValueMap::set(Vertex v, int q, int value) {
  if (value < 0) throw CoverError("values must be nonnegative");
  values_[v * kappa_ + q] = value;
}

int ValueMap::sum(Vertex v) const {
  auto fb = fiber(v);
  return std::accumulate(fb.begin(), fb.end(), 0);
}

int ValueMap::max_at(Vertex v) const {
  auto fb = fiber(v);
  return *std::max_element(fb.begin(), fb.end());
}

Graph CoverSubgraph::to_graph() const {
  std::vector<std::pair<int, int>> local;
  local.reserve(edges.size());
  auto index = [&](int id) {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), id) - vertices.begin());
  };
  for (auto [a, b] : edges) local.emplace_back(index(a), index(b));
  return Graph(static_cast<int>(vertices.size()), local);
}

std::vector<int> CoverSubgraph::local_values(const ValueMap& f) const {
  std::vector<int> out;
  out.reserve(vertices.size());
  for (int id : vertices) out.push_back(f.at(id));
  return out;
}

Cover id_cover(const Graph& g, int kappa) {
  return Cover(g, kappa, std::vector<Matching>(g.size(), Matching::identity(kappa)));
}

Cover circular_ladder_cover(int n) { return id_cover(cycle_graph(n), 2); }

Cover mobius_ladder_cover(int n) {
  if (n < 3) throw CoverError("Mobius ladder needs n >= 3");
  Graph g = cycle_graph(n);
  std::vector<Matching> m(g.size(), Matching::identity(2));
  const std::pair<int, int> swap[] = {{0, 1}, {1, 0}};
  m[g.edge_id(0, n - 1)] = Matching::from_pairs(2, swap);
  return Cover(g, 2, std::move(m));
}

Cover tilde_complete_cover(int p, int kappa) {
  if (p < 2) throw CoverError("tilde complete cover needs p >= 2");
  return id_cover(complete_graph(p), kappa);
}

CoverSubgraph induced_subgraph(const Cover& c, std::vector<int> cover_ids) {
  CoverSubgraph h;
  std::sort(cover_ids.begin(), cover_ids.end());
  cover_ids.erase(std::unique(cover_ids.begin(), cover_ids.end()), cover_ids.end());
  std::vector<char> in(c.order(), 0);
  for (int id : cover_ids) in[id] = 1;
  for (int id : cover_ids) {
    for (int w : c.neighbors(id)) {
      if (w > id && in[w]) h.edges.emplace_back(id, w);
    }
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.vertices = std::move(cover_ids);
  return h;
}

CoverSubgraph full_subgraph(const Cover& c) {
  std::vector<int> all(c.order());
  std::iota(all.begin(), all.end(), 0);
  return induced_subgraph(c, std::move(all));
}

CoverSubgraph kernel(const Cover& c, const ValueMap& f) {
  std::vector<int> keep;
  for (int id = 0; id < c.order(); ++id) {
    if (f.at(id) > 0) keep.push_back(id);
  }
  return induced_subgraph(c, std::move(keep));
}

CoverSubgraph induced_on_transversal(const Cover& c, const Transversal& r) {
  std::vector<int> ids;
  ids.reserve(r.picks.size());
  for (Vertex v = 0; v < static_cast<Vertex>(r.picks.size()); ++v) ids.push_back(c.id(v, r.picks[v]));
  return induced_subgraph(c, std::move(ids));
}

std::vector<std::vector<int>> components(const CoverSubgraph& h) {
  const int k = static_cast<int>(h.vertices.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index = [&](int id) {
    return static_cast<int>(std::lower_bound(h.vertices.begin(), h.vertices.end(), id) - h.vertices.begin());
  };
  for (auto [a, b] : h.edges) {
    int ra = find(index(a)), rb = find(index(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < k; ++i) groups[find(i)].push_back(h.vertices[i]);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

bool is_valid_transversal(const Cover& c, const Transversal& r) {
  if (static_cast<int>(r.picks.size()) != c.base().order()) return false;
  return std::all_of(r.picks.begin(), r.picks.end(), [&](int q) { return q >= 0 && q < c.kappa(); });
}

bool is_semi_constant(const Cover& c, const ValueMap& f) {
  for (const auto& comp : components(full_subgraph(c))) {
    for (int id : comp) {
      if (f.at(id) != f.at(comp.front())) return false;
    }
  }
  return true;
}

SubCover restrict_to(const Cover& c, const ValueMap& f, std::span<const Vertex> keep) {
  const Graph& g = c.base();
  Graph sub = g.induced(keep);
  std::vector<Matching> m(sub.size(), Matching(c.kappa()));
  for (int e = 0; e < sub.size(); ++e) {
    const Edge& le = sub.edge(e);
    Vertex a = keep[le.u], b = keep[le.v];
    const Matching& pm = c.matching(g.edge_id(a, b));
    // The parent orientation follows global indices, the local one local
    // indices; they disagree when keep is not increasing.
    m[e] = a < b ? pm : pm.inverse();
  }
  ValueMap values(sub.order(), c.kappa());
  for (int i = 0; i < sub.order(); ++i) {
    for (int q = 0; q < c.kappa(); ++q) values.set(i, q, f(keep[i], q));
  }
  return {Cover(std::move(sub), c.kappa(), std::move(m)), std::move(values),
          std::vector<Vertex>(keep.begin(), keep.end())};
}

SubCover delete_fiber(const Cover& c, const ValueMap& f, Vertex v) {
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < c.base().order(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return restrict_to(c, f, keep);
}

}  // namespace sfdt
