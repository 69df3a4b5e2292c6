#include "sfdt/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sfdt/degeneracy.hpp"

namespace sfdt {

void ListAssignment::validate(int n) const {
  if (palette <= 0) throw std::invalid_argument("list palette must be nonempty");
  if (static_cast<int>(lists.size()) != n) {
    throw std::invalid_argument("list assignment has " + std::to_string(lists.size()) + " lists for " +
                                std::to_string(n) + " vertices");
  }
  for (const auto& l : lists) {
    for (int col : l) {
      if (col < 0 || col >= palette) throw std::invalid_argument("color " + std::to_string(col) + " outside palette");
    }
  }
}

PartitionSpec PartitionSpec::constant(int n, std::span<const int> t) {
  PartitionSpec s;
  for (int ti : t) s.f.emplace_back(n, ti);
  return s;
}

ValuedCover encode_partition(const Graph& g, const PartitionSpec& spec) {
  const int kappa = static_cast<int>(spec.f.size());
  if (kappa == 0) throw std::invalid_argument("partition needs at least one part");
  ValueMap f(g.order(), kappa);
  for (int i = 0; i < kappa; ++i) {
    if (static_cast<int>(spec.f[i].size()) != g.order()) throw std::invalid_argument("value function size mismatch");
    for (Vertex v = 0; v < g.order(); ++v) f.set(v, i, spec.f[i][v]);
  }
  return {id_cover(g, kappa), std::move(f)};
}

std::vector<std::vector<Vertex>> decode_partition(const Transversal& r, int kappa) {
  std::vector<std::vector<Vertex>> parts(kappa);
  for (Vertex v = 0; v < static_cast<int>(r.picks.size()); ++v) parts[r.picks[v]].push_back(v);
  return parts;
}

bool is_valid_partition(const Graph& g, const PartitionSpec& spec, const std::vector<std::vector<Vertex>>& parts) {
  if (parts.size() != spec.f.size()) return false;
  std::vector<int> seen(g.order(), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<int> local;
    for (Vertex v : parts[i]) {
      if (v < 0 || v >= g.order()) return false;
      ++seen[v];
      local.push_back(spec.f[i][v]);
    }
    if (!std::is_sorted(parts[i].begin(), parts[i].end())) return false;
    if (!is_strictly_f_degenerate(g.induced(parts[i]), local)) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

namespace {

ValuedCover encode_lists(const Graph& g, const ListAssignment& lists, int value) {
  lists.validate(g.order());
  ValueMap f(g.order(), lists.palette);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int col : lists.lists[v]) f.set(v, col, value);
  }
  return {id_cover(g, lists.palette), std::move(f)};
}

}  // namespace

ValuedCover encode_list_coloring(const Graph& g, const ListAssignment& lists) { return encode_lists(g, lists, 1); }

ValuedCover encode_forested(const Graph& g, const ListAssignment& lists) { return encode_lists(g, lists, 2); }

bool encode_dp(const Cover& c, const ValueMap& f, int t) {
  for (int x : f.values()) {
    if (x != 0 && x != 1) throw std::invalid_argument("DP value map entries must be 0 or 1");
  }
  for (Vertex v = 0; v < c.base().order(); ++v) {
    if (f.sum(v) < t) return false;
  }
  return true;
}

std::vector<int> signed_palette(int k) {
  if (k <= 0) throw std::invalid_argument("signed coloring needs k >= 1");
  std::vector<int> colors;
  if (k % 2 == 1) colors.push_back(0);
  for (int s = 1; static_cast<int>(colors.size()) < k; ++s) {
    colors.push_back(s);
    colors.push_back(-s);
  }
  return colors;
}

ValuedCover encode_signed(const SignedGraph& sg, int k) {
  const Graph& g = sg.base;
  if (static_cast<int>(sg.sign.size()) != g.size()) throw std::invalid_argument("one sign per edge required");
  const auto colors = signed_palette(k);
  auto index_of = [&](int col) {
    return static_cast<int>(std::find(colors.begin(), colors.end(), col) - colors.begin());
  };
  std::vector<Matching> ms;
  for (int e = 0; e < g.size(); ++e) {
    if (sg.sign[e] != 1 && sg.sign[e] != -1) throw std::invalid_argument("edge sign must be +1 or -1");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) pairs.emplace_back(i, index_of(sg.sign[e] * colors[i]));
    ms.push_back(Matching::from_pairs(k, pairs));
  }
  return {Cover(g, k, std::move(ms)), ValueMap(g.order(), k, 1)};
}

std::vector<int> decode_signed(const Transversal& r, int k) {
  const auto colors = signed_palette(k);
  std::vector<int> out;
  for (int q : r.picks) out.push_back(colors[q]);
  return out;
}

bool is_signed_coloring(const SignedGraph& sg, std::span<const int> colors) {
  for (int e = 0; e < sg.base.size(); ++e) {
    const Edge& ed = sg.base.edge(e);
    if (colors[ed.u] == sg.sign[e] * colors[ed.v]) return false;
  }
  return true;
}

}  // namespace sfdt
