#include "sfdt/degeneracy.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace sfdt {

std::optional<RemovalOrder> f_removing_order(const Graph& h, std::span<const int> f) {
  const int n = h.order();
  if (static_cast<int>(f.size()) != n) throw std::invalid_argument("f size differs from vertex count");
  std::vector<int> deg(n), cap(n);
  std::set<std::pair<int, Vertex>> queue;  // (degree - cap, vertex)
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = h.degree(v);
    // Any value above n - 1 behaves like n: such a vertex is always deletable.
    cap[v] = std::min(f[v], n);
    queue.emplace(deg[v] - cap[v], v);
  }
  std::vector<char> removed(n, 0);
  RemovalOrder out;
  out.order.reserve(n);
  while (!queue.empty()) {
    auto [slack, v] = *queue.begin();
    if (slack >= 0) return std::nullopt;
    queue.erase(queue.begin());
    removed[v] = 1;
    out.order.push_back(v);
    for (Vertex w : h.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w] - cap[w], w});
      --deg[w];
      queue.emplace(deg[w] - cap[w], w);
    }
  }
  return out;
}

bool is_strictly_f_degenerate(const Graph& h, std::span<const int> f) { return f_removing_order(h, f).has_value(); }

bool is_strictly_k_degenerate(const Graph& h, int k) {
  std::vector<int> f(h.order(), k);
  return is_strictly_f_degenerate(h, f);
}

int coloring_number(const Graph& h) {
  const int n = h.order();
  if (n == 0) return 0;
  std::vector<int> deg(n);
  std::set<std::pair<int, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = h.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  int degeneracy = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    degeneracy = std::max(degeneracy, d);
    removed[v] = 1;
    for (Vertex w : h.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return degeneracy + 1;
}

bool is_f_removing_order(const Graph& h, std::span<const int> f, const RemovalOrder& r) {
  const int n = h.order();
  if (static_cast<int>(r.order.size()) != n) return false;
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = r.order[i];
    if (v < 0 || v >= n || position[v] >= 0) return false;
    position[v] = i;
  }
  for (Vertex v = 0; v < n; ++v) {
    int right = 0;
    for (Vertex w : h.neighbors(v)) right += position[w] > position[v];
    if (right >= f[v]) return false;
  }
  return true;
}

bool brute_force_strictly_f_degenerate(const Graph& h, std::span<const int> f) {
  const int n = h.order();
  if (n > kBruteForceMaxOrder) {
    throw std::invalid_argument("brute-force degeneracy limited to " + std::to_string(kBruteForceMaxOrder) +
                                " vertices");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : h.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    bool has_low = false;
    for (std::uint32_t rest = s; rest && !has_low; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      has_low = std::popcount(adj[v] & s) < f[v];
    }
    if (!has_low) return false;
  }
  return true;
}

}  // namespace sfdt
