#include "sfdt/solver.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "sfdt/degeneracy.hpp"

namespace sfdt {

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::found:
      return "found";
    case SolveStatus::exhausted:
      return "exhausted";
    case SolveStatus::aborted:
      return "aborted";
  }
  return "unknown";
}

namespace {

enum class Cap { none, at_most, below };

class Search {
 public:
  Search(const Cover& c, const ValueMap& f, const SolveLimits& limits, Cap cap)
      : cover_(c), f_(f), limits_(limits), cap_(cap), n_(c.base().order()) {
    pick_.assign(n_, -1);
    deg_.assign(n_, 0);
    scratch_deg_.assign(n_, 0);
    build_order();
    start_ = std::chrono::steady_clock::now();
  }

  SolveResult run() {
    SolveResult out;
    bool ok = assign(0);
    out.nodes_expanded = nodes_;
    if (aborted_) {
      out.status = SolveStatus::aborted;
    } else if (ok) {
      out.status = SolveStatus::found;
      out.witness = Transversal{pick_};
    } else {
      out.status = SolveStatus::exhausted;
    }
    return out;
  }

 private:
  void build_order() {
    const Graph& g = cover_.base();
    std::vector<char> seen(n_, 0);
    order_.reserve(n_);
    while (static_cast<int>(order_.size()) < n_) {
      Vertex root = -1;
      for (Vertex v = 0; v < n_; ++v) {
        if (!seen[v] && (root < 0 || g.degree(v) > g.degree(root))) root = v;
      }
      std::size_t head = order_.size();
      order_.push_back(root);
      seen[root] = 1;
      for (; head < order_.size(); ++head) {
        for (Vertex w : g.neighbors(order_[head])) {
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
          }
        }
      }
    }
    position_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) position_[order_[i]] = i;
  }

  bool limit_hit() {
    if (limits_.max_nodes > 0 && nodes_ >= limits_.max_nodes) return true;
    if (limits_.timeout_s > 0 && (nodes_ & 1023) == 0) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() >= limits_.timeout_s) return true;
    }
    return false;
  }

  bool violates_cap(Vertex v) const {
    const int fv = f_(v, pick_[v]);
    switch (cap_) {
      case Cap::none:
        return false;
      case Cap::at_most:
        return deg_[v] > fv;
      case Cap::below:
        return deg_[v] >= fv;
    }
    return false;
  }

  // Peels the assigned prefix; true iff everything peels away.
  bool peelable(int assigned) {
    const Graph& g = cover_.base();
    std::vector<Vertex>& stack = scratch_stack_;
    stack.clear();
    for (int i = 0; i < assigned; ++i) {
      Vertex v = order_[i];
      scratch_deg_[v] = deg_[v];
      if (scratch_deg_[v] < f_(v, pick_[v])) stack.push_back(v);
    }
    int removed = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++removed;
      scratch_deg_[v] = -1;  // marks removal
      auto nb = g.neighbors(v);
      for (int slot = 0; slot < static_cast<int>(nb.size()); ++slot) {
        Vertex u = nb[slot];
        if (pick_[u] < 0 || scratch_deg_[u] < 0) continue;
        if (cover_.partner_at(v, slot, pick_[v]) != pick_[u]) continue;
        // u drops below its threshold exactly once.
        if (scratch_deg_[u]-- == f_(u, pick_[u])) stack.push_back(u);
      }
    }
    return removed == assigned;
  }

  // Adds (delta = +1) or removes (delta = -1) v's pick from neighbor degrees.
  void update_degrees(Vertex v, int delta) {
    const Graph& g = cover_.base();
    auto nb = g.neighbors(v);
    for (int slot = 0; slot < static_cast<int>(nb.size()); ++slot) {
      Vertex u = nb[slot];
      if (pick_[u] < 0) continue;
      if (cover_.partner_at(v, slot, pick_[v]) == pick_[u]) {
        deg_[u] += delta;
        deg_[v] += delta;
      }
    }
  }

  bool consistent(Vertex v) {
    if (cap_ != Cap::none) {
      if (violates_cap(v)) return false;
      for (Vertex u : cover_.base().neighbors(v)) {
        if (pick_[u] >= 0 && violates_cap(u)) return false;
      }
    }
    return peelable(position_[v] + 1);
  }

  bool assign(int depth) {
    if (depth == n_) return true;
    const Vertex v = order_[depth];
    for (int q = 0; q < cover_.kappa(); ++q) {
      // A zero-valued cover vertex can never leave the graph.
      if (f_(v, q) == 0) continue;
      if (limit_hit()) {
        aborted_ = true;
        return false;
      }
      ++nodes_;
      pick_[v] = q;
      update_degrees(v, +1);
      if (consistent(v) && assign(depth + 1)) return true;
      update_degrees(v, -1);
      pick_[v] = -1;
      if (aborted_) return false;
    }
    return false;
  }

  const Cover& cover_;
  const ValueMap& f_;
  SolveLimits limits_;
  Cap cap_;
  int n_;
  std::vector<Vertex> order_;
  std::vector<int> position_;
  std::vector<int> pick_;
  std::vector<int> deg_;
  std::vector<int> scratch_deg_;
  std::vector<Vertex> scratch_stack_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point start_;
};

void mark_bounds(const Cover& c, const ValueMap& f, SolveResult& r) {
  if (!r.witness) return;
  auto degs = pick_degrees(c, *r.witness);
  r.bounded = r.strictly_bounded = true;
  for (Vertex v = 0; v < c.base().order(); ++v) {
    const int fv = f(v, r.witness->picks[v]);
    r.bounded = r.bounded && degs[v] <= fv;
    r.strictly_bounded = r.strictly_bounded && degs[v] < fv;
  }
}

SolveResult solve_capped(const Cover& c, const ValueMap& f, const SolveLimits& limits, DegreeCap cap) {
  SolveResult plain = find_sfdt(c, f, limits);
  if (plain.status != SolveStatus::found) return plain;

  Descent d = descend(c, f, *plain.witness, cap);
  if (!d.stuck) {
    plain.witness = d.result;
    plain.descent_trace = std::move(d.trace);
    mark_bounds(c, f, plain);
    return plain;
  }

  SolveResult capped = Search(c, f, limits, cap == DegreeCap::at_most ? Cap::at_most : Cap::below).run();
  capped.nodes_expanded += plain.nodes_expanded;
  if (capped.status == SolveStatus::found) {
    mark_bounds(c, f, capped);
    return capped;
  }
  // No capped witness exists (or the search was cut short): report the plain
  // SFDT with its flags.
  plain.nodes_expanded = capped.nodes_expanded;
  if (capped.status == SolveStatus::aborted) plain.status = SolveStatus::aborted;
  return plain;
}

}  // namespace

SolveResult find_sfdt(const Cover& c, const ValueMap& f, const SolveLimits& limits) {
  SolveResult r = Search(c, f, limits, Cap::none).run();
  mark_bounds(c, f, r);
  return r;
}

SolveResult find_sfdt_bounded(const Cover& c, const ValueMap& f, const SolveLimits& limits) {
  return solve_capped(c, f, limits, DegreeCap::at_most);
}

SolveResult find_sfdt_strictly_bounded(const Cover& c, const ValueMap& f, const SolveLimits& limits) {
  const Graph& g = c.base();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.sum(v) <= g.degree(v)) {
      throw PreconditionError("vertex " + std::to_string(v) + " has value sum " + std::to_string(f.sum(v)) +
                              " not exceeding its degree " + std::to_string(g.degree(v)));
    }
  }
  return solve_capped(c, f, limits, DegreeCap::below);
}

std::vector<int> pick_degrees(const Cover& c, const Transversal& r) {
  const Graph& g = c.base();
  std::vector<int> deg(g.order(), 0);
  for (int e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (c.matching(e).forward(r.picks[ed.u]) == r.picks[ed.v]) {
      ++deg[ed.u];
      ++deg[ed.v];
    }
  }
  return deg;
}

Graph transversal_graph(const Cover& c, const Transversal& r) {
  const Graph& g = c.base();
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    if (c.matching(e).forward(r.picks[ed.u]) == r.picks[ed.v]) edges.emplace_back(ed.u, ed.v);
  }
  return Graph(g.order(), edges);
}

std::vector<int> transversal_values(const ValueMap& f, const Transversal& r) {
  std::vector<int> out(r.picks.size());
  for (Vertex v = 0; v < static_cast<Vertex>(r.picks.size()); ++v) out[v] = f(v, r.picks[v]);
  return out;
}

long deficiency(const Cover& c, const ValueMap& f, const Transversal& r) {
  auto degs = pick_degrees(c, r);
  long twice_edges = 0, total = 0;
  for (Vertex v = 0; v < c.base().order(); ++v) {
    twice_edges += degs[v];
    total += f(v, r.picks[v]);
  }
  return twice_edges / 2 - total;
}

bool is_sfdt(const Cover& c, const ValueMap& f, const Transversal& r) {
  if (!is_valid_transversal(c, r)) return false;
  auto values = transversal_values(f, r);
  return is_strictly_f_degenerate(transversal_graph(c, r), values);
}

Descent descend(const Cover& c, const ValueMap& f, Transversal start, DegreeCap cap) {
  const Graph& g = c.base();
  Descent out;
  out.result = std::move(start);
  Transversal& r = out.result;
  out.trace.push_back(deficiency(c, f, r));

  long budget = out.trace.front();
  for (auto x : f.values()) budget += x;

  auto breaks_cap = [&](int degree, int value) { return cap == DegreeCap::at_most ? degree > value : degree >= value; };

  for (;;) {
    auto degs = pick_degrees(c, r);
    Vertex w = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (breaks_cap(degs[v], f(v, r.picks[v]))) {
        w = v;
        break;
      }
    }
    if (w < 0) return out;

    // Degree of each (w, q) into D = R - (w, p).
    std::vector<int> into(c.kappa(), 0);
    auto nb = g.neighbors(w);
    for (int slot = 0; slot < static_cast<int>(nb.size()); ++slot) {
      for (int q = 0; q < c.kappa(); ++q) {
        if (c.partner_at(w, slot, q) == r.picks[nb[slot]]) ++into[q];
      }
    }
    int target = -1;
    for (int q = 0; q < c.kappa(); ++q) {
      if (into[q] < f(w, q)) {
        target = q;
        break;
      }
    }
    if (target < 0) {
      out.stuck = true;
      return out;
    }
    r.picks[w] = target;
    out.trace.push_back(deficiency(c, f, r));
    if (static_cast<long>(out.trace.size()) - 1 > budget) {
      throw std::logic_error("deficiency descent exceeded its swap bound");
    }
  }
}

bool is_minimal_non_sfdt(const Cover& c, const ValueMap& f) {
  if (find_sfdt(c, f).status != SolveStatus::exhausted) return false;
  for (Vertex v = 0; v < c.base().order(); ++v) {
    SubCover sub = delete_fiber(c, f, v);
    if (find_sfdt(sub.cover, sub.values).status != SolveStatus::found) return false;
  }
  return true;
}

std::vector<Transversal> all_sfdts(const Cover& c, const ValueMap& f, std::uint64_t max_transversals) {
  const int n = c.base().order();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(c.kappa());
    if (total > max_transversals) throw std::invalid_argument("too many transversals to enumerate");
  }
  std::vector<Transversal> out;
  Transversal r{std::vector<int>(n, 0)};
  for (;;) {
    if (is_sfdt(c, f, r)) out.push_back(r);
    int i = n - 1;
    while (i >= 0 && r.picks[i] == c.kappa() - 1) r.picks[i--] = 0;
    if (i < 0) break;
    ++r.picks[i];
  }
  return out;
}

}  // namespace sfdt
