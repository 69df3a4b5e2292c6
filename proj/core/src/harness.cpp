#include "sfdt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <numeric>
#include <thread>

#include "sfdt/constructibility.hpp"
#include "sfdt/degeneracy.hpp"
#include "sfdt/random.hpp"
#include "sfdt/solver.hpp"

namespace sfdt {

std::string_view to_string(MatchingPolicy p) {
  switch (p) {
    case MatchingPolicy::all:
      return "all";
    case MatchingPolicy::perfect_only:
      return "perfect_only";
    case MatchingPolicy::sampled:
      return "sampled";
  }
  return "unknown";
}

std::optional<MatchingPolicy> parse_matching_policy(std::string_view s) {
  for (auto p : {MatchingPolicy::all, MatchingPolicy::perfect_only, MatchingPolicy::sampled}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

std::string_view to_string(ValuePolicy p) {
  switch (p) {
    case ValuePolicy::degree_equal:
      return "degree_equal";
    case ValuePolicy::degree_ge:
      return "degree_ge";
    case ValuePolicy::degree_ge_one_gt:
      return "degree_ge_one_gt";
    case ValuePolicy::degree_gt:
      return "degree_gt";
    case ValuePolicy::sum_at_least:
      return "sum_at_least";
    case ValuePolicy::bounded_entries:
      return "bounded_entries";
  }
  return "unknown";
}

std::optional<ValuePolicy> parse_value_policy(std::string_view s) {
  for (auto p : {ValuePolicy::degree_equal, ValuePolicy::degree_ge, ValuePolicy::degree_ge_one_gt,
                 ValuePolicy::degree_gt, ValuePolicy::sum_at_least, ValuePolicy::bounded_entries}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

namespace {

void matchings_rec(int kappa, int p, std::vector<char>& used, std::vector<std::pair<int, int>>& cur,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
  if (p == kappa) {
    out.push_back(cur);
    return;
  }
  matchings_rec(kappa, p + 1, used, cur, out);
  for (int q = 0; q < kappa; ++q) {
    if (used[q]) continue;
    used[q] = 1;
    cur.emplace_back(p, q);
    matchings_rec(kappa, p + 1, used, cur, out);
    cur.pop_back();
    used[q] = 0;
  }
}

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap;
    r *= base;
  }
  return std::min(r, cap);
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

bool sums_at_least_degree(const Cover& c, const ValueMap& f) {
  for (Vertex v = 0; v < c.base().order(); ++v) {
    if (f.sum(v) < c.base().degree(v)) return false;
  }
  return true;
}

bool sums_equal_degree(const Cover& c, const ValueMap& f) {
  for (Vertex v = 0; v < c.base().order(); ++v) {
    if (f.sum(v) != c.base().degree(v)) return false;
  }
  return true;
}

bool sums_above_degree(const Cover& c, const ValueMap& f) {
  for (Vertex v = 0; v < c.base().order(); ++v) {
    if (f.sum(v) <= c.base().degree(v)) return false;
  }
  return true;
}

}  // namespace

std::vector<Matching> all_matchings(int kappa) {
  std::vector<std::vector<std::pair<int, int>>> raw;
  std::vector<char> used(kappa, 0);
  std::vector<std::pair<int, int>> cur;
  matchings_rec(kappa, 0, used, cur, raw);
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Matching> out;
  for (const auto& r : raw) out.push_back(Matching::from_pairs(kappa, r));
  return out;
}

std::vector<Matching> perfect_matchings(int kappa) {
  std::vector<Matching> out;
  for (auto& m : all_matchings(kappa)) {
    if (m.is_perfect()) out.push_back(std::move(m));
  }
  return out;
}

std::uint64_t matching_count(int kappa, bool perfect_only) {
  auto factorial = [](int k) {
    std::uint64_t r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  if (perfect_only) return factorial(kappa);
  std::uint64_t total = 0;
  for (int k = 0; k <= kappa; ++k) {
    std::uint64_t binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (kappa - i) / (i + 1);
    total += binom * binom * factorial(k);
  }
  return total;
}

namespace {

Cover cover_from_choices(const Graph& g, int kappa, const std::vector<Matching>& pool, std::uint64_t index) {
  std::vector<Matching> ms;
  ms.reserve(g.size());
  for (int e = 0; e < g.size(); ++e) {
    ms.push_back(pool[index % pool.size()]);
    index /= pool.size();
  }
  return Cover(g, kappa, std::move(ms));
}

}  // namespace

std::vector<Cover> enumerate_covers(const Graph& g, int kappa, MatchingPolicy policy, std::uint64_t samples,
                                    std::uint64_t seed) {
  std::vector<Cover> out;
  if (policy == MatchingPolicy::sampled) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) out.push_back(random_cover(g, kappa, false, rng));
    return out;
  }
  const auto pool = policy == MatchingPolicy::all ? all_matchings(kappa) : perfect_matchings(kappa);
  const std::uint64_t total = checked_pow(pool.size(), g.size(), kEnumerationGuard);
  if (total >= kEnumerationGuard) throw std::invalid_argument("cover enumeration exceeds the desk-scale guard");
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(cover_from_choices(g, kappa, pool, i));
  return out;
}

Cover random_cover(const Graph& g, int kappa, bool perfect_only, std::mt19937_64& rng) {
  std::vector<Matching> ms;
  ms.reserve(g.size());
  for (int e = 0; e < g.size(); ++e) {
    // Random permutation, then (for partial matchings) keep each pair with
    // probability 1/2.
    std::vector<int> perm(kappa);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = kappa - 1; i > 0; --i) std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < kappa; ++p) {
      if (perfect_only || bernoulli(rng, 0.5)) pairs.emplace_back(p, perm[p]);
    }
    ms.push_back(Matching::from_pairs(kappa, pairs));
  }
  return Cover(g, kappa, std::move(ms));
}

std::vector<ValueMap> degree_equal_values(const Graph& g, int kappa, int max_entry) {
  std::vector<std::vector<std::vector<int>>> per_vertex(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> cur(kappa, 0);
    auto rec = [&](auto&& self, int q, int left) -> void {
      if (q == kappa - 1) {
        if (left <= max_entry) {
          cur[q] = left;
          per_vertex[v].push_back(cur);
        }
        return;
      }
      for (int x = 0; x <= std::min(left, max_entry); ++x) {
        cur[q] = x;
        self(self, q + 1, left - x);
      }
    };
    rec(rec, 0, g.degree(v));
    if (per_vertex[v].empty()) return {};
  }
  std::uint64_t total = 1;
  for (const auto& pv : per_vertex) {
    total *= pv.size();
    if (total >= kEnumerationGuard) throw std::invalid_argument("value enumeration exceeds the desk-scale guard");
  }
  std::vector<ValueMap> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    ValueMap f(g.order(), kappa);
    std::uint64_t x = i;
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto& choice = per_vertex[v][x % per_vertex[v].size()];
      x /= per_vertex[v].size();
      for (int q = 0; q < kappa; ++q) f.set(v, q, choice[q]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

ValueMap random_values(const Graph& g, int kappa, ValuePolicy policy, int max_entry, int floor,
                       std::mt19937_64& rng) {
  const int n = g.order();
  ValueMap f(n, kappa);
  if (policy == ValuePolicy::bounded_entries) {
    for (Vertex v = 0; v < n; ++v) {
      for (int q = 0; q < kappa; ++q) f.set(v, q, uniform_int(rng, 0, max_entry));
    }
    return f;
  }
  std::vector<int> target(n);
  const int m = policy == ValuePolicy::sum_at_least ? (floor > 0 ? floor : coloring_number(g)) : 0;
  const Vertex bumped = n > 0 ? uniform_int(rng, 0, n - 1) : 0;
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    switch (policy) {
      case ValuePolicy::degree_equal:
        target[v] = d;
        break;
      case ValuePolicy::degree_ge:
        target[v] = d + uniform_int(rng, 0, 1);
        break;
      case ValuePolicy::degree_ge_one_gt:
        target[v] = d + (v == bumped ? 1 : uniform_int(rng, 0, 1));
        break;
      case ValuePolicy::degree_gt:
        target[v] = d + 1 + uniform_int(rng, 0, 1);
        break;
      case ValuePolicy::sum_at_least:
        target[v] = m + uniform_int(rng, 0, 1);
        break;
      case ValuePolicy::bounded_entries:
        break;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    const int cap = std::max(max_entry, (target[v] + kappa - 1) / kappa);
    std::vector<int> share(kappa, 0);
    for (int unit = 0; unit < target[v]; ++unit) {
      std::vector<int> open;
      for (int q = 0; q < kappa; ++q) {
        if (share[q] < cap) open.push_back(q);
      }
      ++share[open[uniform_below(rng, open.size())]];
    }
    for (int q = 0; q < kappa; ++q) f.set(v, q, share[q]);
  }
  return f;
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["base"] = inst.base_name;
  j["cover"] = cover_to_json(inst.cover, inst.values);
  if (inst.floor != 0) j["floor"] = inst.floor;
  if (inst.expect_building) j["expect_building"] = *inst.expect_building;
  return j;
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  if (j.contains("base")) inst.base_name = j.at("base").get<std::string>();
  if (!j.contains("cover")) throw FormatError("instance lacks `cover`");
  auto vc = cover_from_json(j.at("cover"));
  inst.cover = std::move(vc.cover);
  inst.values = std::move(vc.values);
  if (j.contains("floor")) inst.floor = j.at("floor").get<int>();
  if (j.contains("expect_building")) inst.expect_building = j.at("expect_building").get<bool>();
  return inst;
}

InstanceSource::InstanceSource(InstanceFamily family) : family_(std::move(family)) {
  if (family_.kappas.empty()) throw std::invalid_argument("family needs at least one kappa");
  if (family_.samples > 0) {
    size_ = family_.samples;
    return;
  }
  if (family_.bases.empty()) throw std::invalid_argument("exhaustive families need fixed bases");
  if (family_.matchings == MatchingPolicy::sampled) throw std::invalid_argument("sampled matchings need samples > 0");
  if (family_.values != ValuePolicy::degree_equal) {
    throw std::invalid_argument("exhaustive families enumerate degree_equal values only");
  }
  for (int kappa : family_.kappas) {
    matchings_[kappa] =
        family_.matchings == MatchingPolicy::all ? all_matchings(kappa) : perfect_matchings(kappa);
  }
  for (const auto& [name, g] : family_.bases) {
    for (int kappa : family_.kappas) {
      Block b{name, g, kappa, degree_equal_values(g, kappa, family_.max_entry), 0, size_};
      b.covers = checked_pow(matchings_[kappa].size(), g.size(), kEnumerationGuard);
      if (b.covers >= kEnumerationGuard || b.covers * b.values.size() >= kEnumerationGuard) {
        throw std::invalid_argument("family " + family_.name + " exceeds the desk-scale guard on base " + name);
      }
      size_ += b.covers * b.values.size();
      blocks_.push_back(std::move(b));
    }
  }
}

InstanceSource::InstanceSource(std::string name, std::vector<Instance> fixed) : fixed_(std::move(fixed)) {
  family_.name = std::move(name);
  size_ = fixed_.size();
  family_.samples = 0;
}

Cover InstanceSource::cover_at(const Block& b, std::uint64_t index) const {
  return cover_from_choices(b.base, b.kappa, matchings_.at(b.kappa), index);
}

Instance InstanceSource::at(std::uint64_t index) const {
  if (!fixed_.empty()) return fixed_.at(index);
  if (family_.samples > 0) {
    auto rng = instance_rng(family_.seed, index);
    Instance inst;
    Graph g;
    if (!family_.bases.empty()) {
      const auto& pick = family_.bases[uniform_below(rng, family_.bases.size())];
      inst.base_name = pick.first;
      g = pick.second;
    } else {
      const int n = uniform_int(rng, family_.min_n, family_.max_n);
      g = random_connected_graph(n, family_.edge_p, rng);
      inst.base_name = "random";
    }
    const int kappa = family_.kappas[uniform_below(rng, family_.kappas.size())];
    inst.cover = random_cover(g, kappa, family_.matchings == MatchingPolicy::perfect_only, rng);
    inst.values = random_values(g, kappa, family_.values, family_.max_entry, family_.floor, rng);
    if (family_.values == ValuePolicy::sum_at_least) inst.floor = family_.floor > 0 ? family_.floor : coloring_number(g);
    return inst;
  }
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](std::uint64_t i, const Block& b) { return i < b.first; });
  const Block& b = *std::prev(it);
  const std::uint64_t local = index - b.first;
  Instance inst;
  inst.base_name = b.name;
  inst.cover = cover_at(b, local / b.values.size());
  inst.values = b.values[local % b.values.size()];
  return inst;
}

void Tally::note_max(const std::string& key, std::int64_t v) {
  auto [it, fresh] = values.emplace(key, v);
  if (!fresh) it->second = std::max(it->second, v);
}

void Tally::merge(const Tally& other) {
  for (const auto& [k, v] : other.values) {
    if (k.rfind("max_", 0) == 0) {
      note_max(k, v);
    } else {
      values[k] += v;
    }
  }
}

Json TheoremReport::to_json() const {
  Json j;
  j["theorem"] = theorem;
  j["family"] = family;
  j["instances"] = instances;
  j["skipped"] = skipped;
  j["counterexamples"] = Json::array();
  for (const auto& cx : counterexamples) {
    j["counterexamples"].push_back({{"index", cx.index}, {"detail", cx.detail}, {"instance", cx.instance}});
  }
  j["stats"] = Json::object();
  for (const auto& [k, v] : stats.values) j["stats"][k] = v;
  return j;
}

std::string TheoremReport::summary_row() const {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-10s %-28s %12llu %10llu %8zu  %s", theorem.c_str(), family.c_str(),
                static_cast<unsigned long long>(instances), static_cast<unsigned long long>(skipped),
                counterexamples.size(), ok() ? "ok" : "FAIL");
  return buf;
}

std::string summary_table(const std::vector<TheoremReport>& reports) {
  char head[256];
  std::snprintf(head, sizeof head, "%-10s %-28s %12s %10s %8s  %s", "theorem", "family", "instances", "skipped",
                "counter", "verdict");
  std::string out = head;
  out += '\n';
  for (const auto& r : reports) out += r.summary_row() + '\n';
  return out;
}

// ---------------------------------------------------------------------------
// Instance checks

namespace {

std::string describe(const Transversal& r) { return transversal_to_json(r).dump(); }

// A positive cover vertex must meet a positive partner across every base edge.
bool positive_matchings_perfect(const Cover& c, const ValueMap& f) {
  const Graph& g = c.base();
  for (int e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    const Matching& m = c.matching(e);
    for (int q = 0; q < c.kappa(); ++q) {
      if (f(ed.u, q) > 0 && (m.forward(q) < 0 || f(ed.v, m.forward(q)) == 0)) return false;
      if (f(ed.v, q) > 0 && (m.backward(q) < 0 || f(ed.u, m.backward(q)) == 0)) return false;
    }
  }
  return true;
}

std::optional<std::string> descent_problem(const Cover& c, const ValueMap& f, const Transversal& start,
                                           DegreeCap cap, Tally& stats) {
  Descent d = descend(c, f, start, cap);
  stats.add("descents");
  stats.add("descent_swaps", static_cast<std::int64_t>(d.trace.size()) - 1);
  stats.note_max("max_descent_swaps", static_cast<std::int64_t>(d.trace.size()) - 1);
  long bound = d.trace.front();
  for (int x : f.values()) bound += x;
  if (static_cast<long>(d.trace.size()) - 1 > bound) return "descent exceeded its swap bound from " + describe(start);
  for (std::size_t i = 1; i < d.trace.size(); ++i) {
    if (d.trace[i] >= d.trace[i - 1]) return "deficiency did not decrease along descent from " + describe(start);
  }
  if (d.stuck) return "descent stuck from " + describe(start);
  if (!is_sfdt(c, f, d.result)) return "descent left the SFDTs from " + describe(start);
  auto deg = pick_degrees(c, d.result);
  for (Vertex v = 0; v < c.base().order(); ++v) {
    const int value = f(v, d.result.picks[v]);
    if (cap == DegreeCap::at_most ? deg[v] > value : deg[v] >= value) {
      return "descent result breaks its cap from " + describe(start);
    }
  }
  return std::nullopt;
}

constexpr std::uint64_t kDescentStartLimit = 4096;

bool few_transversals(const Cover& c) {
  return checked_pow(c.kappa(), c.base().order(), kDescentStartLimit + 1) <= kDescentStartLimit;
}

}  // namespace

CheckResult check_mr(const Instance& inst, Tally& stats) {
  const Cover& c = inst.cover;
  const ValueMap& f = inst.values;
  const Graph& g = c.base();
  // A lone vertex with f = 0 has no SFDT yet is not a building cover; the
  // equivalence is about bases with at least one edge.
  if (g.order() < 2 || !is_connected(g) || !sums_at_least_degree(c, f)) return std::nullopt;

  SolveResult r = find_sfdt(c, f);
  if (r.status == SolveStatus::aborted) return "solver aborted without limits";
  auto tree = is_constructible(c, f);
  const bool exhausted = r.status == SolveStatus::exhausted;
  stats.add(exhausted ? "exhausted" : "found");
  if (tree) stats.add("constructible");
  if (r.witness && !is_sfdt(c, f, *r.witness)) return "solver witness is not an SFDT";
  if (exhausted != tree.has_value()) {
    return std::string("solver ") + (exhausted ? "exhausted" : "found") + " but recognizer says " +
           (tree ? "constructible" : "non-constructible");
  }
  if (tree) {
    if (!verify_construction_tree(*tree, c, f)) return "construction tree does not verify";
    stats.add("tree_leaves", static_cast<std::int64_t>(tree->leaves.size()));
    for (const auto& leaf : tree->leaves) stats.add("leaf_" + std::string(to_string(leaf.building.kind)));
  }
  if (exhausted && sums_equal_degree(c, f) && is_2connected(g)) {
    stats.add("nzpm_checked");
    if (!positive_matchings_perfect(c, f)) return "exhausted 2-connected instance with an imperfect positive matching";
  }
  if (sums_equal_degree(c, f) && g.order() <= 8) {
    auto b = check_building(c, f);
    const bool fiberwise = b && b->kind == BuildingKind::monoblock;
    if (kernel_abstractly_isomorphic(c, f) != fiberwise) stats.add("monoblock_reading_disagreements");
    stats.add("monoblock_reading_checked");
  }
  return "";
}

CheckResult check_ge(const Instance& inst, Tally& stats) {
  const Cover& c = inst.cover;
  const ValueMap& f = inst.values;
  const Graph& g = c.base();
  if (!is_connected(g) || !sums_at_least_degree(c, f) || sums_equal_degree(c, f)) return std::nullopt;
  SolveResult r = find_sfdt(c, f);
  stats.add("nodes", static_cast<std::int64_t>(r.nodes_expanded));
  if (r.status != SolveStatus::found) return "no SFDT although some fiber sum exceeds its degree";
  if (!is_sfdt(c, f, *r.witness)) return "solver witness is not an SFDT";
  return "";
}

CheckResult check_smr_msmr(const Instance& inst, Tally& stats) {
  const Cover& c = inst.cover;
  const ValueMap& f = inst.values;
  const bool ge = sums_at_least_degree(c, f);
  const bool gt = sums_above_degree(c, f);
  if (!ge) return std::nullopt;

  SolveResult plain = find_sfdt(c, f);
  if (plain.status != SolveStatus::found) {
    if (gt) return "strict sums but no SFDT";
    return std::nullopt;
  }
  std::vector<Transversal> starts{*plain.witness};
  if (few_transversals(c)) {
    for (auto& t : all_sfdts(c, f)) {
      if (t != starts.front()) starts.push_back(std::move(t));
    }
  }

  stats.add("smr_instances");
  SolveResult bounded = find_sfdt_bounded(c, f);
  if (bounded.status != SolveStatus::found || !bounded.bounded) return "no bounded SFDT";
  if (!is_sfdt(c, f, *bounded.witness)) return "bounded witness is not an SFDT";
  for (const auto& s : starts) {
    if (auto p = descent_problem(c, f, s, DegreeCap::at_most, stats)) return *p;
  }

  if (gt) {
    stats.add("msmr_instances");
    SolveResult strict = find_sfdt_strictly_bounded(c, f);
    if (strict.status != SolveStatus::found || !strict.strictly_bounded) return "no strictly bounded SFDT";
    if (!is_sfdt(c, f, *strict.witness)) return "strictly bounded witness is not an SFDT";
    for (const auto& s : starts) {
      if (auto p = descent_problem(c, f, s, DegreeCap::below, stats)) return *p;
    }
    const auto vals = f.values();
    if (*std::max_element(vals.begin(), vals.end()) <= 2) {
      stats.add("msmr_small_values");
      auto deg = pick_degrees(c, *strict.witness);
      if (*std::max_element(deg.begin(), deg.end()) > 1) return "f <= 2 but H[R] has a vertex of degree 2";
    }
  }
  return "";
}

CheckResult check_l_and_gallai(const Instance& inst, Tally& stats) {
  const Cover& c = inst.cover;
  const ValueMap& f = inst.values;
  const Graph& g = c.base();
  if (g.order() > 12) return std::nullopt;
  if (find_sfdt(c, f).status != SolveStatus::exhausted) return std::nullopt;
  if (!is_minimal_non_sfdt(c, f)) {
    stats.add("non_minimal");
    return std::nullopt;
  }
  stats.add("minimal_pairs");
  if (!is_connected(g)) return "minimal pair on a disconnected base";
  std::vector<Vertex> d_ge, d_eq;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.sum(v) > g.degree(v)) return "minimal pair with a fiber sum above degree at " + std::to_string(v);
    if (f.sum(v) >= g.degree(v)) d_ge.push_back(v);
    if (f.sum(v) == g.degree(v)) d_eq.push_back(v);
  }
  if (d_ge != d_eq) stats.add("d_readings_differ");
  for (const auto& s : two_connected_vertex_sets(g, d_ge)) {
    stats.add("two_connected_sets");
    Graph sub = g.induced(s);
    if (is_cycle(sub) || is_complete(sub)) continue;
    for (int i = 0; i < sub.order(); ++i) {
      if (sub.degree(i) > f.max_at(s[i])) {
        Json js = s;
        return "G[" + js.dump() + "] is neither a cycle nor complete and breaks the max-f bound";
      }
    }
  }
  return "";
}

CheckResult check_t51(const Instance& inst, Tally& stats) {
  const Cover& c = inst.cover;
  const ValueMap& f = inst.values;
  const Graph& g = c.base();
  const int m = inst.floor > 0 ? inst.floor : coloring_number(g);
  if (!is_strictly_k_degenerate(g, m)) return std::nullopt;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.sum(v) < m) return std::nullopt;
  }
  stats.note_max("max_m", m);
  SolveResult r = find_sfdt(c, f);
  if (r.status != SolveStatus::found) return "no SFDT on a strictly " + std::to_string(m) + "-degenerate base";
  if (!is_sfdt(c, f, *r.witness)) return "solver witness is not an SFDT";
  return "";
}

CheckResult check_building_case(const Instance& inst, Tally& stats) {
  if (!inst.expect_building) return std::nullopt;
  const Cover& c = inst.cover;
  const ValueMap& f = inst.values;
  auto w = check_building(c, f);
  SolveResult r = find_sfdt(c, f);
  if (*inst.expect_building) {
    if (!w) return "check_building rejected a building cover";
    if (!building_witness_holds(*w, c, f)) return "building witness does not re-check";
    if (r.status != SolveStatus::exhausted) return "building cover has an SFDT";
    stats.add("kind_" + std::string(to_string(w->kind)));
  } else {
    if (r.status != SolveStatus::found) return "expected an SFDT";
    if (w) return "check_building accepted a cover that has an SFDT";
    stats.add("found");
  }
  return "";
}

namespace {

using Check = CheckResult (*)(const Instance&, Tally&);

Check check_for(const std::string& theorem) {
  static const std::map<std::string, Check> table{
      {"mr", check_mr},      {"ge", check_ge},   {"smr", check_smr_msmr},
      {"gallai", check_l_and_gallai}, {"t51", check_t51}, {"building", check_building_case},
  };
  auto it = table.find(theorem);
  if (it == table.end()) throw std::invalid_argument("unknown theorem id `" + theorem + "`");
  return it->second;
}

// Runs fn(i) for i in [0, count) on `jobs` threads. fn returns the check
// outcome and fills the instance JSON on failure. Results merge in index
// order, so reports do not depend on scheduling.
template <class Fn>
TheoremReport run_indexed(const std::string& theorem, const std::string& family, std::uint64_t count, int jobs,
                          Fn fn) {
  struct Part {
    Tally stats;
    std::uint64_t instances = 0, skipped = 0;
    std::vector<Counterexample> cx;
  };
  jobs = std::max(1, jobs);
  std::vector<Part> parts(jobs);
  std::atomic<std::uint64_t> next{0};
  constexpr std::uint64_t kChunk = 64;
  auto worker = [&](Part& part) {
    for (;;) {
      const std::uint64_t lo = next.fetch_add(kChunk);
      if (lo >= count) return;
      for (std::uint64_t i = lo; i < std::min(count, lo + kChunk); ++i) {
        Json instance;
        CheckResult res;
        try {
          res = fn(i, part.stats, instance);
        } catch (const std::exception& e) {
          res = std::string("exception: ") + e.what();
        }
        if (!res) {
          ++part.skipped;
          continue;
        }
        ++part.instances;
        if (!res->empty()) part.cx.push_back({i, std::move(instance), *res});
      }
    }
  };
  if (jobs == 1) {
    worker(parts[0]);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, std::ref(parts[t]));
    for (auto& t : threads) t.join();
  }
  TheoremReport report;
  report.theorem = theorem;
  report.family = family;
  for (auto& p : parts) {
    report.stats.merge(p.stats);
    report.instances += p.instances;
    report.skipped += p.skipped;
    for (auto& cx : p.cx) report.counterexamples.push_back(std::move(cx));
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) { return a.index < b.index; });
  return report;
}

}  // namespace

TheoremReport run_family(const std::string& theorem, const InstanceSource& source, const RunOptions& opts) {
  Check check = check_for(theorem);
  return run_indexed(theorem, source.family().name, source.size(), opts.jobs,
                     [&](std::uint64_t i, Tally& stats, Json& out) {
                       Instance inst = source.at(i);
                       CheckResult res = check(inst, stats);
                       if (res && !res->empty()) out = instance_to_json(inst);
                       return res;
                     });
}

TheoremReport verify_theorem_mr(const InstanceFamily& family, const RunOptions& opts) {
  return run_family("mr", InstanceSource(family), opts);
}

TheoremReport verify_lemma_ge(const InstanceFamily& family, const RunOptions& opts) {
  return run_family("ge", InstanceSource(family), opts);
}

TheoremReport verify_smr_msmr(const InstanceFamily& family, const RunOptions& opts) {
  return run_family("smr", InstanceSource(family), opts);
}

TheoremReport verify_theorem_l_and_gallai(const InstanceFamily& family, const RunOptions& opts) {
  return run_family("gallai", InstanceSource(family), opts);
}

TheoremReport verify_theorem_5_1(const InstanceFamily& family, const RunOptions& opts) {
  return run_family("t51", InstanceSource(family), opts);
}

bool replay_fails(const std::string& theorem, const Json& instance) {
  Tally scratch;
  if (theorem == "greedy") {
    Graph g(instance.at("n").get<int>(), instance.at("edges").get<std::vector<std::pair<int, int>>>());
    auto f = instance.at("f").get<std::vector<int>>();
    return is_strictly_f_degenerate(g, f) != brute_force_strictly_f_degenerate(g, f);
  }
  CheckResult res;
  try {
    res = check_for(theorem)(instance_from_json(instance), scratch);
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception&) {
    return true;
  }
  return res && !res->empty();
}

// ---------------------------------------------------------------------------
// Greedy against the subset oracle

namespace {

CheckResult check_greedy(const Graph& g, const std::vector<int>& f, Tally& stats) {
  const bool greedy = is_strictly_f_degenerate(g, f);
  const bool oracle = brute_force_strictly_f_degenerate(g, f);
  stats.add(greedy ? "degenerate" : "not_degenerate");
  if (greedy != oracle) return std::string("greedy says ") + (greedy ? "yes" : "no") + ", oracle disagrees";
  if (auto order = f_removing_order(g, f); order && !is_f_removing_order(g, f, *order)) {
    return "removal order fails its recount";
  }
  return "";
}

}  // namespace

TheoremReport verify_greedy_vs_oracle(const GreedySweep& sweep, const RunOptions& opts) {
  // Index layout: labeled graphs on 1..exhaustive_n vertices (per_graph each),
  // then random_count per larger order.
  std::vector<std::pair<int, std::uint64_t>> segments;  // (n, first index)
  std::uint64_t total = 0;
  for (int n = 1; n <= sweep.exhaustive_n; ++n) {
    segments.emplace_back(n, total);
    total += (std::uint64_t{1} << (n * (n - 1) / 2)) * sweep.per_graph;
  }
  const std::uint64_t exhaustive_end = total;
  for (int n = sweep.exhaustive_n + 1; n <= sweep.max_n; ++n) {
    segments.emplace_back(n, total);
    total += sweep.random_count;
  }
  return run_indexed(
      "greedy", "connected n<=" + std::to_string(sweep.max_n), total, opts.jobs,
      [&](std::uint64_t i, Tally& stats, Json& out) -> CheckResult {
        auto seg = std::prev(std::upper_bound(segments.begin(), segments.end(), i,
                                              [](std::uint64_t x, const auto& s) { return x < s.second; }));
        const int n = seg->first;
        auto rng = instance_rng(sweep.seed, i);
        Graph g;
        if (i < exhaustive_end) {
          const std::uint64_t mask = (i - seg->second) / sweep.per_graph;
          std::vector<std::pair<int, int>> edges;
          int bit = 0;
          for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v, ++bit) {
              if (mask >> bit & 1) edges.emplace_back(u, v);
            }
          }
          g = Graph(n, edges);
          if (!is_connected(g)) return std::nullopt;
        } else {
          g = random_connected_graph(n, bernoulli(rng, 0.5) ? 0.3 : 0.6, rng);
        }
        std::vector<int> f(n);
        for (int& x : f) x = uniform_int(rng, 0, sweep.max_entry);
        stats.note_max("max_n", n);
        CheckResult res = check_greedy(g, f, stats);
        if (res && !res->empty()) out = Json{{"n", n}, {"edges", g.edge_pairs()}, {"f", f}};
        return res;
      });
}

// ---------------------------------------------------------------------------
// Building covers

std::vector<Instance> building_ground_truth() {
  std::vector<Instance> out;
  auto add = [&](std::string name, Cover c, ValueMap f, bool expect) {
    out.push_back({std::move(name), std::move(c), std::move(f), 0, expect});
  };
  for (int n : {3, 5}) add("ladder_" + std::to_string(n), circular_ladder_cover(n), ValueMap(n, 2, 1), true);
  for (int n : {4, 6}) add("mobius_" + std::to_string(n), mobius_ladder_cover(n), ValueMap(n, 2, 1), true);
  add("ladder_4", circular_ladder_cover(4), ValueMap(4, 2, 1), false);
  add("mobius_5", mobius_ladder_cover(5), ValueMap(5, 2, 1), false);

  // Complete bases: every split of p - 1 into one constant per copy.
  for (int p : {2, 3, 4}) {
    for (int kappa : {2, 3}) {
      Cover c = tilde_complete_cover(p, kappa);
      std::vector<int> share(kappa, 0);
      auto rec = [&](auto&& self, int q, int left) -> void {
        if (q == kappa - 1) {
          share[q] = left;
          ValueMap f(p, kappa);
          for (Vertex v = 0; v < p; ++v) {
            for (int i = 0; i < kappa; ++i) f.set(v, i, share[i]);
          }
          add("tilde_K" + std::to_string(p) + "_k" + std::to_string(kappa), c, std::move(f), true);
          return;
        }
        for (int x = 0; x <= left; ++x) {
          share[q] = x;
          self(self, q + 1, left - x);
        }
      };
      rec(rec, 0, p - 1);
    }
  }

  // Monoblocks: every 2-fold cover of P3 and K3 and every pick vector whose
  // picks are joined along all base edges, with f(v, pick) = deg(v).
  for (auto& [name, g] : named_bases({"P3", "K3"})) {
    for (const Cover& c : enumerate_covers(g, 2, MatchingPolicy::all)) {
      for (int mask = 0; mask < (1 << g.order()); ++mask) {
        std::vector<int> picks(g.order());
        for (Vertex v = 0; v < g.order(); ++v) picks[v] = mask >> v & 1;
        bool joined = true;
        for (int e = 0; e < g.size(); ++e) {
          joined = joined && c.matching(e).forward(picks[g.edge(e).u]) == picks[g.edge(e).v];
        }
        if (!joined) continue;
        ValueMap f(g.order(), 2);
        for (Vertex v = 0; v < g.order(); ++v) f.set(v, picks[v], g.degree(v));
        add("monoblock_" + name, c, std::move(f), true);
      }
    }
  }
  return out;
}

TheoremReport verify_building_ground_truth(const RunOptions& opts) {
  return run_family("building", InstanceSource("building ground truth", building_ground_truth()), opts);
}

// ---------------------------------------------------------------------------
// Structural helpers

bool kernel_abstractly_isomorphic(const Cover& c, const ValueMap& f) {
  const Graph& g = c.base();
  if (g.order() > 8) throw std::invalid_argument("abstract kernel isomorphism is limited to 8 base vertices");
  CoverSubgraph k = kernel(c, f);
  if (static_cast<int>(k.vertices.size()) != g.order() || static_cast<int>(k.edges.size()) != g.size()) return false;
  Graph kg = k.to_graph();
  std::vector<int> dk, dg;
  for (int i = 0; i < g.order(); ++i) {
    dk.push_back(kg.degree(i));
    dg.push_back(g.degree(i));
  }
  if (std::is_permutation(dk.begin(), dk.end(), dg.begin()) == false) return false;
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; ok && i < g.order(); ++i) ok = kg.degree(i) == g.degree(perm[i]);
    for (int e = 0; ok && e < kg.size(); ++e) ok = g.adjacent(perm[kg.edge(e).u], perm[kg.edge(e).v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::vector<Vertex>> two_connected_vertex_sets(const Graph& g, std::span<const Vertex> within) {
  const int k = static_cast<int>(within.size());
  if (k > 20) throw std::invalid_argument("too many vertices for subset enumeration");
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (std::popcount(mask) < 3) continue;
    std::vector<Vertex> s;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) s.push_back(within[i]);
    }
    std::sort(s.begin(), s.end());
    if (is_2connected(g.induced(s))) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::string, Graph>> named_bases(const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, Graph>> out;
  for (const auto& name : names) {
    Graph g;
    if (name == "bowtie") {
      g = bowtie_graph();
    } else if (name == "petersen") {
      g = petersen_graph();
    } else if (name.size() >= 2 && (name[0] == 'P' || name[0] == 'C' || name[0] == 'K' || name[0] == 'S')) {
      int n = 0;
      try {
        n = std::stoi(name.substr(1));
      } catch (const std::logic_error&) {
        throw std::invalid_argument("unknown base `" + name + "`");
      }
      switch (name[0]) {
        case 'P':
          g = path_graph(n);
          break;
        case 'C':
          g = cycle_graph(n);
          break;
        case 'K':
          g = complete_graph(n);
          break;
        default:
          g = star_graph(n);
      }
    } else {
      throw std::invalid_argument("unknown base `" + name + "`");
    }
    out.emplace_back(name, std::move(g));
  }
  return out;
}

}  // namespace sfdt
