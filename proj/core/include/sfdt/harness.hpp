#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sfdt/cover.hpp"
#include "sfdt/io.hpp"

namespace sfdt {

enum class MatchingPolicy { all, perfect_only, sampled };

std::string_view to_string(MatchingPolicy p);
std::optional<MatchingPolicy> parse_matching_policy(std::string_view s);

/// Every partial matching between two fibers of size kappa, ordered by size
/// and then by sorted pair list.
std::vector<Matching> all_matchings(int kappa);
std::vector<Matching> perfect_matchings(int kappa);

/// sum_k C(kappa, k)^2 k!, or kappa! with perfect_only.
std::uint64_t matching_count(int kappa, bool perfect_only);

inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

/// Covers of g under the policy. Exhaustive policies list covers in
/// mixed-radix order over edge ids; `sampled` draws `samples` covers with
/// independent uniform matchings from all_matchings. Throws
/// std::invalid_argument when an exhaustive count reaches kEnumerationGuard.
std::vector<Cover> enumerate_covers(const Graph& g, int kappa, MatchingPolicy policy, std::uint64_t samples = 0,
                                    std::uint64_t seed = 0);

Cover random_cover(const Graph& g, int kappa, bool perfect_only, std::mt19937_64& rng);

enum class ValuePolicy {
  degree_equal,      // sum_q f(v, q) = deg(v)
  degree_ge,         // sum >= deg
  degree_ge_one_gt,  // sum >= deg everywhere, > deg somewhere
  degree_gt,         // sum > deg everywhere
  sum_at_least,      // sum >= floor (the base's coloring number when floor = 0)
  bounded_entries,   // every entry in [0, max_entry]
};

std::string_view to_string(ValuePolicy p);
std::optional<ValuePolicy> parse_value_policy(std::string_view s);

/// Every value map with per-fiber sums equal to degrees and entries at most
/// max_entry, in mixed-radix order over vertices.
std::vector<ValueMap> degree_equal_values(const Graph& g, int kappa, int max_entry);

ValueMap random_values(const Graph& g, int kappa, ValuePolicy policy, int max_entry, int floor, std::mt19937_64& rng);

struct InstanceFamily {
  std::string name;
  /// Named fixed bases; when empty, bases are random connected graphs.
  std::vector<std::pair<std::string, Graph>> bases;
  int min_n = 2;
  int max_n = 6;
  double edge_p = 0.5;
  std::vector<int> kappas{2};
  MatchingPolicy matchings = MatchingPolicy::perfect_only;
  ValuePolicy values = ValuePolicy::degree_equal;
  int max_entry = 3;
  int floor = 0;
  /// 0 enumerates every (base, kappa, cover, f) combination, which needs
  /// fixed bases, an exhaustive matching policy and degree_equal values.
  /// Otherwise this many instances are drawn, instance i from its own seed.
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
};

struct Instance {
  std::string base_name;
  Cover cover;
  ValueMap values;
  int floor = 0;
  /// Expected recognizer verdict for ground-truth cases.
  std::optional<bool> expect_building;
};

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

/// Random-access view of a family's instances.
class InstanceSource {
 public:
  explicit InstanceSource(InstanceFamily family);
  InstanceSource(std::string name, std::vector<Instance> fixed);

  std::uint64_t size() const { return size_; }
  Instance at(std::uint64_t index) const;
  const InstanceFamily& family() const { return family_; }

 private:
  struct Block {
    std::string name;
    Graph base;
    int kappa;
    std::vector<ValueMap> values;
    std::uint64_t covers;
    std::uint64_t first;
  };
  Cover cover_at(const Block& b, std::uint64_t index) const;

  InstanceFamily family_;
  std::vector<Block> blocks_;
  std::map<int, std::vector<Matching>> matchings_;  // by kappa, under the family policy
  std::vector<Instance> fixed_;
  std::uint64_t size_ = 0;
};

/// Merge-friendly counters. Keys starting with "max_" merge by maximum,
/// all others by sum.
struct Tally {
  std::map<std::string, std::int64_t> values;

  void add(const std::string& key, std::int64_t delta = 1) { values[key] += delta; }
  void note_max(const std::string& key, std::int64_t v);
  void merge(const Tally& other);
};

struct Counterexample {
  std::uint64_t index = 0;
  Json instance;
  std::string detail;
};

struct TheoremReport {
  std::string theorem;
  std::string family;
  std::uint64_t instances = 0;
  std::uint64_t skipped = 0;
  std::vector<Counterexample> counterexamples;
  Tally stats;

  bool ok() const { return counterexamples.empty(); }
  Json to_json() const;
  /// Single summary line: theorem, family, counts and failures.
  std::string summary_row() const;
};

std::string summary_table(const std::vector<TheoremReport>& reports);

/// Outcome of one instance check: nullopt = skipped, "" = holds, else the
/// reason it fails.
using CheckResult = std::optional<std::string>;

/// Instance checks behind the reports. Each records counters in `stats`.
CheckResult check_mr(const Instance& inst, Tally& stats);
CheckResult check_ge(const Instance& inst, Tally& stats);
CheckResult check_smr_msmr(const Instance& inst, Tally& stats);
CheckResult check_l_and_gallai(const Instance& inst, Tally& stats);
CheckResult check_t51(const Instance& inst, Tally& stats);
CheckResult check_building_case(const Instance& inst, Tally& stats);

/// Re-runs the named check on a serialized instance. True iff it still fails.
bool replay_fails(const std::string& theorem, const Json& instance);

struct RunOptions {
  int jobs = 1;
};

TheoremReport run_family(const std::string& theorem, const InstanceSource& source, const RunOptions& opts = {});

TheoremReport verify_theorem_mr(const InstanceFamily& family, const RunOptions& opts = {});
TheoremReport verify_lemma_ge(const InstanceFamily& family, const RunOptions& opts = {});
TheoremReport verify_smr_msmr(const InstanceFamily& family, const RunOptions& opts = {});
TheoremReport verify_theorem_l_and_gallai(const InstanceFamily& family, const RunOptions& opts = {});
TheoremReport verify_theorem_5_1(const InstanceFamily& family, const RunOptions& opts = {});

/// Greedy peeling against the subset oracle: every connected labeled graph
/// with up to `exhaustive_n` vertices (`per_graph` random f each), then
/// `random_count` random connected graphs for each order in
/// (exhaustive_n, max_n]. Entries of f are drawn from [0, max_entry].
struct GreedySweep {
  int exhaustive_n = 5;
  int per_graph = 4;
  int max_n = 7;
  std::uint64_t random_count = 10'000;
  int max_entry = 3;
  std::uint64_t seed = 1;
};
TheoremReport verify_greedy_vs_oracle(const GreedySweep& sweep, const RunOptions& opts = {});

/// Building covers (expect_building = true) and near misses that must have
/// an SFDT (false).
std::vector<Instance> building_ground_truth();
TheoremReport verify_building_ground_truth(const RunOptions& opts = {});

/// Kernel isomorphic to the base as an abstract graph, by permutation search.
/// Throws std::invalid_argument above 8 base vertices.
bool kernel_abstractly_isomorphic(const Cover& c, const ValueMap& f);

/// Vertex sets S of size >= 3 with G[S] 2-connected, by subset enumeration.
std::vector<std::vector<Vertex>> two_connected_vertex_sets(const Graph& g, std::span<const Vertex> within);

/// Named bases used by the exhaustive families.
std::vector<std::pair<std::string, Graph>> named_bases(const std::vector<std::string>& names);

}  // namespace sfdt
