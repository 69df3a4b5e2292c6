#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sfdt/cover.hpp"

namespace sfdt {

enum class SolveStatus { found, exhausted, aborted };

std::string_view to_string(SolveStatus s);

struct SolveLimits {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double timeout_s = 0;         // 0 = unlimited
};

struct SolveResult {
  SolveStatus status = SolveStatus::exhausted;
  std::optional<Transversal> witness;
  std::uint64_t nodes_expanded = 0;
  /// deg_R(v, q) <= f(v, q) at every pick of the witness.
  bool bounded = false;
  /// deg_R(v, q) < f(v, q) at every pick of the witness.
  bool strictly_bounded = false;
  /// def(R) of the solver's witness followed by its value after each swap of
  /// the deficiency descent. Empty when no descent ran.
  std::vector<long> descent_trace;
};

/// Exhaustive backtracking over transversals. Fibers are assigned in BFS
/// order from a maximum-degree root (lowest index on ties), picks in
/// ascending index. A partial assignment is abandoned as soon as its picks
/// contain a nonempty set in which every vertex already has at least f
/// neighbors, since adding picks can only raise degrees.
SolveResult find_sfdt(const Cover& c, const ValueMap& f, const SolveLimits& limits = {});

/// An SFDT with deg_R(v, q) <= f(v, q) at every pick, reached by deficiency
/// descent from the first SFDT found. If a swap has no admissible target
/// (possible only where sum_q f(v, q) < deg(v)) the search restarts with the
/// degree cap enforced during backtracking.
SolveResult find_sfdt_bounded(const Cover& c, const ValueMap& f, const SolveLimits& limits = {});

/// Same with the strict cap deg_R(v, q) < f(v, q). Requires
/// sum_q f(v, q) > deg(v) at every vertex; throws PreconditionError otherwise.
SolveResult find_sfdt_strictly_bounded(const Cover& c, const ValueMap& f, const SolveLimits& limits = {});

/// |E(H[R])| - sum of f over R.
long deficiency(const Cover& c, const ValueMap& f, const Transversal& r);

/// deg_R(v, r_v) for every base vertex v.
std::vector<int> pick_degrees(const Cover& c, const Transversal& r);

/// H[R] as a graph on base indices, with f(v, r_v) alongside.
Graph transversal_graph(const Cover& c, const Transversal& r);
std::vector<int> transversal_values(const ValueMap& f, const Transversal& r);

bool is_sfdt(const Cover& c, const ValueMap& f, const Transversal& r);

enum class DegreeCap { at_most, below };

struct Descent {
  Transversal result;
  std::vector<long> trace;  // def(R) at the start and after each swap
  bool stuck = false;       // a violating pick had no admissible replacement
};

/// Swap-improvement from an SFDT: take the lowest-index fiber whose pick
/// breaks the cap, drop it, and re-pick the lowest index q whose degree into
/// the remaining picks is below f(w, q). Each swap keeps R strictly
/// f-degenerate and lowers def(R).
Descent descend(const Cover& c, const ValueMap& f, Transversal start, DegreeCap cap);

/// No SFDT exists, yet deleting any single fiber leaves a cover with one.
bool is_minimal_non_sfdt(const Cover& c, const ValueMap& f);

/// Every SFDT in lexicographic pick order. Throws std::invalid_argument when
/// kappa^n exceeds `max_transversals`.
std::vector<Transversal> all_sfdts(const Cover& c, const ValueMap& f, std::uint64_t max_transversals = 1u << 20);

}  // namespace sfdt
