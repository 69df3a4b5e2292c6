#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sfdt/graph.hpp"

namespace sfdt {

/// Vertices in deletion order; each has fewer than f(v) neighbors among the
/// vertices after it.
struct RemovalOrder {
  std::vector<Vertex> order;
};

/// Greedy peeling: repeatedly delete the vertex minimizing (degree - f),
/// lowest index on ties, while that vertex has degree < f. Returns the
/// removal order when the graph empties. Deleting a vertex never raises a
/// degree, so the outcome does not depend on which deletable vertex is taken.
std::optional<RemovalOrder> f_removing_order(const Graph& h, std::span<const int> f);

bool is_strictly_f_degenerate(const Graph& h, std::span<const int> f);
bool is_strictly_k_degenerate(const Graph& h, int k);

/// Least k such that h is strictly k-degenerate (degeneracy + 1; 0 for the
/// empty graph).
int coloring_number(const Graph& h);

/// Checks the removal-order invariant by direct recount.
bool is_f_removing_order(const Graph& h, std::span<const int> f, const RemovalOrder& r);

inline constexpr int kBruteForceMaxOrder = 20;

/// Literal definition over every nonempty vertex subset. Throws
/// std::invalid_argument above kBruteForceMaxOrder vertices.
bool brute_force_strictly_f_degenerate(const Graph& h, std::span<const int> f);

}  // namespace sfdt
