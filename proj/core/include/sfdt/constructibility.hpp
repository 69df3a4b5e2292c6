#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sfdt/cover.hpp"

namespace sfdt {

enum class BuildingKind { monoblock, tilde_complete, odd_cycle_ladder, even_cycle_mobius };

std::string_view to_string(BuildingKind k);
std::optional<BuildingKind> parse_building_kind(std::string_view s);

/// Evidence that a valued cover is a building cover.
///
/// `layers` are transversals of the kernel: the single positive pick per fiber
/// for a monoblock, one layer per kernel component (a copy of K_p) for the
/// tilde-complete case, and the two layers of a ladder labeled by walking the
/// base cycle from vertex 0. `layer_values` holds the constant value of each
/// tilde-complete component and is empty otherwise.
struct BuildingWitness {
  BuildingKind kind = BuildingKind::monoblock;
  std::vector<std::vector<int>> layers;
  std::vector<int> layer_values;

  friend bool operator==(const BuildingWitness&, const BuildingWitness&) = default;
};

/// Recognizes the four building cases on the kernel of (c, f). Requires
/// sum_q f(v, q) = deg(v) everywhere. Cases are tried in the order monoblock,
/// tilde-complete, odd-cycle ladder, even-cycle Mobius ladder; the first match
/// is returned.
std::optional<BuildingWitness> check_building(const Cover& c, const ValueMap& f);

/// Re-checks a witness against its tagged case without searching.
bool building_witness_holds(const BuildingWitness& w, const Cover& c, const ValueMap& f);

struct ConstructionLeaf {
  std::vector<Vertex> vertices;  // global vertex of each local base vertex
  Cover cover;                   // building cover on the block
  ValueMap values;               // block share of f
  BuildingWitness building;
};

/// Glues `leaf` onto everything assembled so far at `cut_vertex`.
struct GluingStep {
  Vertex cut_vertex = 0;
  int leaf = 0;
  std::vector<int> accumulated_share;  // f on X_w before this step
  std::vector<int> leaf_share;         // the leaf's f on X_w
};

/// Leaf 0 is the starting piece; gluings attach the remaining leaves one at
/// a time. Replaying the gluings sums the shares on each cut fiber.
struct ConstructionTree {
  std::vector<ConstructionLeaf> leaves;
  std::vector<GluingStep> gluings;
};

/// Decides constructibility. The value sums must equal degrees; then every
/// block of the base must become a building cover under some split of the
/// cut-vertex values among its blocks. Splits are searched exhaustively
/// block by block in breadth-first order of the block-cut tree.
/// Throws PreconditionError on a disconnected base.
std::optional<ConstructionTree> is_constructible(const Cover& c, const ValueMap& f);

/// True iff every leaf is a building cover matching its witness and replaying
/// the gluings reproduces (c, f) exactly.
bool verify_construction_tree(const ConstructionTree& tree, const Cover& c, const ValueMap& f);

}  // namespace sfdt
