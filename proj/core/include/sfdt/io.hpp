#pragma once

#include <istream>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "sfdt/constructibility.hpp"
#include "sfdt/cover.hpp"
#include "sfdt/reductions.hpp"

namespace sfdt {

/// Malformed input text or JSON.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// `n m` then m lines `u v`, 0-based; `#` starts a comment line.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

/// Edge list whose lines carry a third field +1 or -1.
SignedGraph read_signed_graph(std::istream& in);

/// One line `v: c1 c2 ...` per vertex with 1-based colors. Vertices without
/// a line get an empty list. palette = 0 takes the largest color seen.
ListAssignment read_list_assignment(std::istream& in, int n, int palette = 0);

/// {"n", "kappa", "edges", "matchings": {"u-v": [[p, q], ...]}, "f": [[v, q, value], ...]}
/// with 0-based vertices and 1-based fiber indices. Keys "u-v" have u < v,
/// pairs are (index at u, index at v). Zero f entries are omitted on output.
Json cover_to_json(const Cover& c, const ValueMap& f);
ValuedCover cover_from_json(const Json& j);

/// Picks as 1-based fiber indices.
Json transversal_to_json(const Transversal& r);
Transversal transversal_from_json(const Json& j, int kappa);

Json building_to_json(const BuildingWitness& w);
BuildingWitness building_from_json(const Json& j);

Json construction_tree_to_json(const ConstructionTree& t);
ConstructionTree construction_tree_from_json(const Json& j);

Json parse_json(std::istream& in);

}  // namespace sfdt
