#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sfdt/graph.hpp"

namespace sfdt {

class CoverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Partial injective map between the fibers of an edge's two endpoints,
/// oriented from the lower endpoint u to the upper endpoint v. Fiber indices
/// are 0-based.
class Matching {
 public:
  explicit Matching(int kappa = 0) : forward_(kappa, -1), backward_(kappa, -1) {}

  /// Throws CoverError if an index is out of range or a side repeats.
  static Matching from_pairs(int kappa, std::span<const std::pair<int, int>> pairs);
  static Matching identity(int kappa);

  int kappa() const { return static_cast<int>(forward_.size()); }
  int forward(int p) const { return forward_[p]; }
  int backward(int q) const { return backward_[q]; }
  int size() const;
  bool is_perfect() const { return size() == kappa(); }
  /// (p, q) pairs sorted lexicographically.
  std::vector<std::pair<int, int>> pairs() const;
  Matching inverse() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<int> forward_;
  std::vector<int> backward_;
};

/// A cover H of a base graph G: fibers X_v = {(v,0),...,(v,kappa-1)} and one
/// (possibly empty) matching per base edge. Cover vertex (v, q) has the flat
/// id v * kappa + q.
class Cover {
 public:
  Cover() = default;
  /// `matchings` is indexed by edge id of `base`.
  Cover(Graph base, int kappa, std::vector<Matching> matchings);

  const Graph& base() const { return base_; }
  int kappa() const { return kappa_; }
  int order() const { return base_.order() * kappa_; }
  int edge_count() const;

  int id(Vertex v, int q) const { return v * kappa_ + q; }
  Vertex fiber_of(int cover_id) const { return cover_id / kappa_; }
  int index_of(int cover_id) const { return cover_id % kappa_; }

  const Matching& matching(int edge_id) const { return matchings_[edge_id]; }
  const std::vector<Matching>& matchings() const { return matchings_; }

  /// Partner index of (v, q) across the slot-th neighbor of v, or -1.
  int partner_at(Vertex v, int slot, int q) const {
    return link_[(base_.adjacency_offset(v) + slot) * kappa_ + q];
  }
  /// Partner index of (v, q) in the fiber of neighbor u, or -1 (also when
  /// u is not adjacent to v).
  int partner(Vertex v, int q, Vertex u) const;

  std::vector<int> neighbors(int cover_id) const;

  friend bool operator==(const Cover& a, const Cover& b) {
    return a.kappa_ == b.kappa_ && a.base_ == b.base_ && a.matchings_ == b.matchings_;
  }

 private:
  Graph base_;
  int kappa_ = 1;
  std::vector<Matching> matchings_;
  std::vector<int> link_;
};

/// An operation's stated hypothesis does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using MatchingSpec = std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>;

/// Keys are base edges (either orientation); pairs are (index at key.first,
/// index at key.second). Missing keys mean empty matchings.
Cover make_cover(const Graph& g, int kappa, const MatchingSpec& matchings);

/// Nonnegative integer value on every cover vertex, laid out by cover id.
class ValueMap {
 public:
  ValueMap() = default;
  ValueMap(int n, int kappa, int fill = 0);
  ValueMap(int n, int kappa, std::vector<int> values);

  int order() const { return n_; }
  int kappa() const { return kappa_; }
  int operator()(Vertex v, int q) const { return values_[v * kappa_ + q]; }
  int at(int cover_id) const { return values_[cover_id]; }
  void set(Vertex v, int q, int value);
  int sum(Vertex v) const;
  int max_at(Vertex v) const;
  std::span<const int> values() const { return values_; }
  std::span<const int> fiber(Vertex v) const { return {values_.data() + v * kappa_, static_cast<std::size_t>(kappa_)}; }

  friend bool operator==(const ValueMap&, const ValueMap&) = default;

 private:
  int n_ = 0;
  int kappa_ = 1;
  std::vector<int> values_;
};

struct Transversal {
  std::vector<int> picks;  // picks[v] = chosen fiber index of v

  friend bool operator==(const Transversal&, const Transversal&) = default;
};

/// Induced subgraph of a cover on a set of cover vertices.
struct CoverSubgraph {
  std::vector<int> vertices;                // sorted cover ids
  std::vector<std::pair<int, int>> edges;   // sorted, first < second

  /// Graph on local indices: vertices[i] becomes vertex i.
  Graph to_graph() const;
  std::vector<int> local_values(const ValueMap& f) const;
};

Cover id_cover(const Graph& g, int kappa);
/// ID-cover of C_n with two layers: two disjoint n-cycles.
Cover circular_ladder_cover(int n);
/// C_n with identity matchings except a swap on the closing edge (0, n-1):
/// a single 2n-cycle.
Cover mobius_ladder_cover(int n);
Cover tilde_complete_cover(int p, int kappa);

CoverSubgraph induced_subgraph(const Cover& c, std::vector<int> cover_ids);
CoverSubgraph full_subgraph(const Cover& c);
/// Cover vertices with positive value.
CoverSubgraph kernel(const Cover& c, const ValueMap& f);
CoverSubgraph induced_on_transversal(const Cover& c, const Transversal& r);
std::vector<std::vector<int>> components(const CoverSubgraph& h);

bool is_valid_transversal(const Cover& c, const Transversal& r);
/// f constant on each connected component of H.
bool is_semi_constant(const Cover& c, const ValueMap& f);

struct SubCover {
  Cover cover;
  ValueMap values;
  std::vector<Vertex> to_parent;
};

/// Cover of G[keep] with the matchings and values inherited from (c, f).
SubCover restrict_to(const Cover& c, const ValueMap& f, std::span<const Vertex> keep);
/// H - X_v.
SubCover delete_fiber(const Cover& c, const ValueMap& f, Vertex v);

}  // namespace sfdt
