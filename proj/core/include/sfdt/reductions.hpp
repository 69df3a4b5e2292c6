#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sfdt/cover.hpp"

namespace sfdt {

/// Colors are palette indices 0..palette-1.
struct ListAssignment {
  int palette = 0;
  std::vector<std::vector<int>> lists;  // lists[v], sorted

  /// Throws std::invalid_argument on an empty palette or an out-of-range color.
  void validate(int n) const;
};

struct SignedGraph {
  Graph base;
  std::vector<int> sign;  // +1 or -1 per edge id
};

/// f[i][v] is the value function of part i.
struct PartitionSpec {
  std::vector<std::vector<int>> f;

  static PartitionSpec constant(int n, std::span<const int> t);
};

struct ValuedCover {
  Cover cover;
  ValueMap values;
};

/// ID-cover with f(v, i) = f_i(v).
ValuedCover encode_partition(const Graph& g, const PartitionSpec& spec);

/// V_i = vertices picking index i.
std::vector<std::vector<Vertex>> decode_partition(const Transversal& r, int kappa);

/// True iff every G[V_i] is strictly f_i-degenerate.
bool is_valid_partition(const Graph& g, const PartitionSpec& spec, const std::vector<std::vector<Vertex>>& parts);

/// ID-cover with f(v, i) = 1 for i in L(v), else 0.
ValuedCover encode_list_coloring(const Graph& g, const ListAssignment& lists);

/// ID-cover with f(v, i) = 2 for i in L(v), else 0.
ValuedCover encode_forested(const Graph& g, const ListAssignment& lists);

/// Checks that f is a DP-coloring value map for the cover: entries in {0, 1}
/// and at least t positive entries per fiber. Throws std::invalid_argument
/// on an entry outside {0, 1}.
bool encode_dp(const Cover& c, const ValueMap& f, int t);

/// Colors in fiber order: 0, +1, -1, +2, -2, ... for odd k, and
/// +1, -1, +2, -2, ... for even k. Throws std::invalid_argument for k <= 0.
std::vector<int> signed_palette(int k);

/// Fiber index i stands for color signed_palette(k)[i]; the matching on uv
/// pairs color a at u with sign(uv) * a at v. f is 1 everywhere.
ValuedCover encode_signed(const SignedGraph& sg, int k);

/// Color of each vertex under the signed encoding.
std::vector<int> decode_signed(const Transversal& r, int k);

bool is_signed_coloring(const SignedGraph& sg, std::span<const int> colors);

}  // namespace sfdt
