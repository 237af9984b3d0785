#pragma once

#include <string>
#include <vector>

#include "reesgraph/graph.hpp"
#include "reesgraph/group.hpp"
#include "reesgraph/matrix.hpp"

namespace rees {

// An element of the 0-Rees matrix semigroup: the zero, or a triple
// (i, g, lambda) with column index i, group element g, row index lambda.
struct SemigroupElement {
  bool zero = true;
  int col = 0;
  int g = 0;
  int row = 0;

  static SemigroupElement zero_element() { return SemigroupElement{}; }
  static SemigroupElement triple(int col, int g, int row) {
    return SemigroupElement{false, col, g, row};
  }
  bool operator==(const SemigroupElement& other) const {
    if (zero != other.zero) return false;
    return zero || (col == other.col && g == other.g && row == other.row);
  }
};

SemigroupElement multiply(const SemigroupElement& a, const SemigroupElement& b,
                          const FiniteGroup& group, const SandwichMatrix& p);

std::vector<SemigroupElement> semigroup_center(const FiniteGroup& group, const SandwichMatrix& p);

inline constexpr long kOracleVertexGuard = 2000;

// Vertices are the non-central elements, ordered lexicographically by
// (i, g, lambda); edges join distinct commuting elements. Adjacency is
// cross-checked against the sandwich-entry criterion while building.
SimpleGraph build_commuting_graph(const FiniteGroup& group, const SandwichMatrix& p);

// Graph on I x Lambda with (i,lam) ~ (j,mu) iff distinct and
// p(lam,j) = p(mu,i) = 0. Vertex order is lexicographic by (i, lam).
SimpleGraph build_simplified_graph(const StructuralMatrix& m);

// Vertex id of (col i, group g, row lam) in build_commuting_graph order
// (valid when the center is {0}, so every triple is a vertex).
int commuting_vertex_id(const FiniteGroup& group, const SandwichMatrix& p, int col, int g,
                        int row);
int simplified_vertex_id(const StructuralMatrix& m, int col, int row);

// All left paths up to max_len edges: simple paths v1..vn with v1 != vn and
// v1*vi = vn*vi for every i. Paths are canonicalized with v1 < vn.
std::vector<std::vector<int>> find_left_paths(const FiniteGroup& group, const SandwichMatrix& p,
                                              int max_len);

// The explicit vertex bijection between the commuting graphs of p and q when
// structural(p) == structural(q); verified to preserve and reflect adjacency.
std::vector<int> psi_isomorphism(const SandwichMatrix& p, const SandwichMatrix& q,
                                 const FiniteGroup& group);

}  // namespace rees
