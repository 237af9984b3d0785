#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reesgraph/closure.hpp"
#include "reesgraph/graph.hpp"
#include "reesgraph/group.hpp"
#include "reesgraph/matrix.hpp"

namespace rees {

// One connected component of the commuting graph, described by matrix data:
// a closure block (vertices I_Q x G x Lambda_Q), a pair of blocks
// ((I_Q x G x Lambda_M) u (I_M x G x Lambda_Q)), or a star cell with a
// zero-free row or column (vertices {i} x G x {lambda}).
struct ComponentDescriptor {
  enum class Kind { Single, Pair, Star };

  Kind kind = Kind::Single;
  ClosureSubmatrix q;  // Single and Pair
  ClosureSubmatrix m;  // Pair only
  int star_col = 0;    // Star only
  int star_row = 0;

  static ComponentDescriptor single(ClosureSubmatrix block);
  static ComponentDescriptor pair(ClosureSubmatrix q, ClosureSubmatrix m);
  static ComponentDescriptor star(int col, int row);

  // The (col, row) cells whose G-fibres make up the component.
  std::vector<std::pair<int, int>> cells() const;
};

bool is_connected_formula(const StructuralMatrix& m);
std::vector<ComponentDescriptor> classify_components(const StructuralMatrix& m);
long component_diameter(const ComponentDescriptor& d, const StructuralMatrix& m,
                        const GroupProfile& g);
ExtNat diameter_formula(const StructuralMatrix& m, const GroupProfile& g);

// Same value as diameter_formula, but skips closure runs that the two
// reduction arguments rule out: once a block's diameter is known to be at
// least 3, zeros inside an all-zero-row/column submatrix are dropped and
// zeros in equal rows/columns of the block are merged.
ExtNat diameter_fastpath(const StructuralMatrix& m, const GroupProfile& g);

// The (row, col) zeros of the block that still need a closure run after both
// reductions; used by diameter_fastpath once the diameter is known >= 3.
std::vector<std::pair<int, int>> fastpath_representatives(const ClosureSubmatrix& block,
                                                          const StructuralMatrix& m);

long clique_number_formula(const StructuralMatrix& m, const GroupProfile& g);
ExtNat girth_formula(const StructuralMatrix& m, const GroupProfile& g);
long chromatic_upper_edges(const StructuralMatrix& m, const GroupProfile& g);
long chromatic_upper_degree(const StructuralMatrix& m, const GroupProfile& g);
std::optional<int> knit_degree_formula(const StructuralMatrix& m, const GroupProfile& g);

struct AnalysisReport {
  bool connected = false;
  std::vector<ComponentDescriptor> components;
  std::vector<long> component_diameters;  // parallel to components
  ExtNat diameter;
  long clique_number = 0;
  ExtNat girth;
  long chromatic_lower = 0;
  long chromatic_upper_edges = 0;
  long chromatic_upper_degree = 0;
  std::optional<int> knit_degree;
};

AnalysisReport analyze(const StructuralMatrix& m, const GroupProfile& g);

}  // namespace rees
