#pragma once

#include <utility>
#include <vector>

#include "reesgraph/matrix.hpp"

namespace rees {

// Cumulative index sets (I_k, Lambda_k) after step k, kept sorted in the
// original matrix order.
struct ClosureStep {
  std::vector<int> cols;
  std::vector<int> rows;
};

struct ClosureRun {
  int start_row = 0;
  int start_col = 0;
  std::vector<ClosureStep> steps;  // steps[k] is the block after step k

  int z() const { return static_cast<int>(steps.size()) - 1; }
  const ClosureStep& final_block() const { return steps.back(); }
};

struct ClosureSubmatrix {
  std::vector<int> rows;
  std::vector<int> cols;

  bool operator==(const ClosureSubmatrix& other) const = default;
};

// Grows the block from the zero at (row, col) until no zero of the matrix
// lies in its rows or columns outside the block. Deterministic.
ClosureRun run_closure(const StructuralMatrix& m, int row, int col);

// One run per zero not yet covered, scanning zeros in row-major order. The
// resulting blocks are pairwise disjoint in rows and in columns, and their
// zeros partition the zeros of the matrix.
std::vector<ClosureSubmatrix> all_closure_submatrices(const StructuralMatrix& m);

// Cells (row, col) selected exactly at step k: the block difference between
// steps k and k-1 (all cells, zero and star).
std::vector<std::pair<int, int>> step_entries(const ClosureRun& run, int k);

}  // namespace rees
