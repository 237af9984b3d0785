#pragma once

#include <utility>
#include <vector>

#include "reesgraph/errors.hpp"
#include "reesgraph/group.hpp"

namespace rees {

enum class Cell : unsigned char { Zero, Star };

// The {0, x} pattern matrix. Rows are Lambda-labels, columns are I-labels;
// storage is 0-based, external labels are 1-based.
class StructuralMatrix {
 public:
  StructuralMatrix(int rows, int cols, std::vector<Cell> cells);
  static StructuralMatrix filled(int rows, int cols, Cell value);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cell at(int row, int col) const { return cells_[static_cast<size_t>(row) * cols_ + col]; }
  bool is_zero(int row, int col) const { return at(row, col) == Cell::Zero; }
  void set(int row, int col, Cell value) { cells_[static_cast<size_t>(row) * cols_ + col] = value; }

  bool operator==(const StructuralMatrix& other) const = default;

 private:
  int rows_, cols_;
  std::vector<Cell> cells_;
};

// Sandwich matrix over G^0: a cell is kZero or a group element index.
class SandwichMatrix {
 public:
  static constexpr int kZero = -1;

  SandwichMatrix(int rows, int cols, std::vector<int> cells);
  // Validates every non-zero entry against the group order.
  SandwichMatrix(int rows, int cols, std::vector<int> cells, const FiniteGroup& group);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int row, int col) const { return cells_[static_cast<size_t>(row) * cols_ + col]; }
  bool is_zero(int row, int col) const { return at(row, col) == kZero; }

  bool operator==(const SandwichMatrix& other) const = default;

 private:
  int rows_, cols_;
  std::vector<int> cells_;
};

// Strips group entries, keeping only the zero pattern.
StructuralMatrix structural(const SandwichMatrix& p);

bool is_regular(const StructuralMatrix& m);
bool is_regular(const SandwichMatrix& p);
bool has_zero(const StructuralMatrix& m);
bool has_zero(const SandwichMatrix& p);

// All (row, col) positions of zeros, row-major.
std::vector<std::pair<int, int>> zero_cells(const StructuralMatrix& m);
std::vector<int> row_zero_counts(const StructuralMatrix& m);
std::vector<int> col_zero_counts(const StructuralMatrix& m);

StructuralMatrix transpose(const StructuralMatrix& m);

// True iff some row and column selection of m admits orderings matching q
// exactly (q is equivalent, up to row/column exchanges, to a submatrix of m).
bool contains_pattern(const StructuralMatrix& m, const StructuralMatrix& q);

// True iff some row permutation and column permutation maps a onto b.
// Guarded to rows, cols <= 12.
bool equivalent(const StructuralMatrix& a, const StructuralMatrix& b);

struct ZeroBlock {
  std::vector<int> rows;  // 0-based row indices
  std::vector<int> cols;  // 0-based column indices
  long area = 0;
};

// Largest n*m over all-zero combinatorial rectangles (O_{n x m} patterns up
// to row/column exchanges). Enumerates subsets of the smaller dimension,
// which is guarded to <= 20.
ZeroBlock max_zero_block(const StructuralMatrix& m);

namespace patterns {

StructuralMatrix zero_block(int rows, int cols);  // O_{rows x cols}
StructuralMatrix diagonal(int n);                 // D_n: stars on the diagonal, zeros elsewhere
StructuralMatrix girth_a();                       // [[0,0,x,x],[x,x,0,0]]
StructuralMatrix girth_b();                       // [[0,0,x],[x,0,0]]

}  // namespace patterns

}  // namespace rees
