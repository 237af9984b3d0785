#include "reesgraph/matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace rees {

namespace {

void check_shape(int rows, int cols, size_t n) {
  if (rows < 1 || cols < 1)
    throw InvalidOrderError("matrix dimensions must be positive");
  if (n != static_cast<size_t>(rows) * cols)
    throw InvalidOrderError("cell count does not match matrix dimensions");
}

}  // namespace

StructuralMatrix::StructuralMatrix(int rows, int cols, std::vector<Cell> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  check_shape(rows_, cols_, cells_.size());
}

StructuralMatrix StructuralMatrix::filled(int rows, int cols, Cell value) {
  return StructuralMatrix(rows, cols, std::vector<Cell>(static_cast<size_t>(rows) * cols, value));
}

SandwichMatrix::SandwichMatrix(int rows, int cols, std::vector<int> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  check_shape(rows_, cols_, cells_.size());
  for (int v : cells_)
    if (v < kZero) throw InvalidOrderError("sandwich cell index out of range");
}

SandwichMatrix::SandwichMatrix(int rows, int cols, std::vector<int> cells,
                               const FiniteGroup& group)
    : SandwichMatrix(rows, cols, std::move(cells)) {
  for (int v : cells_)
    if (v != kZero && v >= group.order())
      throw InvalidOrderError("sandwich entry " + std::to_string(v) +
                              " is not an element of a group of order " +
                              std::to_string(group.order()));
}

StructuralMatrix structural(const SandwichMatrix& p) {
  std::vector<Cell> cells(static_cast<size_t>(p.rows()) * p.cols());
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.cols(); ++c)
      cells[static_cast<size_t>(r) * p.cols() + c] =
          p.is_zero(r, c) ? Cell::Zero : Cell::Star;
  return StructuralMatrix(p.rows(), p.cols(), std::move(cells));
}

namespace {

template <typename M>
bool regular_impl(const M& m) {
  for (int r = 0; r < m.rows(); ++r) {
    bool star = false;
    for (int c = 0; c < m.cols(); ++c)
      if (!m.is_zero(r, c)) {
        star = true;
        break;
      }
    if (!star) return false;
  }
  for (int c = 0; c < m.cols(); ++c) {
    bool star = false;
    for (int r = 0; r < m.rows(); ++r)
      if (!m.is_zero(r, c)) {
        star = true;
        break;
      }
    if (!star) return false;
  }
  return true;
}

template <typename M>
bool has_zero_impl(const M& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.is_zero(r, c)) return true;
  return false;
}

}  // namespace

bool is_regular(const StructuralMatrix& m) { return regular_impl(m); }
bool is_regular(const SandwichMatrix& p) { return regular_impl(p); }
bool has_zero(const StructuralMatrix& m) { return has_zero_impl(m); }
bool has_zero(const SandwichMatrix& p) { return has_zero_impl(p); }

std::vector<std::pair<int, int>> zero_cells(const StructuralMatrix& m) {
  std::vector<std::pair<int, int>> result;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.is_zero(r, c)) result.emplace_back(r, c);
  return result;
}

std::vector<int> row_zero_counts(const StructuralMatrix& m) {
  std::vector<int> counts(m.rows(), 0);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.is_zero(r, c)) ++counts[r];
  return counts;
}

std::vector<int> col_zero_counts(const StructuralMatrix& m) {
  std::vector<int> counts(m.cols(), 0);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.is_zero(r, c)) ++counts[c];
  return counts;
}

StructuralMatrix transpose(const StructuralMatrix& m) {
  StructuralMatrix t = StructuralMatrix::filled(m.cols(), m.rows(), Cell::Star);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t.set(c, r, m.at(r, c));
  return t;
}

namespace {

// Checks whether the submatrix of m given by (rowsel, colsel) is equivalent
// to q up to row/column exchanges: brute force over row permutations of the
// selection, then demand a column bijection, i.e. equal column multisets.
bool selection_matches(const StructuralMatrix& m, const StructuralMatrix& q,
                       const std::vector<int>& rowsel, const std::vector<int>& colsel) {
  int k = q.rows(), l = q.cols();
  std::vector<int> perm(rowsel.begin(), rowsel.end());
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<std::vector<Cell>> mcols(l), qcols(l);
    for (int c = 0; c < l; ++c) {
      mcols[c].resize(k);
      qcols[c].resize(k);
      for (int r = 0; r < k; ++r) {
        mcols[c][r] = m.at(perm[r], colsel[c]);
        qcols[c][r] = q.at(r, c);
      }
    }
    std::sort(mcols.begin(), mcols.end());
    std::sort(qcols.begin(), qcols.end());
    if (mcols == qcols) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool search_rows(const StructuralMatrix& m, const StructuralMatrix& q, std::vector<int>& rowsel,
                 std::vector<int>& colsel, int next_col) {
  if (static_cast<int>(colsel.size()) == q.cols())
    return selection_matches(m, q, rowsel, colsel);
  for (int c = next_col; c < m.cols(); ++c) {
    colsel.push_back(c);
    if (search_rows(m, q, rowsel, colsel, c + 1)) return true;
    colsel.pop_back();
  }
  return false;
}

bool search_selection(const StructuralMatrix& m, const StructuralMatrix& q,
                      std::vector<int>& rowsel, int next_row) {
  if (static_cast<int>(rowsel.size()) == q.rows()) {
    std::vector<int> colsel;
    return search_rows(m, q, rowsel, colsel, 0);
  }
  for (int r = next_row; r < m.rows(); ++r) {
    rowsel.push_back(r);
    if (search_selection(m, q, rowsel, r + 1)) return true;
    rowsel.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const StructuralMatrix& m, const StructuralMatrix& q) {
  if (q.rows() > m.rows() || q.cols() > m.cols()) return false;
  // All-zero patterns reduce to a rectangle search, which avoids the
  // permutation machinery for the common O_{n x m} case.
  bool all_zero = true;
  for (int r = 0; r < q.rows() && all_zero; ++r)
    for (int c = 0; c < q.cols() && all_zero; ++c)
      if (q.at(r, c) != Cell::Zero) all_zero = false;
  if (all_zero) {
    const StructuralMatrix* mm = &m;
    StructuralMatrix tm = StructuralMatrix::filled(1, 1, Cell::Zero);
    int want_rows = q.rows(), want_cols = q.cols();
    if (m.rows() > m.cols()) {
      tm = transpose(m);
      mm = &tm;
      std::swap(want_rows, want_cols);
    }
    // enumerate row subsets of size want_rows, intersect zero sets
    std::vector<std::vector<int>> zero_sets(mm->rows());
    for (int r = 0; r < mm->rows(); ++r)
      for (int c = 0; c < mm->cols(); ++c)
        if (mm->is_zero(r, c)) zero_sets[r].push_back(c);
    std::vector<int> rowsel;
    std::vector<int> common;
    std::function<bool(int, std::vector<int>)> rec = [&](int next, std::vector<int> inter) -> bool {
      if (static_cast<int>(rowsel.size()) == want_rows)
        return static_cast<int>(inter.size()) >= want_cols;
      for (int r = next; r < mm->rows(); ++r) {
        std::vector<int> ni;
        std::set_intersection(inter.begin(), inter.end(), zero_sets[r].begin(),
                              zero_sets[r].end(), std::back_inserter(ni));
        if (static_cast<int>(ni.size()) < want_cols) continue;
        rowsel.push_back(r);
        if (rec(r + 1, std::move(ni))) return true;
        rowsel.pop_back();
      }
      return false;
    };
    std::vector<int> all(mm->cols());
    std::iota(all.begin(), all.end(), 0);
    return rec(0, std::move(all));
  }
  std::vector<int> rowsel;
  return search_selection(m, q, rowsel, 0);
}

bool equivalent(const StructuralMatrix& a, const StructuralMatrix& b) {
  if (a.rows() > 12 || a.cols() > 12 || b.rows() > 12 || b.cols() > 12)
    throw SizeLimitError("equivalence check is limited to 12x12 matrices");
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::vector<int> rows(a.rows());
  std::iota(rows.begin(), rows.end(), 0);
  return selection_matches(a, b, rows, [&] {
    std::vector<int> cols(a.cols());
    std::iota(cols.begin(), cols.end(), 0);
    return cols;
  }());
}

ZeroBlock max_zero_block(const StructuralMatrix& m) {
  if (!has_zero(m)) throw NoZeroError("matrix has no zero entry");
  bool transposed = m.rows() > m.cols();
  StructuralMatrix work = transposed ? transpose(m) : m;
  if (work.rows() > 20)
    throw SizeLimitError("zero-block search is limited to 20 rows in the smaller dimension");

  std::vector<std::vector<int>> zero_sets(work.rows());
  for (int r = 0; r < work.rows(); ++r)
    for (int c = 0; c < work.cols(); ++c)
      if (work.is_zero(r, c)) zero_sets[r].push_back(c);

  ZeroBlock best;
  std::vector<int> rowsel;
  std::function<void(int, std::vector<int>)> rec = [&](int next, std::vector<int> inter) {
    if (!rowsel.empty()) {
      long area = static_cast<long>(rowsel.size()) * inter.size();
      if (area > best.area) {
        best.area = area;
        best.rows = rowsel;
        best.cols = inter;
      }
    }
    for (int r = next; r < work.rows(); ++r) {
      std::vector<int> ni;
      if (rowsel.empty()) {
        ni = zero_sets[r];
      } else {
        std::set_intersection(inter.begin(), inter.end(), zero_sets[r].begin(),
                              zero_sets[r].end(), std::back_inserter(ni));
      }
      if (ni.empty()) continue;
      rowsel.push_back(r);
      rec(r + 1, std::move(ni));
      rowsel.pop_back();
    }
  };
  rec(0, {});

  if (transposed) std::swap(best.rows, best.cols);
  return best;
}

namespace patterns {

StructuralMatrix zero_block(int rows, int cols) {
  return StructuralMatrix::filled(rows, cols, Cell::Zero);
}

StructuralMatrix diagonal(int n) {
  StructuralMatrix d = StructuralMatrix::filled(n, n, Cell::Zero);
  for (int i = 0; i < n; ++i) d.set(i, i, Cell::Star);
  return d;
}

StructuralMatrix girth_a() {
  using enum Cell;
  return StructuralMatrix(2, 4, {Zero, Zero, Star, Star, Star, Star, Zero, Zero});
}

StructuralMatrix girth_b() {
  using enum Cell;
  return StructuralMatrix(2, 3, {Zero, Zero, Star, Star, Zero, Zero});
}

}  // namespace patterns

}  // namespace rees
