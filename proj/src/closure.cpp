#include "reesgraph/closure.hpp"

#include <algorithm>
#include <string>

namespace rees {

namespace {

std::vector<int> sorted_union(const std::vector<int>& base, const std::vector<bool>& extra) {
  std::vector<int> out = base;
  for (int v = 0; v < static_cast<int>(extra.size()); ++v)
    if (extra[v] && !std::binary_search(base.begin(), base.end(), v)) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ClosureRun run_closure(const StructuralMatrix& m, int row, int col) {
  if (row < 0 || row >= m.rows() || col < 0 || col >= m.cols())
    throw NotAZeroError("start cell (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                        ") is outside the matrix");
  if (!m.is_zero(row, col))
    throw NotAZeroError("start cell (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                        ") is not a zero entry");

  ClosureRun run;
  run.start_row = row;
  run.start_col = col;
  run.steps.push_back({{col}, {row}});

  std::vector<bool> in_rows(m.rows(), false), in_cols(m.cols(), false);
  in_rows[row] = true;
  in_cols[col] = true;

  for (;;) {
    // Mark zeros in the block's rows/columns that are not block entries.
    std::vector<bool> new_rows(m.rows(), false), new_cols(m.cols(), false);
    bool grew = false;
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        if (!m.is_zero(r, c)) continue;
        if (in_rows[r] && in_cols[c]) continue;  // already an entry of the block
        if (in_rows[r] || in_cols[c]) {
          if (!in_rows[r]) new_rows[r] = true;
          if (!in_cols[c]) new_cols[c] = true;
          grew = true;
        }
      }
    if (!grew) break;
    const ClosureStep& prev = run.steps.back();
    ClosureStep next{sorted_union(prev.cols, new_cols), sorted_union(prev.rows, new_rows)};
    for (int r = 0; r < m.rows(); ++r) in_rows[r] = in_rows[r] || new_rows[r];
    for (int c = 0; c < m.cols(); ++c) in_cols[c] = in_cols[c] || new_cols[c];
    run.steps.push_back(std::move(next));
  }
  return run;
}

std::vector<ClosureSubmatrix> all_closure_submatrices(const StructuralMatrix& m) {
  if (!has_zero(m)) throw NoZeroError("matrix has no zero entry");
  std::vector<ClosureSubmatrix> blocks;
  std::vector<bool> covered_row(m.rows(), false), covered_col(m.cols(), false);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      if (!m.is_zero(r, c)) continue;
      if (covered_row[r] && covered_col[c]) continue;
      ClosureRun run = run_closure(m, r, c);
      ClosureSubmatrix block{run.final_block().rows, run.final_block().cols};
      for (int br : block.rows) covered_row[br] = true;
      for (int bc : block.cols) covered_col[bc] = true;
      blocks.push_back(std::move(block));
    }
  return blocks;
}

std::vector<std::pair<int, int>> step_entries(const ClosureRun& run, int k) {
  if (k < 0 || k > run.z())
    throw InvalidOrderError("step index " + std::to_string(k) + " is out of range");
  std::vector<std::pair<int, int>> out;
  const ClosureStep& cur = run.steps[k];
  if (k == 0) {
    out.emplace_back(run.start_row, run.start_col);
    return out;
  }
  const ClosureStep& prev = run.steps[k - 1];
  auto in = [](const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
  };
  for (int r : cur.rows)
    for (int c : cur.cols)
      if (!(in(prev.rows, r) && in(prev.cols, c))) out.emplace_back(r, c);
  return out;
}

}  // namespace rees
