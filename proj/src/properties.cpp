#include "reesgraph/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace rees {

namespace {

void require_formula_input(const StructuralMatrix& m) {
  if (!has_zero(m))
    throw ZeroFreeError(
        "matrix has no zero entry; the zero-free case is the completely simple "
        "setting and is out of scope for the formula engine");
  if (!is_regular(m)) throw NotRegularError("matrix is not regular");
}

}  // namespace

ComponentDescriptor ComponentDescriptor::single(ClosureSubmatrix block) {
  ComponentDescriptor d;
  d.kind = Kind::Single;
  d.q = std::move(block);
  return d;
}

ComponentDescriptor ComponentDescriptor::pair(ClosureSubmatrix q, ClosureSubmatrix m) {
  ComponentDescriptor d;
  d.kind = Kind::Pair;
  d.q = std::move(q);
  d.m = std::move(m);
  return d;
}

ComponentDescriptor ComponentDescriptor::star(int col, int row) {
  ComponentDescriptor d;
  d.kind = Kind::Star;
  d.star_col = col;
  d.star_row = row;
  return d;
}

std::vector<std::pair<int, int>> ComponentDescriptor::cells() const {
  std::vector<std::pair<int, int>> out;
  switch (kind) {
    case Kind::Single:
      for (int c : q.cols)
        for (int r : q.rows) out.emplace_back(c, r);
      break;
    case Kind::Pair:
      for (int c : q.cols)
        for (int r : m.rows) out.emplace_back(c, r);
      for (int c : m.cols)
        for (int r : q.rows) out.emplace_back(c, r);
      break;
    case Kind::Star:
      out.emplace_back(star_col, star_row);
      break;
  }
  return out;
}

bool is_connected_formula(const StructuralMatrix& m) {
  require_formula_input(m);
  auto zeros = zero_cells(m);
  ClosureRun run = run_closure(m, zeros.front().first, zeros.front().second);
  const ClosureStep& final = run.final_block();
  return static_cast<int>(final.rows.size()) == m.rows() &&
         static_cast<int>(final.cols.size()) == m.cols();
}

std::vector<ComponentDescriptor> classify_components(const StructuralMatrix& m) {
  require_formula_input(m);
  std::vector<ClosureSubmatrix> blocks = all_closure_submatrices(m);

  // Singles ordered by least column label.
  std::sort(blocks.begin(), blocks.end(), [](const ClosureSubmatrix& a, const ClosureSubmatrix& b) {
    return a.cols.front() < b.cols.front();
  });

  std::vector<ComponentDescriptor> out;
  for (const auto& b : blocks) out.push_back(ComponentDescriptor::single(b));
  for (size_t a = 0; a < blocks.size(); ++a)
    for (size_t b = a + 1; b < blocks.size(); ++b)
      out.push_back(ComponentDescriptor::pair(blocks[a], blocks[b]));

  std::vector<int> row_zeros = row_zero_counts(m);
  std::vector<int> col_zeros = col_zero_counts(m);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (row_zeros[r] == 0 || col_zeros[c] == 0) out.push_back(ComponentDescriptor::star(c, r));
  return out;
}

namespace {

// The k x l block of m named by the closure submatrix, with block-local zero
// bookkeeping.
struct BlockView {
  const StructuralMatrix& m;
  const ClosureSubmatrix& b;

  int rows() const { return static_cast<int>(b.rows.size()); }
  int cols() const { return static_cast<int>(b.cols.size()); }
  bool is_zero(int r, int c) const { return m.is_zero(b.rows[r], b.cols[c]); }

  bool all_zero() const {
    for (int r = 0; r < rows(); ++r)
      for (int c = 0; c < cols(); ++c)
        if (!is_zero(r, c)) return false;
    return true;
  }
};

// Conditions b) and c) of the diameter-2 characterization: every two rows of
// the block share a zero column and every two columns share a zero row.
bool common_zero_conditions(const BlockView& v) {
  for (int r1 = 0; r1 < v.rows(); ++r1)
    for (int r2 = r1 + 1; r2 < v.rows(); ++r2) {
      bool found = false;
      for (int c = 0; c < v.cols() && !found; ++c)
        if (v.is_zero(r1, c) && v.is_zero(r2, c)) found = true;
      if (!found) return false;
    }
  for (int c1 = 0; c1 < v.cols(); ++c1)
    for (int c2 = c1 + 1; c2 < v.cols(); ++c2) {
      bool found = false;
      for (int r = 0; r < v.rows() && !found; ++r)
        if (v.is_zero(r, c1) && v.is_zero(r, c2)) found = true;
      if (!found) return false;
    }
  return true;
}

long single_block_diameter(const ClosureSubmatrix& block, const StructuralMatrix& m,
                           const GroupProfile& g) {
  BlockView view{m, block};
  bool singleton = view.rows() == 1 && view.cols() == 1;
  if (singleton && !g.trivial) return 1;
  if (view.all_zero()) return (singleton && g.trivial) ? 0 : 1;
  if (common_zero_conditions(view)) return 2;
  long best = 0;
  for (int r : block.rows)
    for (int c : block.cols)
      if (m.is_zero(r, c)) best = std::max(best, static_cast<long>(run_closure(m, r, c).z()));
  return best;
}

void validate_descriptor(const ComponentDescriptor& d, const StructuralMatrix& m) {
  auto check_block = [&m](const ClosureSubmatrix& b) {
    if (b.rows.empty() || b.cols.empty()) return false;
    for (int r : b.rows)
      if (r < 0 || r >= m.rows()) return false;
    for (int c : b.cols)
      if (c < 0 || c >= m.cols()) return false;
    // A closure block reproduces itself from any of its zeros.
    for (int r : b.rows)
      for (int c : b.cols)
        if (m.is_zero(r, c)) {
          ClosureRun run = run_closure(m, r, c);
          return run.final_block().rows == b.rows && run.final_block().cols == b.cols;
        }
    return false;
  };
  switch (d.kind) {
    case ComponentDescriptor::Kind::Single:
      if (!check_block(d.q)) throw DescriptorMismatchError("descriptor block is not a closure submatrix of this matrix");
      break;
    case ComponentDescriptor::Kind::Pair:
      if (!check_block(d.q) || !check_block(d.m))
        throw DescriptorMismatchError("descriptor blocks are not closure submatrices of this matrix");
      break;
    case ComponentDescriptor::Kind::Star: {
      if (d.star_row < 0 || d.star_row >= m.rows() || d.star_col < 0 || d.star_col >= m.cols())
        throw DescriptorMismatchError("star cell is outside the matrix");
      std::vector<int> rz = row_zero_counts(m), cz = col_zero_counts(m);
      if (rz[d.star_row] != 0 && cz[d.star_col] != 0)
        throw DescriptorMismatchError("star cell's row and column both contain zeros");
      break;
    }
  }
}

}  // namespace

long component_diameter(const ComponentDescriptor& d, const StructuralMatrix& m,
                        const GroupProfile& g) {
  require_formula_input(m);
  validate_descriptor(d, m);
  switch (d.kind) {
    case ComponentDescriptor::Kind::Single:
      return single_block_diameter(d.q, m, g);
    case ComponentDescriptor::Kind::Pair: {
      bool singletons = d.q.rows.size() == 1 && d.q.cols.size() == 1 && d.m.rows.size() == 1 &&
                        d.m.cols.size() == 1;
      if (singletons && g.abelian && !g.trivial) return 1;
      return 1 + std::max(single_block_diameter(d.q, m, g), single_block_diameter(d.m, m, g));
    }
    case ComponentDescriptor::Kind::Star:
      if (g.trivial) return 0;
      return g.abelian ? 1 : 2;
  }
  return 0;
}

ExtNat diameter_formula(const StructuralMatrix& m, const GroupProfile& g) {
  require_formula_input(m);
  std::vector<ComponentDescriptor> components = classify_components(m);
  if (components.size() > 1) return ExtNat::inf();
  return ExtNat::of(component_diameter(components.front(), m, g));
}

// Closure-run starts that survive both reductions, valid once the block's
// diameter is known to be at least 3: drop zeros covered by an all-zero row
// or column (the constant 3 stays in the running maximum) and merge zeros
// lying in equal rows or equal columns of the block.
std::vector<std::pair<int, int>> fastpath_representatives(const ClosureSubmatrix& block,
                                                          const StructuralMatrix& m) {
  int k = static_cast<int>(block.rows.size());
  int l = static_cast<int>(block.cols.size());
  BlockView view{m, block};

  // Strategy a: the row whose zero set is largest; dropping its zero columns
  // removes every zero in those columns. Strategy b is the symmetric column
  // choice. Apply whichever drops more zeros.
  auto zeros_in_cols = [&](const std::set<int>& cols) {
    long n = 0;
    for (int r = 0; r < k; ++r)
      for (int c : cols)
        if (view.is_zero(r, c)) ++n;
    return n;
  };
  auto zeros_in_rows = [&](const std::set<int>& rows) {
    long n = 0;
    for (int r : rows)
      for (int c = 0; c < l; ++c)
        if (view.is_zero(r, c)) ++n;
    return n;
  };

  std::set<int> best_cols, best_rows;
  for (int r = 0; r < k; ++r) {
    std::set<int> cols;
    for (int c = 0; c < l; ++c)
      if (view.is_zero(r, c)) cols.insert(c);
    if (zeros_in_cols(cols) > zeros_in_cols(best_cols)) best_cols = std::move(cols);
  }
  for (int c = 0; c < l; ++c) {
    std::set<int> rows;
    for (int r = 0; r < k; ++r)
      if (view.is_zero(r, c)) rows.insert(r);
    if (zeros_in_rows(rows) > zeros_in_rows(best_rows)) best_rows = std::move(rows);
  }
  bool drop_cols = zeros_in_cols(best_cols) >= zeros_in_rows(best_rows);

  std::vector<std::pair<int, int>> kept;  // block-local (r, c)
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < l; ++c) {
      if (!view.is_zero(r, c)) continue;
      if (drop_cols ? best_cols.count(c) > 0 : best_rows.count(r) > 0) continue;
      kept.emplace_back(r, c);
    }

  // Merge zeros whose rows (same column) or columns (same row) are equal in
  // the block; their z-indices coincide.
  auto row_pattern = [&](int r) {
    std::vector<bool> p(l);
    for (int c = 0; c < l; ++c) p[c] = view.is_zero(r, c);
    return p;
  };
  auto col_pattern = [&](int c) {
    std::vector<bool> p(k);
    for (int r = 0; r < k; ++r) p[r] = view.is_zero(r, c);
    return p;
  };
  std::map<std::pair<int, std::vector<bool>>, int> row_groups;  // (col, row pattern) -> rep
  std::map<std::pair<int, std::vector<bool>>, int> col_groups;  // (row, col pattern) -> rep
  std::vector<int> parent(kept.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (size_t idx = 0; idx < kept.size(); ++idx) {
    auto [r, c] = kept[idx];
    auto rk = std::make_pair(c, row_pattern(r));
    auto ck = std::make_pair(r, col_pattern(c));
    if (auto it = row_groups.find(rk); it != row_groups.end())
      parent[find(static_cast<int>(idx))] = find(it->second);
    else
      row_groups.emplace(rk, static_cast<int>(idx));
    if (auto it = col_groups.find(ck); it != col_groups.end())
      parent[find(static_cast<int>(idx))] = find(it->second);
    else
      col_groups.emplace(ck, static_cast<int>(idx));
  }

  std::vector<std::pair<int, int>> reps;
  for (size_t idx = 0; idx < kept.size(); ++idx) {
    if (find(static_cast<int>(idx)) != static_cast<int>(idx)) continue;
    auto [r, c] = kept[idx];
    reps.emplace_back(block.rows[r], block.cols[c]);
  }
  return reps;
}

namespace {

long fast_single_block_diameter(const ClosureSubmatrix& block, const StructuralMatrix& m,
                                const GroupProfile& g) {
  BlockView view{m, block};
  bool singleton = view.rows() == 1 && view.cols() == 1;
  if (singleton && !g.trivial) return 1;
  if (view.all_zero()) return (singleton && g.trivial) ? 0 : 1;
  if (common_zero_conditions(view)) return 2;
  long best = 3;
  for (auto [r, c] : fastpath_representatives(block, m))
    best = std::max(best, static_cast<long>(run_closure(m, r, c).z()));
  return best;
}

}  // namespace

ExtNat diameter_fastpath(const StructuralMatrix& m, const GroupProfile& g) {
  require_formula_input(m);
  std::vector<ComponentDescriptor> components = classify_components(m);
  if (components.size() > 1) return ExtNat::inf();
  return ExtNat::of(fast_single_block_diameter(components.front().q, m, g));
}

long clique_number_formula(const StructuralMatrix& m, const GroupProfile& g) {
  require_formula_input(m);
  if (g.abelian && contains_pattern(m, patterns::diagonal(3)) &&
      !contains_pattern(m, patterns::zero_block(1, 3)) &&
      !contains_pattern(m, patterns::zero_block(3, 1)) &&
      !contains_pattern(m, patterns::zero_block(2, 2)))
    return 3 * g.order;
  if (g.abelian && contains_pattern(m, patterns::diagonal(2)) &&
      !contains_pattern(m, patterns::zero_block(1, 2)) &&
      !contains_pattern(m, patterns::zero_block(2, 1)))
    return 2 * g.order;
  return g.order * max_zero_block(m).area;
}

ExtNat girth_formula(const StructuralMatrix& m, const GroupProfile& g) {
  require_formula_input(m);
  if (g.order >= 3) return ExtNat::of(3);
  if (g.order == 2) return zero_cells(m).size() >= 2 ? ExtNat::of(3) : ExtNat::inf();
  if (contains_pattern(m, patterns::diagonal(3)) ||
      contains_pattern(m, patterns::zero_block(1, 3)) ||
      contains_pattern(m, patterns::zero_block(3, 1)) ||
      contains_pattern(m, patterns::zero_block(2, 2)))
    return ExtNat::of(3);
  StructuralMatrix a = patterns::girth_a();
  StructuralMatrix b = patterns::girth_b();
  if (contains_pattern(m, a) || contains_pattern(m, transpose(a)) || contains_pattern(m, b) ||
      contains_pattern(m, transpose(b)))
    return ExtNat::of(4);
  return ExtNat::inf();
}

namespace {

long block_zero_count(const ClosureSubmatrix& b, const StructuralMatrix& m) {
  long n = 0;
  for (int r : b.rows)
    for (int c : b.cols)
      if (m.is_zero(r, c)) ++n;
  return n;
}

// Degree-bound contribution of one closure block: c*r when the block is
// all-zero or some star sits at the crossing of a busiest column and a
// busiest row, c*r - 1 otherwise.
long degree_bound_term(const ClosureSubmatrix& b, const StructuralMatrix& m) {
  BlockView view{m, b};
  int k = view.rows(), l = view.cols();
  std::vector<long> row_z(k, 0), col_z(l, 0);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < l; ++c)
      if (view.is_zero(r, c)) {
        ++row_z[r];
        ++col_z[c];
      }
  long r_max = *std::max_element(row_z.begin(), row_z.end());
  long c_max = *std::max_element(col_z.begin(), col_z.end());
  if (view.all_zero()) return c_max * r_max;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < l; ++c)
      if (!view.is_zero(r, c) && row_z[r] == r_max && col_z[c] == c_max) return c_max * r_max;
  return c_max * r_max - 1;
}

}  // namespace

long chromatic_upper_edges(const StructuralMatrix& m, const GroupProfile& g) {
  require_formula_input(m);
  std::vector<ClosureSubmatrix> blocks = all_closure_submatrices(m);
  if (is_connected_formula(m))
    return static_cast<long>(zero_cells(m).size()) * g.order;
  if (blocks.size() == 1) return block_zero_count(blocks.front(), m) * g.order;
  long best = 2;
  for (const auto& b : blocks) best = std::max(best, block_zero_count(b, m));
  return best * g.order;
}

long chromatic_upper_degree(const StructuralMatrix& m, const GroupProfile& g) {
  require_formula_input(m);
  std::vector<ClosureSubmatrix> blocks = all_closure_submatrices(m);
  if (is_connected_formula(m)) return degree_bound_term(blocks.front(), m) * g.order;
  if (blocks.size() == 1) return degree_bound_term(blocks.front(), m) * g.order;
  long best = 2;
  for (const auto& b : blocks) best = std::max(best, degree_bound_term(b, m));
  return best * g.order;
}

std::optional<int> knit_degree_formula(const StructuralMatrix& m, const GroupProfile& g) {
  require_formula_input(m);
  if (g.order > 1 || contains_pattern(m, patterns::zero_block(1, 2)) ||
      contains_pattern(m, patterns::zero_block(2, 1)))
    return 1;
  return std::nullopt;
}

AnalysisReport analyze(const StructuralMatrix& m, const GroupProfile& g) {
  require_formula_input(m);
  AnalysisReport report;
  report.components = classify_components(m);
  report.connected = report.components.size() == 1;
  for (const auto& d : report.components)
    report.component_diameters.push_back(component_diameter(d, m, g));
  report.diameter = report.connected ? ExtNat::of(report.component_diameters.front())
                                     : ExtNat::inf();
  report.clique_number = clique_number_formula(m, g);
  report.girth = girth_formula(m, g);
  report.chromatic_lower = report.clique_number;
  report.chromatic_upper_edges = chromatic_upper_edges(m, g);
  report.chromatic_upper_degree = chromatic_upper_degree(m, g);
  report.knit_degree = knit_degree_formula(m, g);
  return report;
}

}  // namespace rees
