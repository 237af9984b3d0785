#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "reesgraph/closure.hpp"
#include "reesgraph/generators.hpp"
#include "reesgraph/oracle.hpp"
#include "test_support.hpp"

using namespace rees;
using test::mat;

namespace {

std::vector<int> labels(std::vector<int> v) {
  for (int& x : v) ++x;
  return v;
}

}  // namespace

TEST_CASE("worked 6x8 example, start at row 4 column 6") {
  StructuralMatrix ex = test::example_6x8();
  ClosureRun run = run_closure(ex, 3, 5);
  CHECK(run.z() == 3);
  CHECK(labels(run.final_block().cols) == std::vector<int>{1, 3, 4, 6, 7});
  CHECK(labels(run.final_block().rows) == std::vector<int>{1, 3, 4});

  // Intermediate blocks as printed: Q1 = {1,3,6,7} x {3,4}, Q2 adds row 1.
  CHECK(labels(run.steps[1].cols) == std::vector<int>{1, 3, 6, 7});
  CHECK(labels(run.steps[1].rows) == std::vector<int>{3, 4});
  CHECK(labels(run.steps[2].cols) == std::vector<int>{1, 3, 6, 7});
  CHECK(labels(run.steps[2].rows) == std::vector<int>{1, 3, 4});
}

TEST_CASE("worked 6x8 example, start at row 2 column 2") {
  ClosureRun run = run_closure(test::example_6x8(), 1, 1);
  CHECK(run.z() == 1);
  CHECK(labels(run.final_block().cols) == std::vector<int>{2, 5, 8});
  CHECK(labels(run.final_block().rows) == std::vector<int>{2, 5});
}

TEST_CASE("single zero cell") {
  ClosureRun run = run_closure(mat("0"), 0, 0);
  CHECK(run.z() == 0);
  CHECK(run.final_block().cols == std::vector<int>{0});
  CHECK(run.final_block().rows == std::vector<int>{0});
}

TEST_CASE("starting on a star is rejected") {
  CHECK_THROWS_AS(run_closure(test::example_6x8(), 0, 1), NotAZeroError);
  CHECK_THROWS_AS(run_closure(mat("0x/x0"), 0, 5), NotAZeroError);
}

TEST_CASE("all closure submatrices of the 6x8 example") {
  std::vector<ClosureSubmatrix> blocks = all_closure_submatrices(test::example_6x8());
  REQUIRE(blocks.size() == 2);
  CHECK(labels(blocks[0].cols) == std::vector<int>{1, 3, 4, 6, 7});
  CHECK(labels(blocks[0].rows) == std::vector<int>{1, 3, 4});
  CHECK(labels(blocks[1].cols) == std::vector<int>{2, 5, 8});
  CHECK(labels(blocks[1].rows) == std::vector<int>{2, 5});
}

TEST_CASE("all-zero matrix is one block; diagonal pattern splits") {
  std::vector<ClosureSubmatrix> whole = all_closure_submatrices(mat("00/00"));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].rows == std::vector<int>{0, 1});
  CHECK(whole[0].cols == std::vector<int>{0, 1});

  std::vector<ClosureSubmatrix> split = all_closure_submatrices(mat("x0/0x"));
  REQUIRE(split.size() == 2);
  for (const auto& b : split) {
    CHECK(b.rows.size() == 1);
    CHECK(b.cols.size() == 1);
  }
}

TEST_CASE("step entries") {
  StructuralMatrix ex = test::example_6x8();
  ClosureRun run = run_closure(ex, 3, 5);
  CHECK(step_entries(run, 0) == std::vector<std::pair<int, int>>{{3, 5}});

  // Step 1 selects the block {3,4} x {1,3,6,7} minus the start cell.
  std::set<std::pair<int, int>> step1(step_entries(run, 1).begin(), step_entries(run, 1).end());
  std::set<std::pair<int, int>> expected;
  for (int r : {2, 3})
    for (int c : {0, 2, 5, 6})
      if (!(r == 3 && c == 5)) expected.insert({r, c});
  CHECK(step1 == expected);

  CHECK_THROWS_AS(step_entries(run, 4), InvalidOrderError);
  CHECK_THROWS_AS(step_entries(run, -1), InvalidOrderError);

  ClosureRun tiny = run_closure(mat("0"), 0, 0);
  CHECK(step_entries(tiny, 0) == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("determinism") {
  StructuralMatrix ex = test::example_6x8();
  ClosureRun a = run_closure(ex, 2, 6);
  ClosureRun b = run_closure(ex, 2, 6);
  REQUIRE(a.steps.size() == b.steps.size());
  for (size_t k = 0; k < a.steps.size(); ++k) {
    CHECK(a.steps[k].rows == b.steps[k].rows);
    CHECK(a.steps[k].cols == b.steps[k].cols);
  }
}

TEST_CASE("the final block does not depend on the starting zero") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    StructuralMatrix m = random_regular_with_zeros(2 + static_cast<int>(rng() % 4),
                                                   2 + static_cast<int>(rng() % 4), 0.4, rng());
    for (const auto& block : all_closure_submatrices(m)) {
      ClosureSubmatrix seen = block;
      for (int r : block.rows)
        for (int c : block.cols)
          if (m.is_zero(r, c)) {
            ClosureRun run = run_closure(m, r, c);
            CHECK(run.final_block().rows == seen.rows);
            CHECK(run.final_block().cols == seen.cols);
          }
    }
  }
}

TEST_CASE("blocks are disjoint and their zeros partition all zeros") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    StructuralMatrix m = random_regular_with_zeros(2 + static_cast<int>(rng() % 5),
                                                   2 + static_cast<int>(rng() % 5), 0.35, rng());
    std::vector<ClosureSubmatrix> blocks = all_closure_submatrices(m);
    std::set<int> rows_seen, cols_seen;
    long zeros_in_blocks = 0;
    for (const auto& b : blocks) {
      for (int r : b.rows) {
        CHECK(rows_seen.insert(r).second);
      }
      for (int c : b.cols) {
        CHECK(cols_seen.insert(c).second);
      }
      for (int r : b.rows)
        for (int c : b.cols)
          if (m.is_zero(r, c)) ++zeros_in_blocks;
    }
    CHECK(zeros_in_blocks == static_cast<long>(zero_cells(m).size()));
  }
}

TEST_CASE("every row and column of every intermediate block holds a zero") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    StructuralMatrix m = random_regular_with_zeros(3, 4, 0.4, rng());
    for (auto [r0, c0] : zero_cells(m)) {
      ClosureRun run = run_closure(m, r0, c0);
      for (const auto& step : run.steps) {
        for (int r : step.rows) {
          bool found = false;
          for (int c : step.cols) found = found || m.is_zero(r, c);
          CHECK(found);
        }
        for (int c : step.cols) {
          bool found = false;
          for (int r : step.rows) found = found || m.is_zero(r, c);
          CHECK(found);
        }
      }
    }
  }
}

TEST_CASE("step index equals distance in the simplified graph") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    StructuralMatrix m = random_regular_with_zeros(3, 4, 0.4, rng());
    SimpleGraph graph = build_simplified_graph(m);
    for (auto [r0, c0] : zero_cells(m)) {
      ClosureRun run = run_closure(m, r0, c0);
      int source = simplified_vertex_id(m, c0, r0);
      // BFS distances from the start vertex.
      std::vector<int> dist(graph.size(), -1);
      std::vector<int> queue{source};
      dist[source] = 0;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v = 0; v < graph.size(); ++v)
          if (graph.adjacent(u, v) && dist[v] < 0) {
            dist[v] = dist[u] + 1;
            queue.push_back(v);
          }
      }
      for (int k = 0; k <= run.z(); ++k)
        for (auto [r, c] : step_entries(run, k))
          CHECK(dist[simplified_vertex_id(m, c, r)] == k);
      // Conversely, every vertex at distance k is selected at step k.
      for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r) {
          int d = dist[simplified_vertex_id(m, c, r)];
          if (d < 0) continue;
          auto entries = step_entries(run, d);
          CHECK(std::find(entries.begin(), entries.end(), std::make_pair(r, c)) != entries.end());
        }
    }
  }
}
