#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "reesgraph/generators.hpp"
#include "reesgraph/oracle.hpp"
#include "reesgraph/properties.hpp"
#include "reesgraph/verify.hpp"
#include "test_support.hpp"

using namespace rees;
using test::identity_sandwich;
using test::mat;

namespace {

const GroupProfile kTrivial{1, true, true};
const GroupProfile kOrder2{2, true, false};
const GroupProfile kOrder4{4, true, false};
const GroupProfile kDihedral3{6, false, false};

ComponentDescriptor find_single(const std::vector<ComponentDescriptor>& cs, int first_col_label) {
  for (const auto& d : cs)
    if (d.kind == ComponentDescriptor::Kind::Single && d.q.cols.front() == first_col_label - 1)
      return d;
  REQUIRE(false);
  return cs.front();
}

}  // namespace

TEST_CASE("connectedness from a single closure run") {
  CHECK_FALSE(is_connected_formula(test::example_6x8()));
  CHECK(is_connected_formula(banded_diameter_family(2)));
  CHECK_THROWS_AS(is_connected_formula(mat("0")), NotRegularError);
  CHECK_THROWS_AS(is_connected_formula(mat("xx/xx")), ZeroFreeError);
}

TEST_CASE("component classification of the 6x8 example") {
  StructuralMatrix ex = test::example_6x8();
  std::vector<ComponentDescriptor> cs = classify_components(ex);
  REQUIRE(cs.size() == 11);

  int singles = 0, pairs = 0, stars = 0;
  for (const auto& d : cs) {
    switch (d.kind) {
      case ComponentDescriptor::Kind::Single: ++singles; break;
      case ComponentDescriptor::Kind::Pair: ++pairs; break;
      case ComponentDescriptor::Kind::Star: ++stars; break;
    }
  }
  CHECK(singles == 2);
  CHECK(pairs == 1);
  CHECK(stars == 8);  // row 6 has no zeros, one star cell per column

  // Cells of all descriptors partition I x Lambda.
  std::set<std::pair<int, int>> seen;
  for (const auto& d : cs)
    for (auto cell : d.cells()) CHECK(seen.insert(cell).second);
  CHECK(seen.size() == static_cast<size_t>(ex.cols() * ex.rows()));
}

TEST_CASE("component classification of small patterns") {
  // Connected: a single descriptor covering everything.
  std::vector<ComponentDescriptor> connected = classify_components(banded_diameter_family(2));
  REQUIRE(connected.size() == 1);
  CHECK(connected[0].kind == ComponentDescriptor::Kind::Single);

  // Diagonal 2x2: two singleton blocks plus their pair, no star cells.
  std::vector<ComponentDescriptor> split = classify_components(mat("x0/0x"));
  REQUIRE(split.size() == 3);
  CHECK(split[0].kind == ComponentDescriptor::Kind::Single);
  CHECK(split[1].kind == ComponentDescriptor::Kind::Single);
  CHECK(split[2].kind == ComponentDescriptor::Kind::Pair);
  std::set<std::pair<int, int>> seen;
  for (const auto& d : split)
    for (auto cell : d.cells()) CHECK(seen.insert(cell).second);
  CHECK(seen.size() == 4);
}

TEST_CASE("component diameters of the 6x8 example") {
  StructuralMatrix ex = test::example_6x8();
  std::vector<ComponentDescriptor> cs = classify_components(ex);

  ComponentDescriptor q = find_single(cs, 1);  // cols {1,3,4,6,7}
  ComponentDescriptor m = find_single(cs, 2);  // cols {2,5,8}
  for (const auto& profile : {kTrivial, kOrder2, kDihedral3}) {
    CHECK(component_diameter(q, ex, profile) == 3);
    CHECK(component_diameter(m, ex, profile) == 2);
  }
  for (const auto& d : cs) {
    if (d.kind == ComponentDescriptor::Kind::Pair) {
      CHECK(component_diameter(d, ex, kTrivial) == 4);  // 1 + max{3, 2}
    }
    if (d.kind == ComponentDescriptor::Kind::Star) {
      CHECK(component_diameter(d, ex, kTrivial) == 0);
      CHECK(component_diameter(d, ex, kOrder2) == 1);
      CHECK(component_diameter(d, ex, kDihedral3) == 2);
    }
  }
}

TEST_CASE("pair of singleton blocks over a non-trivial abelian group") {
  StructuralMatrix d2 = mat("x0/0x");
  std::vector<ComponentDescriptor> cs = classify_components(d2);
  const ComponentDescriptor& pair = cs[2];
  REQUIRE(pair.kind == ComponentDescriptor::Kind::Pair);
  CHECK(component_diameter(pair, d2, kOrder2) == 1);   // all four sets singletons, abelian
  CHECK(component_diameter(pair, d2, kTrivial) == 1);  // 1 + max{0,0}
  CHECK(component_diameter(pair, d2, kDihedral3) == 2);  // 1 + max{1,1}
  CHECK(component_diameter(cs[0], d2, kTrivial) == 0);
  CHECK(component_diameter(cs[0], d2, kOrder2) == 1);
}

TEST_CASE("descriptors from another matrix are rejected") {
  std::vector<ComponentDescriptor> cs = classify_components(mat("x0/0x"));
  CHECK_THROWS_AS(component_diameter(cs[0], test::example_6x8(), kTrivial),
                  DescriptorMismatchError);
  CHECK_THROWS_AS(component_diameter(ComponentDescriptor::star(0, 0), mat("0x/x0"), kTrivial),
                  DescriptorMismatchError);
}

TEST_CASE("global diameter") {
  CHECK(diameter_formula(test::example_6x8(), kTrivial) == ExtNat::inf());
  for (int n = 2; n <= 6; ++n)
    for (const auto& profile : {kTrivial, kOrder2, kDihedral3})
      CHECK(diameter_formula(banded_diameter_family(n), profile) == ExtNat::of(n));

  // Diagonal 3x3 with the trivial group, checked against graph distance.
  StructuralMatrix d3 = mat("x00/0x0/00x");
  ExtNat formula = diameter_formula(d3, kTrivial);
  FiniteGroup c1 = FiniteGroup::cyclic(1);
  ExtNat oracle = bfs_diameter(build_commuting_graph(c1, identity_sandwich(d3, c1)));
  CHECK(formula == oracle);
  CHECK(formula == ExtNat::of(2));
}

TEST_CASE("fastpath reductions reproduce the example arithmetic") {
  // On the 6x8 example the first block needs a single closure run after
  // dropping the zeros in the all-zero columns {1,3,4} and merging the equal
  // rows 3,4 and equal columns 6,7: one representative among rows {3,4} x
  // cols {6,7}, and max{3, z} = 3.
  StructuralMatrix ex = test::example_6x8();
  std::vector<ComponentDescriptor> cs = classify_components(ex);
  ComponentDescriptor q = find_single(cs, 1);
  std::vector<std::pair<int, int>> reps = fastpath_representatives(q.q, ex);
  CHECK(reps.size() <= 1);  // the naive path would run all 11 zeros
  for (auto [r, c] : reps) {
    CHECK(ex.is_zero(r, c));
    CHECK(run_closure(ex, r, c).z() == 3);
  }
  CHECK(component_diameter(q, ex, kTrivial) == 3);

  CHECK(diameter_fastpath(ex, kTrivial) == ExtNat::inf());
  for (int n = 2; n <= 6; ++n)
    CHECK(diameter_fastpath(banded_diameter_family(n), kTrivial) == ExtNat::of(n));
}

TEST_CASE("fastpath equals the direct formula on random instances") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    StructuralMatrix m = random_regular_with_zeros(2 + static_cast<int>(rng() % 5),
                                                   2 + static_cast<int>(rng() % 5),
                                                   0.2 + 0.4 * ((rng() % 100) / 100.0), rng());
    for (const auto& profile : {kTrivial, kOrder2, kDihedral3})
      CHECK(diameter_fastpath(m, profile) == diameter_formula(m, profile));
  }
}

TEST_CASE("clique number cases") {
  // Case 3 via the largest zero rectangle.
  for (int n = 1; n <= 6; ++n) CHECK(clique_number_formula(clique_family(n), kTrivial) == n);

  // Case 2: diagonal 2x2 with an abelian group of order 4.
  CHECK(clique_number_formula(mat("x0/0x"), kOrder4) == 8);

  // Case 1: diagonal 3x3 with an abelian group.
  CHECK(clique_number_formula(mat("x00/0x0/00x"), kOrder2) == 6);

  // Non-abelian groups fall through to the rectangle case.
  StructuralMatrix d3 = mat("x00/0x0/00x");
  CHECK(clique_number_formula(d3, kDihedral3) == 12);  // 6 * area 2
  FiniteGroup dihedral = FiniteGroup::dihedral(3);
  SimpleGraph graph = build_commuting_graph(dihedral, identity_sandwich(d3, dihedral));
  CHECK(max_clique(graph) == 12);

  CHECK_THROWS_AS(clique_number_formula(mat("xx/xx"), kTrivial), ZeroFreeError);
}

TEST_CASE("girth cases") {
  StructuralMatrix one_zero = mat("0x/xx");
  GroupProfile order3{3, true, false};
  CHECK(girth_formula(one_zero, order3) == ExtNat::of(3));
  CHECK(girth_formula(one_zero, kOrder2) == ExtNat::inf());
  CHECK(girth_formula(mat("x0/0x"), kOrder2) == ExtNat::of(3));

  CHECK(girth_formula(mat("x00/0x0/00x"), kTrivial) == ExtNat::of(3));   // diagonal 3
  CHECK(girth_formula(mat("000x/xxxx"), kTrivial) == ExtNat::of(3));     // zeros 1x3
  CHECK(girth_formula(mat("00x/00x/xxx"), kTrivial) == ExtNat::of(3));   // zeros 2x2
  CHECK(girth_formula(mat("00xx/xx00"), kTrivial) == ExtNat::of(4));     // pattern A
  CHECK(girth_formula(transpose(mat("00xx/xx00")), kTrivial) == ExtNat::of(4));
  CHECK(girth_formula(mat("00x/x00/xxx"), kTrivial) == ExtNat::of(4));   // pattern B
  CHECK(girth_formula(transpose(mat("00x/x00/xxx")), kTrivial) == ExtNat::of(4));
  CHECK(girth_formula(mat("x0/0x"), kTrivial) == ExtNat::inf());
  CHECK(girth_formula(one_zero, kTrivial) == ExtNat::inf());
}

TEST_CASE("chromatic upper bounds on the comparison matrices") {
  StructuralMatrix p = test::chromatic_p();
  StructuralMatrix pp = test::chromatic_p_prime();
  for (long order : {1L, 2L, 3L}) {
    GroupProfile g{order, true, order == 1};
    CHECK(chromatic_upper_edges(p, g) == 5 * order);
    CHECK(chromatic_upper_degree(p, g) == 4 * order);
    CHECK(chromatic_upper_edges(pp, g) == 4 * order);
    CHECK(chromatic_upper_degree(pp, g) == 5 * order);
  }
}

TEST_CASE("chromatic bounds in corner cases") {
  // Connected: the edge bound counts every zero of the matrix.
  StructuralMatrix banded = banded_diameter_family(2);
  CHECK(chromatic_upper_edges(banded, kOrder2) == 2 * 7);

  // Disconnected with one block: the bare block term, without the floor 2.
  StructuralMatrix single = mat("0x/xx");
  CHECK(chromatic_upper_edges(single, kTrivial) == 1);
  CHECK(chromatic_upper_degree(single, kTrivial) == 1);  // all-zero 1x1 block

  // All-zero block of shape 2x2 contributes c*r = 4.
  StructuralMatrix block = mat("00x/00x/xxx");
  CHECK(chromatic_upper_degree(block, kTrivial) == 4);

  // Two singleton blocks: the floor of 2 applies.
  CHECK(chromatic_upper_edges(mat("x0/0x"), kTrivial) == 2);
  CHECK(chromatic_upper_degree(mat("x0/0x"), kTrivial) == 2);
}

TEST_CASE("knit degree") {
  CHECK(knit_degree_formula(mat("x0/0x"), kTrivial) == std::nullopt);
  CHECK(knit_degree_formula(mat("x0/0x"), kOrder2) == 1);
  CHECK(knit_degree_formula(mat("00x/xxx"), kTrivial) == 1);
  CHECK(knit_degree_formula(transpose(mat("00x/xxx")), kTrivial) == 1);
  CHECK(knit_degree_formula(mat("0x/xx"), kTrivial) == std::nullopt);
}

TEST_CASE("analyze is internally consistent") {
  for (const auto& m : {test::example_6x8(), banded_diameter_family(3), clique_family(4),
                        mat("x0/0x"), test::chromatic_p()}) {
    for (const auto& profile : {kTrivial, kOrder2, kDihedral3}) {
      AnalysisReport r = analyze(m, profile);
      CHECK(r.components.size() == r.component_diameters.size());
      CHECK(r.connected == (r.components.size() == 1));
      if (r.connected) {
        CHECK_FALSE(r.diameter.infinite);
        CHECK(r.diameter.value >= 2);
      } else {
        CHECK(r.diameter.infinite);
      }
      CHECK(r.chromatic_lower == r.clique_number);
      CHECK(r.chromatic_lower <= std::min(r.chromatic_upper_edges, r.chromatic_upper_degree));
      if (r.knit_degree) CHECK(*r.knit_degree == 1);
    }
  }
}

TEST_CASE("every formula field agrees with the oracle on random instances") {
  std::mt19937_64 rng(59);
  std::vector<FiniteGroup> groups;
  for (int n = 1; n <= 6; ++n) groups.push_back(FiniteGroup::cyclic(n));
  groups.push_back(FiniteGroup::dihedral(3));

  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    StructuralMatrix m = random_regular_with_zeros(1 + static_cast<int>(rng() % 4),
                                                   2 + static_cast<int>(rng() % 3),
                                                   0.2 + 0.4 * ((rng() % 100) / 100.0), rng());
    const FiniteGroup& group = groups[rng() % groups.size()];
    std::vector<int> cells;
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        cells.push_back(m.is_zero(r, c) ? SandwichMatrix::kZero
                                        : static_cast<int>(rng() % group.order()));
    Instance instance{group, SandwichMatrix(m.rows(), m.cols(), std::move(cells), group)};
    std::vector<std::string> mismatches = oracle_crosscheck(instance);
    for (const auto& msg : mismatches) FAIL_CHECK(msg);
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("analysis of the comparison matrix with the trivial group") {
  AnalysisReport r = analyze(test::chromatic_p(), kTrivial);
  CHECK(r.chromatic_upper_edges == 5);
  CHECK(r.chromatic_upper_degree == 4);
  // The largest zero rectangle of that matrix has area 2, so the clique
  // number over the trivial group is 2 (cross-checked by clique search).
  FiniteGroup c1 = FiniteGroup::cyclic(1);
  SimpleGraph graph = build_commuting_graph(c1, identity_sandwich(test::chromatic_p(), c1));
  CHECK(r.clique_number == max_clique(graph));
  int chromatic = exact_chromatic(graph);
  CHECK(r.chromatic_lower <= chromatic);
  CHECK(chromatic <= std::min(r.chromatic_upper_edges, r.chromatic_upper_degree));
}
