#include "reesgraph/verify.hpp"

#include <algorithm>
#include <set>

#include "reesgraph/oracle.hpp"

namespace rees {

namespace {

std::set<int> descriptor_vertex_ids(const ComponentDescriptor& d, const FiniteGroup& group,
                                    const SandwichMatrix& p) {
  std::set<int> ids;
  for (auto [col, row] : d.cells())
    for (int g = 0; g < group.order(); ++g)
      ids.insert(commuting_vertex_id(group, p, col, g, row));
  return ids;
}

}  // namespace

std::vector<std::string> oracle_crosscheck(const Instance& instance) {
  const FiniteGroup& group = instance.group;
  const SandwichMatrix& p = instance.sandwich;
  StructuralMatrix m = structural(p);
  GroupProfile profile = group.profile();

  std::vector<std::string> mismatches;
  auto expect = [&mismatches](bool ok, const std::string& field, const std::string& detail) {
    if (!ok) mismatches.push_back(field + ": " + detail);
  };

  AnalysisReport report = analyze(m, profile);
  SimpleGraph graph = build_commuting_graph(group, p);
  std::vector<std::vector<int>> oracle_components = bfs_components(graph);

  expect(report.connected == (oracle_components.size() == 1), "connected",
         "formula " + std::to_string(report.connected) + ", oracle " +
             std::to_string(oracle_components.size()) + " components");

  // Component vertex sets must match exactly, and the matched components
  // must agree on diameter.
  std::vector<std::set<int>> oracle_sets;
  for (const auto& comp : oracle_components) oracle_sets.emplace_back(comp.begin(), comp.end());
  if (report.components.size() != oracle_sets.size()) {
    expect(false, "components",
           "formula yields " + std::to_string(report.components.size()) + ", oracle " +
               std::to_string(oracle_sets.size()));
  } else {
    for (size_t k = 0; k < report.components.size(); ++k) {
      std::set<int> ids = descriptor_vertex_ids(report.components[k], group, p);
      auto it = std::find(oracle_sets.begin(), oracle_sets.end(), ids);
      if (it == oracle_sets.end()) {
        expect(false, "components", "descriptor " + std::to_string(k) + " matches no oracle component");
        continue;
      }
      std::vector<int> comp(it->begin(), it->end());
      ExtNat oracle_diam = bfs_diameter(graph, comp);
      expect(!oracle_diam.infinite && oracle_diam.value == report.component_diameters[k],
             "component_diameter",
             "descriptor " + std::to_string(k) + ": formula " +
                 std::to_string(report.component_diameters[k]) + ", oracle " +
                 to_string(oracle_diam));
    }
  }

  ExtNat oracle_diameter = bfs_diameter(graph);
  expect(report.diameter == oracle_diameter, "diameter",
         "formula " + to_string(report.diameter) + ", oracle " + to_string(oracle_diameter));

  ExtNat fast = diameter_fastpath(m, profile);
  expect(fast == report.diameter, "diameter_fastpath",
         "fastpath " + to_string(fast) + ", formula " + to_string(report.diameter));

  int oracle_clique = max_clique(graph);
  expect(report.clique_number == oracle_clique, "clique_number",
         "formula " + std::to_string(report.clique_number) + ", oracle " +
             std::to_string(oracle_clique));

  ExtNat oracle_girth = shortest_cycle(graph);
  expect(report.girth == oracle_girth, "girth",
         "formula " + to_string(report.girth) + ", oracle " + to_string(oracle_girth));

  std::vector<std::vector<int>> left_paths = find_left_paths(group, p, 3);
  bool has_length1 = std::any_of(left_paths.begin(), left_paths.end(),
                                 [](const std::vector<int>& path) { return path.size() == 2; });
  if (report.knit_degree) {
    expect(*report.knit_degree == 1 && has_length1, "knit_degree",
           "formula 1, oracle shortest " + std::string(has_length1 ? "1" : "absent"));
  } else {
    expect(left_paths.empty(), "knit_degree",
           "formula none, oracle found " + std::to_string(left_paths.size()) + " left paths");
  }

  if (graph.size() <= kChromaticVertexGuard) {
    int chromatic = exact_chromatic(graph);
    long upper = std::min(report.chromatic_upper_edges, report.chromatic_upper_degree);
    expect(report.chromatic_lower <= chromatic && chromatic <= upper, "chromatic_bounds",
           "exact " + std::to_string(chromatic) + " outside [" +
               std::to_string(report.chromatic_lower) + ", " + std::to_string(upper) + "]");
  }

  // Degree identity on the simplified graph.
  SimpleGraph simplified = build_simplified_graph(m);
  std::vector<int> row_z = row_zero_counts(m), col_z = col_zero_counts(m);
  for (int i = 0; i < m.cols(); ++i)
    for (int lam = 0; lam < m.rows(); ++lam) {
      int v = simplified_vertex_id(m, i, lam);
      int degree = 0;
      for (int u = 0; u < simplified.size(); ++u)
        if (simplified.adjacent(v, u)) ++degree;
      int want = col_z[i] * row_z[lam] - (m.is_zero(lam, i) ? 1 : 0);
      expect(degree == want, "simplified_degree",
             "(" + std::to_string(i + 1) + "," + std::to_string(lam + 1) + "): graph " +
                 std::to_string(degree) + ", formula " + std::to_string(want));
    }

  // Replacing star entries never changes the graph up to the explicit map.
  if (group.order() >= 1) {
    int replacement = group.order() > 1 ? (group.identity() + 1) % group.order() : group.identity();
    std::vector<int> cells;
    for (int r = 0; r < p.rows(); ++r)
      for (int c = 0; c < p.cols(); ++c)
        cells.push_back(p.is_zero(r, c) ? SandwichMatrix::kZero : replacement);
    SandwichMatrix q(p.rows(), p.cols(), std::move(cells), group);
    try {
      psi_isomorphism(p, q, group);
    } catch (const PreconditionError& e) {
      expect(false, "psi_isomorphism", e.what());
    }
  }

  return mismatches;
}

}  // namespace rees
