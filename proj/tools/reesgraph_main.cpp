#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reesgraph/generators.hpp"
#include "reesgraph/instance.hpp"
#include "reesgraph/oracle.hpp"
#include "reesgraph/report.hpp"
#include "reesgraph/verify.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvalidMatrix = 3;
constexpr int kExitGuard = 4;
constexpr int kExitMismatch = 5;

void require_analyzable(const rees::StructuralMatrix& m) {
  if (!rees::has_zero(m))
    throw rees::ZeroFreeError(
        "matrix has no zero entry: this is the completely simple case, which the "
        "formula engine does not cover");
  if (!rees::is_regular(m)) throw rees::NotRegularError("matrix is not regular");
}

int cmd_analyze(const std::string& path, bool oracle, const std::string& dot_path) {
  rees::Instance instance = rees::parse_instance_file(path);
  rees::StructuralMatrix m = instance.structural_matrix();
  require_analyzable(m);

  rees::AnalysisReport report = rees::analyze(m, instance.group.profile());
  std::cout << rees::report_to_json(report);

  if (!dot_path.empty()) {
    rees::SimpleGraph commuting = rees::build_commuting_graph(instance.group, instance.sandwich);
    rees::SimpleGraph simplified = rees::build_simplified_graph(m);
    std::ofstream cdot(dot_path + ".commuting.dot");
    std::ofstream sdot(dot_path + ".simplified.dot");
    if (!cdot || !sdot) throw rees::ParseError("cannot write DOT output at '" + dot_path + "'");
    cdot << rees::to_dot(commuting, "commuting");
    sdot << rees::to_dot(simplified, "simplified");
  }

  if (oracle) {
    std::vector<std::string> mismatches = rees::oracle_crosscheck(instance);
    if (!mismatches.empty()) {
      for (const auto& msg : mismatches) std::cerr << "mismatch " << msg << "\n";
      return kExitMismatch;
    }
    std::cerr << "oracle cross-check passed\n";
  }
  return 0;
}

int cmd_closure(const std::string& path, int row_label, int col_label) {
  rees::Instance instance = rees::parse_instance_file(path);
  rees::StructuralMatrix m = instance.structural_matrix();
  require_analyzable(m);
  if (row_label < 1 || row_label > m.rows() || col_label < 1 || col_label > m.cols())
    throw rees::NotAZeroError("start cell is outside the matrix");

  rees::ClosureRun run = rees::run_closure(m, row_label - 1, col_label - 1);
  for (int k = 0; k <= run.z(); ++k) {
    const rees::ClosureStep& step = run.steps[k];
    std::cout << "Q" << k << ": cols {";
    for (size_t i = 0; i < step.cols.size(); ++i) std::cout << (i ? "," : "") << step.cols[i] + 1;
    std::cout << "} rows {";
    for (size_t i = 0; i < step.rows.size(); ++i) std::cout << (i ? "," : "") << step.rows[i] + 1;
    std::cout << "}\n";
  }
  std::cout << "z(" << col_label << "," << row_label << ") = " << run.z() << "\n";
  return 0;
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params,
                 uint64_t seed) {
  auto need = [&params](size_t n, const std::string& what) {
    if (params.size() != n) throw rees::ParseError("family expects " + what);
  };
  auto to_int = [](const std::string& s) {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      throw rees::ParseError("parameter '" + s + "' is not an integer");
    }
  };
  if (family == "banded") {
    need(1, "one parameter: n");
    std::cout << rees::format_matrix(rees::banded_diameter_family(to_int(params[0])));
  } else if (family == "clique") {
    need(1, "one parameter: n");
    std::cout << rees::format_matrix(rees::clique_family(to_int(params[0])));
  } else if (family == "brandt") {
    need(1, "one parameter: n");
    std::cout << rees::format_matrix(rees::brandt_pattern(to_int(params[0])));
  } else if (family == "random") {
    need(3, "three parameters: rows cols zero_prob");
    double prob = std::stod(params[2]);
    std::cout << rees::format_matrix(
        rees::random_regular_with_zeros(to_int(params[0]), to_int(params[1]), prob, seed));
  } else {
    throw rees::ParseError("unknown family '" + family + "'");
  }
  return 0;
}

rees::FiniteGroup fuzz_group(std::mt19937_64& rng, int max_order) {
  std::vector<rees::FiniteGroup> pool;
  for (int n = 1; n <= max_order; ++n) pool.push_back(rees::FiniteGroup::cyclic(n));
  if (max_order >= 6) pool.push_back(rees::FiniteGroup::dihedral(3));
  if (max_order >= 8) pool.push_back(rees::FiniteGroup::dihedral(4));
  return pool[rng() % pool.size()];
}

int cmd_fuzz(int count, int max_rows, int max_cols, int max_order, uint64_t seed) {
  if (max_rows < 1 || max_cols < 1 || max_order < 1)
    throw rees::ParseError("fuzz bounds must be positive");
  if (static_cast<long>(max_rows) * max_cols * max_order > rees::kOracleVertexGuard)
    throw rees::SizeLimitError("fuzz bounds exceed the oracle vertex guard");

  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  int passed = 0, failed = 0;
  std::string first_counterexample;
  for (int t = 0; t < count; ++t) {
    int rows = 1 + static_cast<int>(rng() % max_rows);
    int cols = 1 + static_cast<int>(rng() % max_cols);
    if (rows == 1 && cols == 1) cols = 2;  // a 1x1 regular matrix cannot hold a zero
    double prob = 0.15 + 0.5 * uniform();
    rees::FiniteGroup group = fuzz_group(rng, max_order);

    rees::StructuralMatrix m(1, 1, {rees::Cell::Zero});
    try {
      m = rees::random_regular_with_zeros(rows, cols, prob, rng());
    } catch (const rees::GenerationError&) {
      continue;  // resample a fresh shape
    }
    std::vector<int> cells;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        cells.push_back(m.is_zero(r, c) ? rees::SandwichMatrix::kZero
                                        : static_cast<int>(rng() % group.order()));
    rees::Instance instance{group, rees::SandwichMatrix(rows, cols, std::move(cells), group)};

    std::vector<std::string> mismatches = rees::oracle_crosscheck(instance);
    if (mismatches.empty()) {
      ++passed;
    } else {
      ++failed;
      if (first_counterexample.empty()) {
        std::ostringstream out;
        out << rees::format_group_spec(instance.group)
            << rees::format_matrix(instance.sandwich, instance.group);
        for (const auto& msg : mismatches) out << "mismatch " << msg << "\n";
        first_counterexample = out.str();
      }
    }
  }
  std::cout << "fuzz: " << passed << " passed, " << failed << " failed\n";
  if (failed > 0) {
    std::cout << "first counterexample:\n" << first_counterexample;
    return kExitMismatch;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural analysis of commuting graphs of 0-Rees matrix semigroups"};
  app.require_subcommand(1);

  std::string path, dot_path;
  bool oracle = false, json = true;
  auto* analyze = app.add_subcommand("analyze", "analyze an instance file");
  analyze->add_option("path", path)->required();
  analyze->add_flag("--oracle", oracle, "cross-check every field against the brute-force oracle");
  analyze->add_option("--dot", dot_path, "write commuting and simplified graphs as DOT files");
  analyze->add_flag("--json", json, "emit the report as JSON (default)");

  int start_row = 0, start_col = 0;
  auto* closure = app.add_subcommand("closure", "trace the block-growing method from a zero");
  closure->add_option("path", path)->required();
  closure->add_option("--start", "start cell: row column (1-based)")
      ->required()
      ->expected(2)
      ->each([&start_row, &start_col](const std::string& tok) {
        int v = std::stoi(tok);
        if (start_row == 0)
          start_row = v;
        else
          start_col = v;
      });

  std::string family;
  std::vector<std::string> params;
  uint64_t seed = 1;
  auto* generate = app.add_subcommand("generate", "print a family matrix in the input grammar");
  generate->add_option("family", family)->required();
  generate->add_option("params", params);
  generate->add_option("--seed", seed);

  int count = 100, max_rows = 4, max_cols = 4, max_order = 4;
  uint64_t fuzz_seed = 1;
  auto* fuzz = app.add_subcommand("fuzz", "formula-vs-oracle equivalence over random instances");
  fuzz->add_option("--count", count);
  fuzz->add_option("--max-rows", max_rows);
  fuzz->add_option("--max-cols", max_cols);
  fuzz->add_option("--max-order", max_order);
  fuzz->add_option("--seed", fuzz_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(path, oracle, dot_path);
    if (app.got_subcommand(closure)) return cmd_closure(path, start_row, start_col);
    if (app.got_subcommand(generate)) return cmd_generate(family, params, seed);
    if (app.got_subcommand(fuzz)) return cmd_fuzz(count, max_rows, max_cols, max_order, fuzz_seed);
  } catch (const rees::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const rees::GroupValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const rees::InvalidOrderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const rees::GenerationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const rees::ZeroFreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidMatrix;
  } catch (const rees::NotRegularError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidMatrix;
  } catch (const rees::NotAZeroError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidMatrix;
  } catch (const rees::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
