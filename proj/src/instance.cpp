#include "reesgraph/instance.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace rees {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string next_content_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!tokens_of(line).empty()) return line;
  }
  return {};
}

int parse_int(const std::string& tok, const std::string& what) {
  size_t pos = 0;
  int value;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError("trailing characters in integer '" + tok + "'");
  return value;
}

FiniteGroup parse_group(const std::vector<std::string>& header, std::istream& in) {
  if (header.size() != 3) throw ParseError("group spec needs a kind and one parameter");
  const std::string& kind = header[1];
  int n = parse_int(header[2], "group parameter");
  if (kind == "cyclic") return FiniteGroup::cyclic(n);
  if (kind == "dihedral") return FiniteGroup::dihedral(n);
  if (kind == "table") {
    std::vector<std::vector<int>> table;
    for (int r = 0; r < n; ++r) {
      std::string line = next_content_line(in);
      std::vector<std::string> toks = tokens_of(line);
      if (static_cast<int>(toks.size()) != n)
        throw ParseError("group table row " + std::to_string(r + 1) + " has " +
                         std::to_string(toks.size()) + " entries, expected " + std::to_string(n));
      std::vector<int> row;
      for (const auto& t : toks) row.push_back(parse_int(t, "table entry"));
      table.push_back(std::move(row));
    }
    return FiniteGroup::from_table(table);
  }
  throw ParseError("unknown group kind '" + kind + "'");
}

SandwichMatrix parse_matrix(const std::vector<std::string>& header, std::istream& in,
                            const FiniteGroup& group) {
  if (header.size() != 3) throw ParseError("matrix spec needs row and column counts");
  int rows = parse_int(header[1], "matrix rows");
  int cols = parse_int(header[2], "matrix cols");
  if (rows < 1 || cols < 1) throw ParseError("matrix dimensions must be positive");
  std::vector<int> cells;
  cells.reserve(static_cast<size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    std::string line = next_content_line(in);
    std::vector<std::string> toks = tokens_of(line);
    if (static_cast<int>(toks.size()) != cols)
      throw ParseError("matrix row " + std::to_string(r + 1) + " has " +
                       std::to_string(toks.size()) + " tokens, expected " + std::to_string(cols));
    for (const auto& t : toks) {
      if (t == "0") {
        cells.push_back(SandwichMatrix::kZero);
      } else if (t == "x") {
        cells.push_back(group.identity());
      } else if (t.size() > 1 && t[0] == 'g') {
        int k = parse_int(t.substr(1), "group element token");
        if (k < 0 || k >= group.order())
          throw ParseError("token '" + t + "' is not an element of a group of order " +
                           std::to_string(group.order()));
        cells.push_back(k);
      } else {
        throw ParseError("unknown matrix token '" + t + "'");
      }
    }
  }
  return SandwichMatrix(rows, cols, std::move(cells), group);
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::optional<FiniteGroup> group;
  std::optional<SandwichMatrix> sandwich;

  for (;;) {
    std::string line = next_content_line(in);
    if (line.empty()) break;
    std::vector<std::string> toks = tokens_of(line);
    if (toks[0] == "group") {
      if (group) throw ParseError("duplicate group spec");
      group = parse_group(toks, in);
    } else if (toks[0] == "matrix") {
      if (sandwich) throw ParseError("duplicate matrix spec");
      // The matrix grammar needs the group for its g<k> tokens.
      if (!group) throw ParseError("matrix spec must come after the group spec");
      sandwich = parse_matrix(toks, in, *group);
    } else {
      throw ParseError("unexpected directive '" + toks[0] + "'");
    }
  }
  if (!group) throw ParseError("instance file has no group spec");
  if (!sandwich) throw ParseError("instance file has no matrix spec");
  return Instance{std::move(*group), std::move(*sandwich)};
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  return parse_instance(in);
}

std::string format_matrix(const StructuralMatrix& m) {
  std::ostringstream out;
  out << "matrix " << m.rows() << " " << m.cols() << "\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << " ";
      out << (m.is_zero(r, c) ? "0" : "x");
    }
    out << "\n";
  }
  return out.str();
}

std::string format_matrix(const SandwichMatrix& p, const FiniteGroup& group) {
  std::ostringstream out;
  out << "matrix " << p.rows() << " " << p.cols() << "\n";
  for (int r = 0; r < p.rows(); ++r) {
    for (int c = 0; c < p.cols(); ++c) {
      if (c) out << " ";
      int v = p.at(r, c);
      if (v == SandwichMatrix::kZero)
        out << "0";
      else if (v == group.identity())
        out << "x";
      else
        out << "g" << v;
    }
    out << "\n";
  }
  return out.str();
}

std::string format_group_spec(const FiniteGroup& group) {
  // Groups constructed from tables round-trip through the table form; the
  // two named families cannot be recognized reliably, so emit the table.
  std::ostringstream out;
  out << "group table " << group.order() << "\n";
  for (int a = 0; a < group.order(); ++a) {
    for (int b = 0; b < group.order(); ++b) {
      if (b) out << " ";
      out << group.mul(a, b);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace rees
