#pragma once

#include <string>
#include <vector>

#include "reesgraph/errors.hpp"
#include "reesgraph/graph.hpp"

namespace rees {

// What the property formulas need to know about the group.
struct GroupProfile {
  long order = 1;
  bool abelian = true;
  bool trivial = true;
};

// A finite group given by its Cayley table. Elements are indices 0..order-1,
// table(a, b) = a*b with a acting on the left. All four group axioms are
// checked eagerly on construction; invalid tables never circulate.
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int n);  // order 2n, n >= 3
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int inverse(int a) const;

  bool is_trivial() const { return order_ == 1; }
  bool is_abelian() const;
  std::vector<int> center() const;
  GroupProfile profile() const;

  // Optional element names, used only in reports.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

 private:
  FiniteGroup(int order, std::vector<int> table, int identity);
  void validate() const;

  int order_;
  std::vector<int> table_;  // row-major order_*order_
  int identity_;
  std::vector<std::string> labels_;
};

// Graph on the non-central elements of g, edges between distinct commuting
// elements. Abelian groups have an empty vertex set and are rejected.
SimpleGraph commuting_graph_of_group(const FiniteGroup& g);

}  // namespace rees
