#pragma once

#include <iosfwd>
#include <string>

#include "reesgraph/group.hpp"
#include "reesgraph/matrix.hpp"

namespace rees {

// A parsed instance file: one group spec and one sandwich matrix.
//
// Grammar (blank lines allowed between stanzas):
//   group cyclic <n> | group dihedral <n> | group table <n>
//   <n lines of n space-separated element indices>   (table form only)
//   matrix <rows> <cols>
//   <rows lines of cols tokens>    0 = zero, x = star (identity), g<k> = element k
struct Instance {
  FiniteGroup group;
  SandwichMatrix sandwich;

  StructuralMatrix structural_matrix() const { return structural(sandwich); }
};

Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);

// Matrix in the input grammar, one token per cell. Structural matrices print
// 0/x; sandwich matrices print 0 and g<k> (x for the identity).
std::string format_matrix(const StructuralMatrix& m);
std::string format_matrix(const SandwichMatrix& p, const FiniteGroup& group);
std::string format_group_spec(const FiniteGroup& group);

}  // namespace rees
