#pragma once

#include <string>
#include <vector>

#include "reesgraph/instance.hpp"
#include "reesgraph/properties.hpp"

namespace rees {

// Checks every formula field of analyze() against the brute-force oracle on
// the explicit graphs. Returns one message per mismatching field; an empty
// result means full agreement. Throws SizeLimitError when the instance is
// outside the oracle guards.
std::vector<std::string> oracle_crosscheck(const Instance& instance);

}  // namespace rees
