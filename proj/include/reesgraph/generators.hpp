#pragma once

#include <cstdint>

#include "reesgraph/matrix.hpp"

namespace rees {

// (n+1) x (n+1) matrix with zeros exactly at (r, r), at (r, r+1) for
// r < n+1, and at (n+1, 1); its commuting graph is connected with
// diameter n for every group.
StructuralMatrix banded_diameter_family(int n);  // n >= 2

// 2 x (n+1) matrix: row 1 is n zeros then a star, row 2 all stars. Clique
// number and chromatic number are both n over the trivial group.
StructuralMatrix clique_family(int n);  // n >= 1

// The n x n pattern with stars on the diagonal and zeros elsewhere.
StructuralMatrix brandt_pattern(int n);  // n >= 2

// Each cell is independently Zero with probability zero_prob; draws are
// rejected until the matrix is regular with at least one zero. Deterministic
// for a fixed seed; gives up after 10^4 rejections.
StructuralMatrix random_regular_with_zeros(int rows, int cols, double zero_prob, uint64_t seed);

}  // namespace rees
