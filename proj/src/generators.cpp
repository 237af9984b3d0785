#include "reesgraph/generators.hpp"

#include <random>
#include <string>

namespace rees {

StructuralMatrix banded_diameter_family(int n) {
  if (n < 2) throw GenerationError("banded diameter family needs n >= 2");
  int size = n + 1;
  StructuralMatrix m = StructuralMatrix::filled(size, size, Cell::Star);
  for (int r = 0; r < size; ++r) {
    m.set(r, r, Cell::Zero);
    if (r < size - 1) m.set(r, r + 1, Cell::Zero);
  }
  m.set(size - 1, 0, Cell::Zero);
  return m;
}

StructuralMatrix clique_family(int n) {
  if (n < 1) throw GenerationError("clique family needs n >= 1");
  StructuralMatrix m = StructuralMatrix::filled(2, n + 1, Cell::Star);
  for (int c = 0; c < n; ++c) m.set(0, c, Cell::Zero);
  return m;
}

StructuralMatrix brandt_pattern(int n) {
  if (n < 2) throw GenerationError("brandt pattern needs n >= 2");
  return patterns::diagonal(n);
}

StructuralMatrix random_regular_with_zeros(int rows, int cols, double zero_prob, uint64_t seed) {
  if (rows < 1 || cols < 1) throw GenerationError("matrix dimensions must be positive");
  if (!(zero_prob > 0.0 && zero_prob < 1.0))
    throw GenerationError("zero probability must lie strictly between 0 and 1");

  std::mt19937_64 rng(seed);
  // Uniform double in [0,1) built directly from the generator so draws are
  // identical across standard library implementations.
  auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  constexpr int kMaxRejections = 10000;
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    StructuralMatrix m = StructuralMatrix::filled(rows, cols, Cell::Star);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (uniform() < zero_prob) m.set(r, c, Cell::Zero);
    if (is_regular(m) && has_zero(m)) return m;
  }
  throw GenerationError("no regular matrix with a zero found in " + std::to_string(10000) +
                        " draws for " + std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace rees
