#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace rees {

// A multiplication table failed one of the group axioms. Carries the axiom
// name and the witness indices that violate it (unused slots are -1).
struct GroupValidationError : std::runtime_error {
  std::string axiom;
  std::array<int, 3> witness;
  GroupValidationError(std::string ax, std::array<int, 3> w, const std::string& msg)
      : std::runtime_error(msg), axiom(std::move(ax)), witness(w) {}
};

struct InvalidOrderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix has a row or column without a non-zero entry.
struct NotRegularError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The formula engine only covers matrices with at least one zero; the
// zero-free case belongs to the completely simple setting.
struct ZeroFreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A component descriptor was paired with a matrix it was not computed from.
struct DescriptorMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rees
