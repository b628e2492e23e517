#pragma once

#include <stdexcept>
#include <string>

namespace regrade {

// Mismatched lengths or dimensions (element vs. group, vector vs. algebra).
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the operation's domain (n < 2, inverse of zero, degree cap).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A constructed object violates its defining laws (bicharacter identities,
// cocycle identity, grading consistency, associativity, unit law).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical verdict is negative where an operation requires it positive
// (no bicharacter extractable, decomposition not minimal).
struct NotRegularError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A state that valid inputs cannot produce; signals corrupted input data.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace regrade
