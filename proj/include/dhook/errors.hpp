#pragma once

#include <stdexcept>
#include <string>

namespace dhook {

// Bad input: precondition on a value or argument failed.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input does not describe a poset (cycles, bad ids).
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant failed, or an operation was called on a poset
// outside its contract (e.g. a non-d-complete poset).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// Text input could not be parsed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dhook
