#pragma once

#include <stdexcept>

namespace fracat {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction would exceed the configured group-order cap.
struct CapExceeded : Error {
  using Error::Error;
};

// A structural invariant of a value does not hold.
struct InvariantViolation : Error {
  using Error::Error;
};

// Arguments are outside an operation's contract (object mismatch, containment, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// A definition document could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace fracat
