#pragma once

#include <stdexcept>
#include <string>

namespace stacky {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: unparsable files, violated structural
// invariants, values attached to different curves. CLI exit code 2.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Structurally valid input outside an operation's domain: nonpositive rank
// where positive rank is required, a non-generating polarization, a
// degenerate segment. CLI exit code 3.
class DomainError : public Error {
public:
  using Error::Error;
};

} // namespace stacky
