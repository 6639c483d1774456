#pragma once

#include <stdexcept>
#include <string>

namespace gring {

/// Base class of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed spec strings, words or JSON payloads.
struct ParseError : Error {
  using Error::Error;
};

/// Structurally invalid inputs: mixed groups, non-central elements,
/// generator maps that violate the group relations.
struct DomainError : Error {
  using Error::Error;
};

/// Queries outside an enumerated ball or a declared domain.
struct OutOfRangeError : Error {
  using Error::Error;
};

/// Configured enumeration budget exceeded.
struct ResourceError : Error {
  using Error::Error;
};

/// Composition of morphisms whose boundaries do not match.
struct ComposeError : Error {
  using Error::Error;
};

}  // namespace gring
