#pragma once

#include <stdexcept>
#include <string>

namespace codegree {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated precondition (degree mismatch, element not in group, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Enumeration or class-count cap exceeded.
struct CapError : Error {
  using Error::Error;
};

/// Character-table machinery could not complete (no usable prime,
/// eigenspace refinement stuck, integrality violated).
struct TableError : Error {
  using Error::Error;
};

/// Group-spec DSL syntax error, annotated with a byte offset.
struct SpecParseError : Error {
  size_t position;
  SpecParseError(const std::string& what, size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace codegree
